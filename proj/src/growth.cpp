#include "cusplab/growth.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "cusplab/errors.hpp"
#include "cusplab/numerics.hpp"

namespace cusplab::growth {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr std::size_t kTraceLookahead = 60;

}  // namespace

GrowthSequence GrowthSequence::log_geometric(double alpha, double base) {
  if (!(alpha >= 1.0) || !(base > 1.0) || !std::isfinite(alpha) || !std::isfinite(base)) {
    throw DomainError("log-geometric generator needs α >= 1 and base > 1");
  }
  GrowthSequence g;
  g.kind_ = GeneratorKind::LogGeometric;
  g.p1_ = alpha;
  g.p2_ = base;
  return g;
}

GrowthSequence GrowthSequence::geometric(double c) {
  if (!(c >= 1.0) || !std::isfinite(c)) throw DomainError("geometric generator needs c >= 1");
  GrowthSequence g;
  g.kind_ = GeneratorKind::Geometric;
  g.p1_ = c;
  return g;
}

GrowthSequence GrowthSequence::polynomial(double c, double p) {
  if (!(c >= 1.0) || !(p >= 0.0) || !std::isfinite(c) || !std::isfinite(p)) {
    throw DomainError("polynomial generator needs c >= 1 and p >= 0");
  }
  GrowthSequence g;
  g.kind_ = GeneratorKind::Polynomial;
  g.p1_ = c;
  g.p2_ = p;
  return g;
}

GrowthSequence GrowthSequence::explicit_values(std::vector<double> values) {
  if (values.empty()) throw DomainError("explicit sequence is empty");
  GrowthSequence g;
  g.kind_ = GeneratorKind::Explicit;
  g.explicit_log_.reserve(values.size());
  for (double v : values) {
    if (!(v >= 1.0) || !std::isfinite(v)) throw DomainError("explicit sequence needs finite terms >= 1");
    g.explicit_log_.push_back(std::log(v));
  }
  return g;
}

GrowthSequence GrowthSequence::spiked(double omega, std::size_t period) {
  if (!(omega > 0.0) || !std::isfinite(omega)) throw DomainError("spiked generator needs ω > 0");
  if (period < 2) throw DomainError("spiked generator needs period >= 2");
  GrowthSequence g;
  g.kind_ = GeneratorKind::Spiked;
  g.p1_ = omega;
  g.period_ = period;
  return g;
}

std::optional<std::size_t> GrowthSequence::length() const {
  if (kind_ == GeneratorKind::Explicit) return explicit_log_.size();
  return std::nullopt;
}

std::vector<double> GrowthSequence::log_values(std::size_t n) const {
  std::vector<double> out(n);
  switch (kind_) {
    case GeneratorKind::LogGeometric: {
      const double lb = std::log(p2_);
      const double la = std::log(p1_);
      for (std::size_t i = 0; i < n; ++i) out[i] = std::exp(static_cast<double>(i + 1) * la) * lb;
      break;
    }
    case GeneratorKind::Geometric:
      for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<double>(i + 1) * std::log(p1_);
      break;
    case GeneratorKind::Polynomial:
      for (std::size_t i = 0; i < n; ++i) out[i] = std::log(p1_) + p2_ * std::log(static_cast<double>(i + 1));
      break;
    case GeneratorKind::Explicit:
      if (n > explicit_log_.size()) {
        throw InsufficientData("explicit sequence has " + std::to_string(explicit_log_.size()) + " terms, " +
                               std::to_string(n) + " requested");
      }
      std::copy_n(explicit_log_.begin(), n, out.begin());
      break;
    case GeneratorKind::Spiked: {
      double past = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        const std::size_t idx = i + 1;
        out[i] = idx % period_ == 0 ? 2.0 * p1_ * past : 1.0 + std::log(static_cast<double>(idx + 1));
        past += out[i];
      }
      break;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::isfinite(out[i])) {
      throw DomainError("log s_" + std::to_string(i + 1) + " overflows; use a shorter horizon");
    }
  }
  return out;
}

std::vector<double> GrowthSequence::log_digits(std::size_t n) const {
  auto out = log_values(n);
  for (double& v : out) {
    // Below 2^52 the digit is an exactly representable integer.
    if (v < 36.0) v = std::log(std::max(1.0, std::round(std::exp(v))));
  }
  return out;
}

std::optional<double> GrowthSequence::closed_omega() const {
  switch (kind_) {
    case GeneratorKind::LogGeometric:
      return (p1_ - 1.0) / 2.0;
    case GeneratorKind::Geometric:
    case GeneratorKind::Polynomial:
      return 0.0;
    case GeneratorKind::Spiked:
      return p1_;
    case GeneratorKind::Explicit:
      break;
  }
  return std::nullopt;
}

std::optional<double> GrowthSequence::closed_rho() const {
  if (auto w = closed_omega()) return rho_from_omega(*w);
  return std::nullopt;
}

bool GrowthSequence::admissible() const {
  switch (kind_) {
    case GeneratorKind::LogGeometric:
      return true;  // α >= 1 and b > 1 give αⁿ log b >= log b, growing for α > 1
    case GeneratorKind::Geometric:
      return p1_ > 1.0;
    case GeneratorKind::Polynomial:
      return p2_ > 0.0;
    case GeneratorKind::Spiked:
      return true;
    case GeneratorKind::Explicit: {
      const std::size_t m = explicit_log_.size();
      if (m < 4) return false;
      const auto mid = explicit_log_.begin() + static_cast<std::ptrdiff_t>(m / 2);
      return *std::min_element(mid, explicit_log_.end()) > *std::min_element(explicit_log_.begin(), mid);
    }
  }
  return false;
}

std::string GrowthSequence::describe() const {
  std::ostringstream os;
  os.precision(17);
  switch (kind_) {
    case GeneratorKind::LogGeometric:
      os << "loggeom:" << p1_ << "," << p2_;
      break;
    case GeneratorKind::Geometric:
      os << "geom:" << p1_;
      break;
    case GeneratorKind::Polynomial:
      os << "poly:" << p1_ << "," << p2_;
      break;
    case GeneratorKind::Spiked:
      os << "spiked:" << p1_ << "," << period_;
      break;
    case GeneratorKind::Explicit:
      os << "explicit:" << explicit_log_.size() << " terms";
      break;
  }
  return os.str();
}

double rho_from_omega(double omega) {
  if (!(omega >= 0.0)) throw DomainError("ω must be >= 0");
  return 1.0 / (2.0 * (1.0 + omega));
}

double jarnik_dimension(double theta) {
  if (!(theta >= 0.0 && theta <= 1.0)) throw DomainError("jarnik_dimension: θ must lie in [0, 1]");
  return (1.0 - theta) / 2.0;
}

OmegaRho seq_omega_rho(const GrowthSequence& seq, std::size_t n_max, double inflation_K, double tail_fraction) {
  if (n_max < 2) throw DomainError("seq_omega_rho: n_max must be >= 2");
  if (!(inflation_K >= 1.0)) throw DomainError("seq_omega_rho: K must be >= 1");
  if (!seq.admissible()) throw DomainError("seq_omega_rho: sequence is not admissible (s_n does not tend to ∞)");
  const auto ls = seq.log_values(n_max + 1);
  const double log_K = std::log(inflation_K);

  OmegaRho out;
  out.omega_hat.resize(n_max);
  out.rho_hat.resize(n_max);
  out.rho_hat_inflated.resize(n_max);
  double past = 0.0;  // log(s_1 ⋯ s_{n−1})
  for (std::size_t n = 1; n <= n_max; ++n) {
    const double cur = ls[n - 1];
    out.omega_hat[n - 1] = past > 0.0 ? cur / (2.0 * past) : kNaN;
    past += cur;
    const double denom = 2.0 * past + ls[n];
    out.rho_hat[n - 1] = denom > 0.0 ? past / denom : kNaN;
    const double denom_K = denom + 2.0 * static_cast<double>(n) * log_K;
    out.rho_hat_inflated[n - 1] = denom_K > 0.0 ? past / denom_K : kNaN;
  }
  out.omega_estimate = numerics::tail_sup(out.omega_hat, tail_fraction);
  out.rho_estimate = numerics::tail_inf(out.rho_hat, tail_fraction);
  out.rho_inflated_estimate = numerics::tail_inf(out.rho_hat_inflated, tail_fraction);
  out.omega_closed = seq.closed_omega();
  out.rho_closed = seq.closed_rho();
  return out;
}

excursions::ExcursionTrace synthesize_trace(const GrowthSequence& seq, std::size_t horizon) {
  std::size_t want = horizon + kTraceLookahead;
  if (auto m = seq.length()) want = std::min(want, *m);
  return excursions::excursion_trace_log(seq.log_digits(want), horizon);
}

}  // namespace cusplab::growth
