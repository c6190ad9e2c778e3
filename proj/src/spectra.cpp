#include "cusplab/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "cusplab/errors.hpp"
#include "cusplab/numerics.hpp"

namespace cusplab::spectra {

namespace {

// Levels this close outside [2δ − 1, δ] are rounding, not user error.
constexpr double kRangeSlack = 8 * std::numeric_limits<double>::epsilon();

void check_delta(double delta) {
  if (delta == 1.0) {
    throw DegenerateCase("δ = 1: the spectrum interval [2δ − 1, δ] collapses to a point and fp is 0/0");
  }
  if (!(delta > 0.5 && delta < 1.0)) throw DomainError("δ must lie in (1/2, 1)");
}

void check_beta(double beta, double delta) {
  if (!(beta >= 2.0 * delta - 1.0 - kRangeSlack && beta <= delta + kRangeSlack)) {
    throw DomainError("β = " + std::to_string(beta) + " lies outside [2δ − 1, δ]");
  }
}

}  // namespace

double global_measure_log(const MeasureProbe& probe, double delta) {
  if (!(delta > 0.5 && delta <= 1.0)) throw DomainError("δ must lie in (1/2, 1]");
  if (!(probe.t > 0.0)) throw DomainError("probe time must be > 0");
  if (!(probe.penetration >= 0.0)) throw DomainError("probe penetration must be >= 0");
  if (probe.k != 1.0 && probe.k != delta) throw DomainError("probe k must be 1 or δ");
  return -probe.t * delta - (delta - probe.k) * probe.penetration;
}

LocalDimension local_dim_sequence(const excursions::ExcursionTrace& trace, double delta, double tail_fraction) {
  check_delta(delta);
  if (trace.entered.size() < 2) throw DomainError("local_dim_sequence: need at least 2 excursions");
  LocalDimension out;
  out.beta.reserve(trace.entered.size());
  for (const auto& rec : trace.entered) {
    // At time t_n the probe sits at depth d_n inside a standard horoball.
    out.beta.push_back(delta - (1.0 - delta) * rec.depth / rec.time);
  }
  out.tail_sup = numerics::tail_sup(out.beta, tail_fraction);
  out.tail_inf = numerics::tail_inf(out.beta, tail_fraction);
  return out;
}

double theta_to_beta(double theta, double delta) {
  check_delta(delta);
  if (!(theta >= 0.0 && theta <= 1.0)) throw DomainError("θ must lie in [0, 1]");
  return delta - (1.0 - delta) * theta;
}

double beta_to_theta(double beta, double delta) {
  check_delta(delta);
  check_beta(beta, delta);
  return std::clamp((delta - beta) / (1.0 - delta), 0.0, 1.0);
}

double fp(double beta, double delta) {
  check_delta(delta);
  check_beta(beta, delta);
  // (β − δ) + (1 − δ) keeps the numerator's rounding relative to 1 − δ.
  return std::clamp(((beta - delta) + (1.0 - delta)) / (1.0 - delta), 0.0, 1.0);
}

double strict_spectrum(double beta, double delta) { return 0.5 * fp(beta, delta); }

double stratmann_spectrum(double beta, double delta) {
  check_delta(delta);
  if (!(beta > 0.0)) throw DomainError("stratmann_spectrum: β must be > 0");
  if (beta <= 2.0 * delta - 1.0) return 0.0;
  if (beta <= delta) return delta * fp(beta, delta);
  return delta;
}

std::vector<SpectrumRow> spectrum_table(double delta, std::size_t points) {
  check_delta(delta);
  if (points < 2) throw DomainError("spectrum_table: need at least 2 points");
  const double lo = 2.0 * delta - 1.0;
  std::vector<SpectrumRow> rows;
  rows.reserve(points);
  for (std::size_t i = 0; i < points; ++i) {
    const double beta = i + 1 == points ? delta : lo + (delta - lo) * static_cast<double>(i) / static_cast<double>(points - 1);
    rows.push_back({beta, strict_spectrum(beta, delta), beta > 0.0 ? stratmann_spectrum(beta, delta) : 0.0});
  }
  return rows;
}

}  // namespace cusplab::spectra
