#include "cusplab/frostman.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "cusplab/errors.hpp"
#include "cusplab/parallel.hpp"
#include "cusplab/rng.hpp"

namespace cusplab::frostman {

namespace {

// Support of a node, as the tail t ranges over [t_lo, t_hi], under
// x = (p + t·p_prev) / (q + t·q_prev).
struct Node {
  double p, q, p_prev, q_prev;
};

std::pair<double, double> support(const Node& n, double t_lo, double t_hi) {
  const double a = (n.p + t_lo * n.p_prev) / (n.q + t_lo * n.q_prev);
  const double b = (n.p + t_hi * n.p_prev) / (n.q + t_hi * n.q_prev);
  return {std::min(a, b), std::max(a, b)};
}

}  // namespace

void CylinderMeasure::finish() {
  if (weights_.empty()) throw DomainError("cylinder measure needs at least one digit");
  double total = 0.0;
  for (double w : weights_) {
    if (!(w >= 0.0) || !std::isfinite(w)) throw DomainError("cylinder weights must be finite and >= 0");
    total += w;
  }
  if (!(total > 0.0) || !std::isfinite(total)) throw DomainError("cylinder weights cannot be normalized");
  for (double& w : weights_) w /= total;
  cumulative_.resize(weights_.size());
  std::partial_sum(weights_.begin(), weights_.end(), cumulative_.begin());
  cumulative_.back() = 1.0;
}

CylinderMeasure CylinderMeasure::good_set(double tau, double kappa) {
  if (!(tau >= 1.0) || !std::isfinite(tau)) throw DomainError("good_set: τ must be >= 1");
  if (!(kappa > 0.0) || !std::isfinite(kappa)) throw DomainError("good_set: κ must be > 0");
  const auto lower = static_cast<Digit>(std::floor(tau));
  const double target = std::exp(kappa / 2.0);
  double sum = 0.0;
  Digit upper = lower;
  // Σ 1/(a + 1) diverges, so this stops; it needs about e^{e^{κ/2}} τ terms.
  for (Digit a = lower;; ++a) {
    sum += 1.0 / (static_cast<double>(a) + 1.0);
    if (sum > target && a >= lower + 1) {
      upper = a;
      break;
    }
    if (a - lower > 50'000'000) throw DomainError("good_set: κ too large for a finite digit range");
  }
  auto m = harmonic(lower, upper);
  return m;
}

CylinderMeasure CylinderMeasure::harmonic(Digit lower, Digit upper) {
  if (lower < 1 || upper < lower) throw DomainError("digit range needs 1 <= lower <= upper");
  std::vector<double> w;
  w.reserve(upper - lower + 1);
  double s = 0.0;
  for (Digit a = lower; a <= upper; ++a) {
    w.push_back(1.0 / (static_cast<double>(a) + 1.0));
    s += w.back();
  }
  auto m = from_weights(lower, std::move(w));
  m.normalizer_ = s;
  return m;
}

CylinderMeasure CylinderMeasure::uniform(Digit lower, Digit upper) {
  if (lower < 1 || upper < lower) throw DomainError("digit range needs 1 <= lower <= upper");
  return from_weights(lower, std::vector<double>(upper - lower + 1, 1.0));
}

CylinderMeasure CylinderMeasure::from_weights(Digit lower, std::vector<double> weights) {
  if (lower < 1) throw DomainError("digits must be >= 1");
  CylinderMeasure m;
  m.lower_ = lower;
  m.weights_ = std::move(weights);
  m.finish();
  return m;
}

Digit CylinderMeasure::draw(double u) const {
  const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
  const auto idx = std::min<std::size_t>(static_cast<std::size_t>(it - cumulative_.begin()), weights_.size() - 1);
  return lower_ + idx;
}

double CylinderMeasure::cylinder_mass(const std::vector<Digit>& digits) const {
  double m = 1.0;
  for (Digit a : digits) {
    if (a < lower_ || a > upper()) return 0.0;
    m *= weights_[a - lower_];
  }
  return m;
}

double CylinderMeasure::interval_mass(double x, double y, double resolution) const {
  if (!(y > x)) return 0.0;
  const double t_lo = 1.0 / (static_cast<double>(upper()) + 1.0);
  const double t_hi = 1.0 / static_cast<double>(lower_);
  const double min_len = resolution * (y - x);

  auto descend = [&](auto&& self, const Node& node, double mass) -> double {
    double total = 0.0;
    for (std::size_t k = 0; k < weights_.size(); ++k) {
      const double w = mass * weights_[k];
      if (w == 0.0) continue;
      const double a = static_cast<double>(lower_ + k);
      const Node child{a * node.p + node.p_prev, a * node.q + node.q_prev, node.p, node.q};
      const auto [lo, hi] = support(child, t_lo, t_hi);
      if (hi < x || lo > y) continue;
      if (lo >= x && hi <= y) {
        total += w;
      } else if (hi - lo < min_len) {
        total += 0.5 * w;
      } else {
        total += self(self, child, w);
      }
    }
    return total;
  };
  return descend(descend, Node{0.0, 1.0, 1.0, 0.0}, 1.0);
}

std::vector<double> FrostmanOptions::default_radii() {
  std::vector<double> r;
  for (int k = 0; k <= 24; ++k) r.push_back(std::pow(10.0, -2.0 - 0.25 * k));
  return r;
}

FrostmanReport frostman_sampler(const CylinderMeasure& measure, const FrostmanOptions& opt) {
  if (opt.samples == 0) throw DomainError("frostman: sample count must be >= 1");
  if (opt.depth == 0) throw DomainError("frostman: depth must be >= 1");
  if (opt.radii.empty()) throw DomainError("frostman: radius grid is empty");
  for (double r : opt.radii) {
    if (!(r > 0.0 && r < 1.0)) throw DomainError("frostman: radii must lie in (0, 1)");
  }
  const std::size_t R = opt.radii.size();
  FrostmanReport rep;
  rep.probes.resize(opt.samples * R);
  parallel_for(opt.samples, [&](std::size_t s) {
    const CounterRng rng(opt.seed, s);
    std::vector<Digit> digits(opt.depth);
    for (std::size_t k = 0; k < opt.depth; ++k) digits[k] = measure.draw(rng.uniform(k));
    double xi = 0.0;
    for (std::size_t k = opt.depth; k-- > 0;) xi = 1.0 / (static_cast<double>(digits[k]) + xi);
    for (std::size_t j = 0; j < R; ++j) {
      const double r = opt.radii[j];
      const double mass = measure.interval_mass(xi - r, xi + r);
      rep.probes[s * R + j] = {s, xi, r, mass, std::log(mass) / std::log(r)};
    }
  });

  // Pooled least squares of log ν on log r.
  double mx = 0.0, my = 0.0;
  std::size_t count = 0;
  rep.min_ratio = INFINITY;
  for (const auto& p : rep.probes) {
    mx += std::log(p.r);
    my += std::log(p.mass);
    ++count;
    rep.min_ratio = std::min(rep.min_ratio, p.log_ratio);
  }
  mx /= static_cast<double>(count);
  my /= static_cast<double>(count);
  double sxy = 0.0, sxx = 0.0;
  for (const auto& p : rep.probes) {
    const double dx = std::log(p.r) - mx;
    sxy += dx * (std::log(p.mass) - my);
    sxx += dx * dx;
  }
  // A single radius leaves the slope undefined; fall back to the ratio.
  rep.fitted_exponent = sxx > 0.0 ? sxy / sxx : rep.min_ratio;
  return rep;
}

}  // namespace cusplab::frostman
