#include "cusplab/excursions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "cusplab/errors.hpp"
#include "cusplab/numerics.hpp"

namespace cusplab::excursions {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kLog2 = std::numbers::ln2;
// Digits read past the horizon so the tail values x_{n+1} are accurate.
constexpr std::size_t kLookahead = 60;

double log1pexp(double v) {
  if (v > 30.0) return v + std::log1p(std::exp(-v));
  return std::log1p(std::exp(v));
}

// Work in frame n, the image of the ray under the map that sends p_n/q_n to
// ∞ and its Ford circle to {y > 1}. There the ray lies on the semicircle over
// (−u_n, x_{n+1}) with x_{n+1} = [a_{n+1}; a_{n+2}, ...], u_0 = ξ and
// u_{n+1} = 1/(a_{n+1} + u_n). The depth is log of the radius. Consecutive
// frames differ by z ↦ 1/(conj(z) − a_{n+1}), which fixes the ray's
// orientation, and the apex of frame n+1 sits at arclength
// log x_{n+2} − log u_{n+1} past the apex of frame n. Every quantity below
// is a difference of logs that stays O(1) however large the digits are.
struct Frames {
  std::vector<double> depth;  // d_k
  std::vector<double> step;   // apex-to-apex arclength minus d_k + d_{k+1}
  double lx1 = 0.0;           // log x_1: arclength from i to apex 0
};

Frames build_frames(std::span<const double> la) {
  const std::size_t J = la.size();
  std::vector<double> lx(J);
  lx[J - 1] = la[J - 1];
  for (std::size_t j = J - 1; j-- > 0;) lx[j] = la[j] + std::log1p(std::exp(-la[j] - lx[j + 1]));
  std::vector<double> lu(J);
  lu[0] = -lx[0];
  for (std::size_t k = 0; k + 1 < J; ++k) lu[k + 1] = -(la[k] + log1pexp(lu[k] - la[k]));

  Frames f;
  f.lx1 = lx[0];
  f.depth.resize(J);
  std::vector<double> near(J);  // log(x_{k+1} / (x_{k+1} + u_k))
  for (std::size_t k = 0; k < J; ++k) {
    near[k] = -log1pexp(lu[k] - lx[k]);
    f.depth[k] = lx[k] - near[k] - kLog2;
  }
  f.step.resize(J - 1);
  for (std::size_t k = 0; k + 1 < J; ++k) {
    // log((a + u_k)/(a + 1/x_{k+2})) with a = a_{k+1}
    const double e = log1pexp(lu[k] - la[k]) - log1pexp(-lx[k + 1] - la[k]);
    f.step[k] = e + near[k] + near[k + 1] + 2.0 * kLog2;
  }
  return f;
}

// log(1 + sqrt(1 − e^{−2d})): half-chord minus depth.
double chord_excess(double d) { return std::log1p(std::sqrt(-std::expm1(-2.0 * d))); }

ExcursionTrace assemble(std::span<const double> la, std::size_t horizon) {
  const Frames f = build_frames(la);
  const std::size_t J = la.size();
  ExcursionTrace trace;
  trace.horizon = horizon;

  std::optional<std::size_t> prev;  // index of the last entered ball
  double prev_exit = 0.0;
  double prev_excess = 0.0;
  double run = 0.0;  // Σ step_j + 2 Σ d_j (skipped) since the anchor
  for (std::size_t k = 0; k < J; ++k) {
    const double d = f.depth[k];
    if (!(d > 0.0)) {
      if (k < horizon) {
        Excursion rec;
        rec.index = k;
        rec.log_digit = la[k];
        rec.depth = d;
        rec.entry = rec.exit = rec.time = rec.gap = kNaN;
        trace.skipped.push_back(rec);
      }
      if (k > 0) run += 2.0 * d;
      if (k + 1 < J) run += f.step[k];
      continue;
    }
    const double excess = chord_excess(d);
    double entry = 0.0;
    if (prev) {
      // Consecutive chords never overlap; clamp rounding noise when the ray
      // passes through the tangency point of two circles.
      const double gap = std::max(0.0, run - prev_excess - excess);
      if (*prev < horizon) trace.entered.back().gap = gap;
      entry = prev_exit + gap;
    } else if (k > 0) {
      // Ball 0 was missed numerically; measure from i, which sits lx1 before apex 0.
      entry = f.lx1 + f.depth[0] + run - excess;
    }
    if (k >= horizon) break;
    Excursion rec;
    rec.index = k;
    rec.log_digit = la[k];
    rec.depth = d;
    rec.entry = entry;
    rec.exit = entry + 2.0 * (d + excess);
    rec.time = entry + d;
    rec.gap = kNaN;
    trace.entered.push_back(rec);
    prev = k;
    prev_exit = rec.exit;
    prev_excess = excess;
    run = (k + 1 < J) ? f.step[k] : 0.0;
  }
  return trace;
}

}  // namespace

ExcursionTrace excursion_trace_log(std::span<const double> log_digits, std::size_t horizon) {
  if (horizon == 0) throw DomainError("excursion_trace: horizon must be >= 1");
  if (log_digits.size() < horizon + 2) {
    throw InsufficientData("excursion_trace: need " + std::to_string(horizon + 2) + " digits, got " +
                           std::to_string(log_digits.size()));
  }
  for (double v : log_digits) {
    if (!(v >= 0.0) || !std::isfinite(v)) throw DomainError("excursion_trace: log-digits must be finite and >= 0");
  }
  const std::size_t used = std::min(log_digits.size(), horizon + kLookahead);
  return assemble(log_digits.first(used), horizon);
}

ExcursionTrace excursion_trace(const cf::ContinuedFraction& xi, std::size_t horizon) {
  if (xi.integer_part() != 0) throw DomainError("excursion_trace: ξ must lie in (0, 1)");
  const std::size_t need = horizon + 2;
  if (xi.size() < need || xi.reliable_digits() < need) {
    throw InsufficientData("excursion_trace: need " + std::to_string(need) + " reliable digits");
  }
  const std::size_t used = std::min(xi.size(), horizon + kLookahead);
  const auto digits = xi.digits(used);
  std::vector<double> la(used);
  for (std::size_t j = 0; j < used; ++j) la[j] = std::log(static_cast<double>(digits[j]));
  ExcursionTrace trace = excursion_trace_log(la, horizon);

  const auto conv = cf::convergents(xi, horizon);
  auto decorate = [&](Excursion& rec) {
    rec.digit = digits[rec.index];
    rec.convergent = rec.index == 0 ? cf::Convergent{0, 1} : conv[rec.index - 1];
  };
  for (auto& rec : trace.entered) decorate(rec);
  for (auto& rec : trace.skipped) decorate(rec);
  return trace;
}

double gap_bound_estimate(std::span<const ExcursionTrace> traces) {
  double best = kNaN;
  for (const auto& t : traces) {
    for (const auto& rec : t.entered) {
      if (std::isnan(rec.gap)) continue;
      if (std::isnan(best) || rec.gap > best) best = rec.gap;
    }
  }
  return best;
}

namespace {

Membership membership(const ExcursionTrace& trace, double log_lo, double log_hi, double kappa) {
  Membership m;
  m.verdict = !trace.entered.empty();
  for (const auto& rec : trace.entered) {
    const bool depth_ok = rec.depth > log_lo && rec.depth <= log_hi;
    const bool gap_ok = std::isnan(rec.gap) || rec.gap < kappa;
    m.depth_ok.push_back(depth_ok);
    m.gap_ok.push_back(gap_ok);
    m.verdict = m.verdict && depth_ok && gap_ok;
  }
  return m;
}

}  // namespace

Membership good_membership(const ExcursionTrace& trace, double tau, double kappa) {
  if (!(tau > 0.0)) throw DomainError("good_membership: τ must be positive");
  return membership(trace, std::log(tau), std::numeric_limits<double>::infinity(), kappa);
}

Membership bounded_membership(const ExcursionTrace& trace, double tau, double tau_upper, double kappa) {
  if (!(tau > 0.0) || !(tau_upper > tau)) throw DomainError("bounded_membership: need 0 < τ < τ'");
  return membership(trace, std::log(tau), std::log(tau_upper), kappa);
}

JarnikRatios jarnik_ratios(const ExcursionTrace& trace, double tail_fraction) {
  const auto& recs = trace.entered;
  if (recs.size() < 2) throw DomainError("jarnik_ratios: need at least 2 excursions");
  JarnikRatios out;
  double past = 0.0;
  for (const auto& rec : recs) {
    out.depth_over_time.push_back(rec.depth / rec.time);
    out.depth_over_past.push_back(past > 0.0 ? rec.depth / (2.0 * past) : kNaN);
    past += rec.depth;
  }
  out.time_ratio_estimate = numerics::tail_sup(out.depth_over_time, tail_fraction);
  out.past_ratio_estimate = numerics::tail_sup(out.depth_over_past, tail_fraction);
  return out;
}

double theta_to_omega(double theta) {
  if (!(theta >= 0.0 && theta < 1.0)) throw DomainError("theta_to_omega: θ must lie in [0, 1)");
  return theta / (1.0 - theta);
}

double omega_to_theta(double omega) {
  if (!(omega >= 0.0)) throw DomainError("omega_to_theta: ω must be >= 0");
  if (std::isinf(omega)) return 1.0;
  return omega / (1.0 + omega);
}

}  // namespace cusplab::excursions
