#include <doctest.h>

#include <boost/multiprecision/integer.hpp>
#include <cmath>
#include <random>

#include "cusplab/continued_fraction.hpp"
#include "cusplab/errors.hpp"
#include "cusplab/excursions.hpp"
#include "cusplab/hyperbolic.hpp"

using namespace cusplab;
using namespace cusplab::excursions;
namespace hyp = cusplab::hyperbolic;

namespace {

double value_of(const cf::ContinuedFraction& x, std::size_t digits) {
  const auto c = cf::convergents(x, digits).back();
  const cf::BigInt scale = cf::BigInt(1) << 80;
  return cf::BigInt(c.p * scale / c.q).convert_to<double>() / scale.convert_to<double>();
}

// Independent route: the ray from i to ξ lies on the geodesic (−1/ξ, ξ) and
// travels towards ξ, so a point is ahead of i iff its real part is positive.
struct DirectRecord {
  std::size_t index;
  double depth;
  double entry;
  double exit;
};

std::vector<DirectRecord> direct_trace(const cf::ContinuedFraction& x, std::size_t horizon) {
  const double xi = value_of(x, 40);
  const hyp::Geodesic ray(-1.0 / xi, xi);
  const hyp::HPoint i = hyp::HPoint::base();
  std::vector<DirectRecord> out;
  const auto conv = cf::convergents(x, horizon);
  for (std::size_t n = 0; n < horizon; ++n) {
    const cf::Convergent c = n == 0 ? cf::Convergent{0, 1} : conv[n - 1];
    const auto ball = cf::ford_circle(c.p, c.q);
    const auto depth = hyp::penetration_depth(ball, ray);
    if (!depth.enters()) continue;
    const auto chord = hyp::entry_exit_points(ball, ray);
    const double entry = chord.entry.x() <= 0.0 ? 0.0 : hyp::hyp_distance(i, chord.entry);
    out.push_back({n, depth.formal_depth, entry, hyp::hyp_distance(i, chord.exit)});
  }
  return out;
}

cf::ContinuedFraction random_cf(std::mt19937_64& rng, std::size_t count, cf::Digit max_digit) {
  std::uniform_int_distribution<cf::Digit> d(1, max_digit);
  std::vector<cf::Digit> ds(count);
  for (auto& v : ds) v = d(rng);
  return cf::ContinuedFraction(ds);
}

}  // namespace

TEST_CASE("trace matches direct geometry in original coordinates") {
  std::mt19937_64 rng(17);
  double worst = 0.0;
  for (int t = 0; t < 200; ++t) {
    const auto x = random_cf(rng, 80, 4);
    const std::size_t horizon = 6;
    const auto trace = excursion_trace(x, horizon);
    const auto direct = direct_trace(x, horizon);
    REQUIRE(trace.entered.size() == direct.size());
    for (std::size_t k = 0; k < direct.size(); ++k) {
      const auto& a = trace.entered[k];
      const auto& b = direct[k];
      CHECK(a.index == b.index);
      worst = std::max({worst, std::abs(a.depth - b.depth), std::abs(a.entry - b.entry), std::abs(a.exit - b.exit)});
      if (k + 1 < direct.size()) {
        worst = std::max(worst, std::abs(a.gap - (direct[k + 1].entry - b.exit)));
      }
    }
  }
  CHECK(worst < 1e-6);
}

TEST_CASE("only convergent circles are entered") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 50; ++t) {
    const auto x = random_cf(rng, 40, 5);
    const double xi = value_of(x, 40);
    const hyp::Geodesic ray(-1.0 / xi, xi);
    const auto trace = excursion_trace(x, 10);
    std::vector<std::pair<cf::BigInt, cf::BigInt>> entered;
    for (const auto& rec : trace.entered) {
      if (rec.convergent->q <= 60) entered.emplace_back(rec.convergent->p, rec.convergent->q);
    }
    std::vector<std::pair<cf::BigInt, cf::BigInt>> brute;
    for (int q = 1; q <= 60; ++q) {
      for (int p = 0; p <= q; ++p) {
        if (boost::multiprecision::gcd(cf::BigInt(p), cf::BigInt(q)) != 1) continue;
        const auto ball = cf::ford_circle(p, q);
        const auto depth = hyp::penetration_depth(ball, ray);
        if (!depth.enters()) continue;
        if (hyp::entry_exit_points(ball, ray).exit.x() <= 1e-12) continue;  // behind i
        brute.emplace_back(p, q);
      }
    }
    std::sort(brute.begin(), brute.end(), [](const auto& a, const auto& b) { return a.second < b.second; });
    CHECK(brute == entered);
  }
}

TEST_CASE("bounded type and spikes") {
  const auto twos = cf::cf_quadratic(2, -1, 1);
  const auto trace = excursion_trace(twos, 50);
  CHECK(trace.skipped.empty());
  for (const auto& rec : trace.entered) {
    CHECK(std::abs(rec.depth - std::log(2.0)) < 0.7);
    CHECK(rec.depth < 2.0);
    CHECK(*rec.digit == 2);
  }

  const cf::ContinuedFraction spike({1, 1, 100}, {1});
  const auto st = excursion_trace(spike, 20);
  for (const auto& rec : st.entered) {
    if (rec.index == 2) {
      CHECK(std::abs(rec.depth - std::log(100.0)) < 0.7);
    } else {
      CHECK(rec.depth < 1.0);
    }
  }
}

TEST_CASE("digit-depth link and ordering on random traces") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> logd(0.0, std::log(1e6));
  double worst = 0.0;
  for (int t = 0; t < 300; ++t) {
    std::vector<cf::Digit> ds(60);
    for (auto& d : ds) d = static_cast<cf::Digit>(std::exp(logd(rng)));
    for (auto& d : ds) d = std::max<cf::Digit>(d, 1);
    const auto trace = excursion_trace(cf::ContinuedFraction(ds), 50);
    double past = 0.0;
    double prev_entry = -1.0;
    for (const auto& rec : trace.entered) {
      worst = std::max(worst, std::abs(rec.depth - rec.log_digit));
      CHECK(rec.entry > prev_entry);
      CHECK(rec.time > rec.entry);
      CHECK(rec.entry >= 2.0 * past - 1e-9);
      if (!std::isnan(rec.gap)) CHECK(rec.gap >= -1e-9);
      prev_entry = rec.entry;
      past += rec.depth;
    }
    for (const auto& rec : trace.skipped) CHECK(*rec.digit == 1);
  }
  CHECK(worst < std::log(2.0) + 1e-9);
}

TEST_CASE("huge log-digits stay finite") {
  std::vector<double> la(200);
  for (std::size_t j = 0; j < la.size(); ++j) la[j] = std::pow(1.5, static_cast<double>(j) * 0.5);
  const auto trace = excursion_trace_log(la, 150);
  REQUIRE(trace.entered.size() == 150);
  for (const auto& rec : trace.entered) {
    CHECK(std::isfinite(rec.entry));
    CHECK(std::abs(rec.depth - rec.log_digit) < 0.7);
  }
  CHECK_THROWS_AS(excursion_trace_log(std::vector<double>(5, 1.0), 4), InsufficientData);
  CHECK_THROWS_AS(excursion_trace(cf::ContinuedFraction({2, 2, 2}), 2), InsufficientData);
  CHECK_THROWS_AS(excursion_trace(cf::cf_expand(std::sqrt(2.0) - 1.0, 80), 60), InsufficientData);
}

TEST_CASE("gap bound and membership") {
  const auto ten = excursion_trace(cf::ContinuedFraction({}, {10}), 30);
  const auto twos = excursion_trace(cf::ContinuedFraction({}, {2}), 30);
  const std::vector<ExcursionTrace> one{twos};
  const double kappa_single = gap_bound_estimate(one);
  double expect = 0.0;
  for (const auto& rec : twos.entered) {
    if (!std::isnan(rec.gap)) expect = std::max(expect, rec.gap);
  }
  CHECK(kappa_single == expect);

  const std::vector<ExcursionTrace> both{ten, twos};
  const double kappa = gap_bound_estimate(both);
  CHECK(good_membership(ten, 5.0, kappa + 1e-9).verdict);
  CHECK_FALSE(good_membership(ten, 1e6, kappa + 1e-9).verdict);
  CHECK_FALSE(good_membership(ten, 5.0, 0.0).verdict);
  CHECK(bounded_membership(ten, 5.0, 20.0, kappa + 1e-9).verdict);
  CHECK_FALSE(bounded_membership(ten, 5.0, 5.05, kappa + 1e-9).verdict);

  // Bigger digits do not make the between-ball travel longer.
  std::vector<ExcursionTrace> mixed{twos};
  for (cf::Digit a : {50ULL, 1000ULL, 100000ULL}) mixed.push_back(excursion_trace(cf::ContinuedFraction({}, {a}), 30));
  CHECK(gap_bound_estimate(mixed) <= gap_bound_estimate(std::vector<ExcursionTrace>{twos}) + 1e-9);
}

TEST_CASE("jarnik ratios") {
  const auto twos = excursion_trace(cf::ContinuedFraction({}, {2}), 400);
  const auto r = jarnik_ratios(twos);
  CHECK(r.time_ratio_estimate < 0.02);
  CHECK(r.past_ratio_estimate < 0.02);
  CHECK(std::isnan(r.depth_over_past[0]));

  // log s_n = 2^n log 2: ω = 1/2, so θ = 1/3.
  std::vector<double> la(42);
  for (std::size_t j = 0; j < la.size(); ++j) la[j] = std::ldexp(std::log(2.0), static_cast<int>(j + 1));
  const auto spiky = jarnik_ratios(excursion_trace_log(la, 40));
  CHECK(spiky.time_ratio_estimate == doctest::Approx(1.0 / 3.0).epsilon(0.01));
  CHECK(spiky.past_ratio_estimate == doctest::Approx(0.5).epsilon(0.01));

  for (double theta = 0.0; theta < 1.0; theta += 0.01) {
    CHECK(omega_to_theta(theta_to_omega(theta)) == doctest::Approx(theta).epsilon(1e-14));
  }
  CHECK_THROWS_AS(theta_to_omega(1.0), DomainError);
  CHECK_THROWS_AS(jarnik_ratios(ExcursionTrace{}), DomainError);
}
