#include <doctest.h>

#include <boost/multiprecision/integer.hpp>
#include <cmath>
#include <random>

#include "cusplab/continued_fraction.hpp"
#include "cusplab/errors.hpp"

using namespace cusplab;
using namespace cusplab::cf;

TEST_CASE("rational expansions are exact") {
  const auto cf = cf_expand(BigInt(3), BigInt(10));
  CHECK(cf.prefix() == std::vector<Digit>{3, 3});
  CHECK(cf.size() == 2);
  CHECK_THROWS_AS(cf.digits(3), InsufficientData);
  CHECK_THROWS_AS(cf_expand(BigInt(0), BigInt(1)), DomainError);
  CHECK_THROWS_AS(cf_expand(BigInt(3), BigInt(2)), DomainError);
  CHECK_THROWS_AS(cf_expand(BigInt(1), BigInt(0)), DomainError);
  CHECK(cf_expand(BigInt(-3), BigInt(-10)).prefix() == std::vector<Digit>{3, 3});
}

TEST_CASE("floating expansions report a reliability horizon") {
  const double golden = (std::sqrt(5.0) - 1.0) / 2.0;
  const auto g = cf_expand(golden, 60);
  CHECK(g.reliable_digits() >= 30);
  CHECK(g.reliable_digits() < 45);
  for (std::size_t n = 1; n <= g.reliable_digits(); ++n) CHECK(g.digit(n) == 1);

  // sqrt(2) − 1 in double carries the rounding of sqrt(2), a few ulps of the
  // result, so its true digits outlast only part of the reliable range.
  const auto s = cf_expand(std::sqrt(2.0) - 1.0, 30);
  CHECK(s.reliable_digits() >= 15);
  CHECK(s.reliable_digits() <= 24);
  for (std::size_t n = 1; n <= 18; ++n) CHECK(s.digit(n) == 2);
  CHECK_THROWS_AS(cf_expand(1.5, 5), DomainError);
  CHECK_THROWS_AS(cf_expand(0.0, 5), DomainError);
}

TEST_CASE("quadratic irrationals are periodic") {
  const auto s2 = cf_quadratic(2, -1, 1);  // sqrt 2 − 1
  CHECK(s2.integer_part() == 0);
  CHECK(s2.prefix().empty());
  CHECK(s2.period() == std::vector<Digit>{2});

  const auto golden = cf_quadratic(5, -1, 2);
  CHECK(golden.integer_part() == 0);
  CHECK(golden.period() == std::vector<Digit>{1});

  const auto s7 = cf_quadratic(7, 0, 1);  // sqrt 7 = [2; (1, 1, 1, 4)]
  CHECK(s7.integer_part() == 2);
  CHECK(s7.period() == std::vector<Digit>{1, 1, 1, 4});

  const auto neg = cf_quadratic(3, 2, 1, -1);  // 2 − sqrt 3 = [0; 3, (1, 2)]
  CHECK(neg.integer_part() == 0);
  CHECK(neg.digits(5) == std::vector<Digit>{3, 1, 2, 1, 2});

  // Oracle: the digits of (sqrt D + r)/s match a floating expansion where that is reliable.
  for (int D : {3, 6, 11, 13, 19, 23}) {
    for (int s : {1, 2, 3, 5}) {
      const auto q = cf_quadratic(D, 0, s);
      const double x = std::sqrt(static_cast<double>(D)) / s;
      const double frac = x - std::floor(x);
      CHECK(q.integer_part() == static_cast<long>(std::floor(x)));
      const auto f = cf_expand(frac, 20);
      for (std::size_t n = 1; n <= std::min<std::size_t>(f.reliable_digits(), 10); ++n) {
        CHECK(q.digit(n) == f.digit(n));
      }
    }
  }
  CHECK_THROWS_AS(cf_quadratic(4, 0, 1), DomainError);
  CHECK_THROWS_AS(cf_quadratic(2, 0, 0), DomainError);
}

TEST_CASE("convergents") {
  const ContinuedFraction ones({1, 1, 1, 1});
  const auto c = convergents(ones, 4);
  REQUIRE(c.size() == 4);
  CHECK(c[0].p == 1);
  CHECK(c[0].q == 1);
  CHECK(c[1].p == 1);
  CHECK(c[1].q == 2);
  CHECK(c[2].p == 2);
  CHECK(c[2].q == 3);
  CHECK(c[3].p == 3);
  CHECK(c[3].q == 5);

  const auto two = convergents(ContinuedFraction({}, {2}), 3);
  CHECK(two[0].p == 1);
  CHECK(two[0].q == 2);
  CHECK(two[1].p == 2);
  CHECK(two[1].q == 5);
  CHECK(two[2].p == 5);
  CHECK(two[2].q == 12);
  CHECK_THROWS_AS(convergents(ones, 5), InsufficientData);

  std::mt19937_64 rng(99);
  std::uniform_int_distribution<Digit> digit(1, 1000);
  for (int t = 0; t < 1000; ++t) {
    std::vector<Digit> ds(12);
    for (auto& d : ds) d = digit(rng);
    const auto cs = convergents(ContinuedFraction(ds), ds.size());
    for (std::size_t k = 0; k < cs.size(); ++k) {
      CHECK(boost::multiprecision::gcd(cs[k].p, cs[k].q) == 1);
      if (k >= 1) {
        // Adjacent convergents satisfy p_k q_{k−1} − p_{k−1} q_k = ±1.
        const BigInt det = cs[k].p * cs[k - 1].q - cs[k - 1].p * cs[k].q;
        CHECK(abs(det) == 1);
      }
    }
  }
}

TEST_CASE("convergents approximate the value") {
  const auto cf = cf_quadratic(5, -1, 2);
  const double x = (std::sqrt(5.0) - 1.0) / 2.0;
  const auto cs = convergents(cf, 20);
  for (std::size_t k = 0; k + 1 < cs.size(); ++k) {
    const double q = cs[k].q.convert_to<double>();
    const double q_next = cs[k + 1].q.convert_to<double>();
    CHECK(std::abs(x - cs[k].p.convert_to<double>() / q) <= 1.0 / (q * q_next) * (1.0 + 1e-9));
  }
}

TEST_CASE("ford circles") {
  const auto half = ford_circle(1, 2);
  CHECK(half.base().value() == doctest::Approx(0.5));
  CHECK(half.size() == doctest::Approx(0.25));
  const auto zero = ford_circle(0, 1);
  CHECK(zero.base().value() == 0.0);
  CHECK(zero.size() == 1.0);
  CHECK(ford_circle(1, 0).base().is_infinite());
  CHECK_THROWS_AS(ford_circle(2, 4), DomainError);

  // Pairwise disjoint or tangent for q <= 50: centre distance >= sum of radii.
  std::vector<std::pair<double, double>> circles;
  for (int q = 1; q <= 50; ++q) {
    for (int p = 0; p <= q; ++p) {
      if (boost::multiprecision::gcd(BigInt(p), BigInt(q)) != 1) continue;
      const auto h = ford_circle(p, q);
      circles.emplace_back(h.base().value(), h.size());
    }
  }
  double worst = 1.0;
  for (std::size_t a = 0; a < circles.size(); ++a) {
    for (std::size_t b = a + 1; b < circles.size(); ++b) {
      const auto [x1, d1] = circles[a];
      const auto [x2, d2] = circles[b];
      const double centre = std::hypot(x1 - x2, 0.5 * (d1 - d2));
      worst = std::min(worst, (centre - 0.5 * (d1 + d2)) / (0.5 * (d1 + d2)));
    }
  }
  CHECK(worst > -1e-9);
}
