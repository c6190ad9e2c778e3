#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "cusplab/errors.hpp"
#include "cusplab/numerics.hpp"

using namespace cusplab;
using namespace cusplab::numerics;

TEST_CASE("hurwitz zeta matches high-precision values") {
  // Reference values from a 30-digit evaluation.
  struct Case {
    double sigma, q, value;
  };
  const Case cases[] = {
      {2.0, 1.0, 1.6449340668482264365},
      {1.5, 3.25, 1.2012173113703717397},
      {3.7, 0.4, 30.021232324986807276},
      {1.2, 1000.0, 1.2560688351952275666},
      {2.4, 9513.5, 1.924099240677518306e-6},
      {10.0, 2.0, 0.00099457512781808533715},
  };
  for (const auto& c : cases) {
    const auto z = hurwitz_zeta(c.sigma, c.q);
    CHECK(z.lo <= c.value * (1 + 1e-15));
    CHECK(z.hi >= c.value * (1 - 1e-15));
    CHECK(z.width() < 1e-13 * c.value);
  }
  CHECK(hurwitz_zeta(2.0, 1.0).mid() == doctest::Approx(std::numbers::pi * std::numbers::pi / 6).epsilon(1e-15));
}

TEST_CASE("bisection") {
  const auto r = bisect_decreasing([](double x) { return x < std::sqrt(2.0) ? 1 : -1; }, 0.0, 3.0, 1e-13);
  CHECK(r.resolved);
  CHECK(r.value == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK_THROWS_AS(bisect_decreasing([](double) { return 1; }, 0.0, 1.0, 1e-6), NumericError);
}

TEST_CASE("chebyshev interpolation and taylor functionals") {
  const ChebyshevGrid g(0.2, 0.7, 24);
  std::vector<double> v(g.size());
  auto f = [](double x) { return std::exp(2.0 * x); };
  for (std::size_t k = 0; k < g.size(); ++k) v[k] = f(g.nodes()[k]);
  for (double y : {0.2, 0.33, 0.5, 0.69}) CHECK(g.interpolate(v, y) == doctest::Approx(f(y)).epsilon(1e-13));

  std::vector<double> b(g.size());
  g.basis(0.41, b);
  double sum = 0.0;
  for (double x : b) sum += x;
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-14));

  // f^(m)(lo)/m! = e^0.4 2^m / m!
  const auto rows = g.taylor_at_lo(3);
  double fact = 1.0;
  for (int m = 0; m <= 3; ++m) {
    if (m > 0) fact *= m;
    double t = 0.0;
    for (std::size_t k = 0; k < g.size(); ++k) t += rows[m * g.size() + k] * v[k];
    CHECK(t == doctest::Approx(std::exp(0.4) * std::pow(2.0, m) / fact).epsilon(1e-7));
  }
}

TEST_CASE("power iteration") {
  DenseMatrix m(3);
  // Symmetric with eigenvalues 4, 2, 1.
  const double a[3][3] = {{3, 1, 0}, {1, 3, 0}, {0, 0, 1}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = a[i][j];
  const auto e = power_iteration(m, 1e-14);
  CHECK(e.value == doctest::Approx(4.0).epsilon(1e-12));

  SparseMatrix s;
  s.n = 2;
  s.row_start = {0, 2, 4};
  s.col = {0, 1, 0, 1};
  s.val = {0.5, 0.5, 0.25, 0.75};
  CHECK(power_iteration(s, 1e-14).value == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("tail sup and inf") {
  const std::vector<double> xs = {9, 0, 1, 2, NAN, 3};
  CHECK(tail_sup(xs) == 3.0);
  CHECK(tail_inf(xs) == 2.0);
}
