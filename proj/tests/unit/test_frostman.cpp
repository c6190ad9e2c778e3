#include <doctest.h>

#include <cmath>
#include <functional>

#include "cusplab/errors.hpp"
#include "cusplab/frostman.hpp"
#include "cusplab/rng.hpp"
#include "cusplab/transfer.hpp"

using namespace cusplab;
using namespace cusplab::frostman;

TEST_CASE("good-set measure") {
  const auto m = CylinderMeasure::good_set(10, 1);
  CHECK(m.lower() == 10);
  // Least range with Σ_{a=10}^{upper} 1/(a + 1) > e^{1/2}.
  double s = 0.0;
  for (Digit a = 10; a <= m.upper(); ++a) s += 1.0 / (a + 1.0);
  CHECK(s > std::exp(0.5));
  CHECK(s - 1.0 / (m.upper() + 1.0) <= std::exp(0.5));
  CHECK(m.normalizer() == doctest::Approx(s).epsilon(1e-14));
  double total = 0.0;
  for (double w : m.weights()) total += w;
  CHECK(std::abs(total - 1.0) < 1e-12);
  CHECK(m.cylinder_mass({10, 12}) == doctest::Approx(1.0 / (11 * 13 * s * s)).epsilon(1e-13));
  CHECK(m.cylinder_mass({9}) == 0.0);
  CHECK_THROWS_AS(CylinderMeasure::from_weights(1, {0.0, 0.0}), DomainError);
  CHECK_THROWS_AS(CylinderMeasure::good_set(10, 0), DomainError);
}

TEST_CASE("interval mass matches cylinder enumeration") {
  const auto m = CylinderMeasure::harmonic(2, 4);
  // Oracle: sum depth-10 cylinders by the position of a representative point.
  auto brute = [&](double x, double y) {
    double total = 0.0;
    std::function<void(int, double, double, double, double, double)> rec = [&](int level, double p, double q,
                                                                                double pp, double qp, double w) {
      if (level == 10) {
        const double t = 1.0 / 3.0;
        const double pt = (p + t * pp) / (q + t * qp);
        if (pt >= x && pt <= y) total += w;
        return;
      }
      for (Digit a = 2; a <= 4; ++a) {
        rec(level + 1, a * p + pp, a * q + qp, p, q, w * m.weights()[a - 2]);
      }
    };
    rec(0, 0, 1, 1, 0, 1.0);
    return total;
  };
  CHECK(m.interval_mass(0.0, 1.0) == doctest::Approx(1.0).epsilon(1e-14));
  for (auto [x, y] : {std::pair{0.2, 0.3}, {0.25, 0.27}, {0.3, 0.45}, {0.21, 0.2105}}) {
    CHECK(std::abs(m.interval_mass(x, y) - brute(x, y)) < 2e-4);
  }
  // Additivity over adjacent intervals.
  CHECK(m.interval_mass(0.2, 0.3) ==
        doctest::Approx(m.interval_mass(0.2, 0.26) + m.interval_mass(0.26, 0.3)).epsilon(1e-5));
}

TEST_CASE("fitted exponent certifies the good set") {
  const auto m = CylinderMeasure::good_set(10, 1);
  FrostmanOptions opt;
  const auto a = frostman_sampler(m, opt);
  opt.samples *= 2;
  const auto b = frostman_sampler(m, opt);
  CHECK(a.fitted_exponent >= 0.45);
  CHECK(std::abs(a.fitted_exponent - b.fitted_exponent) < 0.02);
  const double dim = transfer::transfer_dimension(transfer::DigitAlphabet::interval(m.lower(), m.upper())).value;
  CHECK(a.fitted_exponent <= dim + 0.02);
  CHECK(a.probes.size() == 200 * opt.radii.size());
}

TEST_CASE("degenerate and invalid inputs") {
  const auto single = frostman_sampler(CylinderMeasure::uniform(3, 3), {});
  CHECK(std::abs(single.fitted_exponent) < 1e-9);
  FrostmanOptions none;
  none.samples = 0;
  CHECK_THROWS_AS(frostman_sampler(CylinderMeasure::uniform(3, 5), none), DomainError);
  FrostmanOptions bad;
  bad.radii = {2.0};
  CHECK_THROWS_AS(frostman_sampler(CylinderMeasure::uniform(3, 5), bad), DomainError);
}

TEST_CASE("sampling is reproducible and independent of thread count") {
  const auto m = CylinderMeasure::harmonic(5, 20);
  FrostmanOptions opt;
  opt.samples = 50;
  opt.seed = 42;
  setenv("CUSPLAB_THREADS", "1", 1);
  const auto a = frostman_sampler(m, opt);
  setenv("CUSPLAB_THREADS", "8", 1);
  const auto b = frostman_sampler(m, opt);
  unsetenv("CUSPLAB_THREADS");
  REQUIRE(a.probes.size() == b.probes.size());
  for (std::size_t i = 0; i < a.probes.size(); ++i) {
    CHECK(a.probes[i].xi == b.probes[i].xi);
    CHECK(a.probes[i].mass == b.probes[i].mass);
  }
  opt.seed = 43;
  CHECK(frostman_sampler(m, opt).probes[0].xi != a.probes[0].xi);

  const CounterRng r(7, 3);
  double mean = 0.0;
  for (int k = 0; k < 100000; ++k) mean += r.uniform(k);
  CHECK(mean / 100000 == doctest::Approx(0.5).epsilon(0.01));
}
