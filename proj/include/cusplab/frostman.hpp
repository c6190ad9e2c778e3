#pragma once

// Cylinder product measures on continued fractions with digits in a finite
// range, sampled points, and the exponent of ν(B(ξ, r)) against r.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace cusplab::frostman {

using Digit = std::uint64_t;

/// Every level draws a digit from [lower, upper] with the same normalized
/// weights; the measure of a cylinder [a_1, ..., a_k] is the product.
class CylinderMeasure {
 public:
  /// Weights 1/((a + 1)S) on [τ, τ' + 1], τ' the least integer >= τ with
  /// S = Σ_{a=τ}^{τ'+1} 1/(a + 1) > e^{κ/2}.
  static CylinderMeasure good_set(double tau, double kappa);
  /// Weights ∝ 1/(a + 1) on [lower, upper].
  static CylinderMeasure harmonic(Digit lower, Digit upper);
  static CylinderMeasure uniform(Digit lower, Digit upper);
  /// Arbitrary nonnegative weights for lower, lower + 1, ...; normalized here.
  static CylinderMeasure from_weights(Digit lower, std::vector<double> weights);

  Digit lower() const noexcept { return lower_; }
  Digit upper() const noexcept { return lower_ + weights_.size() - 1; }
  const std::vector<double>& weights() const noexcept { return weights_; }
  /// Σ 1/(a + 1) before normalization for the harmonic rules; 0 otherwise.
  double normalizer() const noexcept { return normalizer_; }

  /// Digit for a uniform draw u in [0, 1).
  Digit draw(double u) const;

  /// Measure of a cylinder given its digits.
  double cylinder_mass(const std::vector<Digit>& digits) const;

  /// ν([x, y]) by descending the cylinder tree. Cylinders that straddle an
  /// end and are shorter than resolution·(y − x) count half their mass.
  double interval_mass(double x, double y, double resolution = 1e-6) const;

 private:
  Digit lower_ = 1;
  std::vector<double> weights_;
  std::vector<double> cumulative_;
  double normalizer_ = 0.0;
  void finish();
};

struct FrostmanOptions {
  std::size_t samples = 200;
  std::size_t depth = 24;  // digits per sampled point
  std::vector<double> radii = default_radii();
  std::uint64_t seed = 1;

  /// 10^(−2), 10^(−2.25), ..., 10^(−8). Radii comparable to the support
  /// saturate ν(B) near 1 and steepen the fit.
  static std::vector<double> default_radii();
};

struct BallProbe {
  std::size_t sample;
  double xi;
  double r;
  double mass;
  double log_ratio;  // log ν(B) / log r
};

struct FrostmanReport {
  std::vector<BallProbe> probes;  // sample-major, radii in option order
  double fitted_exponent;         // pooled least-squares slope of log ν(B) on log r
  double min_ratio;               // inf of log ν(B) / log r over all probes
};

/// Throws DomainError for zero samples, an empty or nonpositive radius grid,
/// or depth 0. Sampling is parallel with per-sample streams.
FrostmanReport frostman_sampler(const CylinderMeasure& measure, const FrostmanOptions& opt);

}  // namespace cusplab::frostman
