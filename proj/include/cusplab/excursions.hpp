#pragma once

// Cusp excursions of the geodesic ray from i to a point ξ in (0, 1) into the
// Ford circles.
//
// Indexing: record n is the ball at the convergent p_n/q_n (p_0/q_0 = 0/1)
// and its depth is governed by the digit a_{n+1}. All times are hyperbolic
// arclengths from i along the ray.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "cusplab/continued_fraction.hpp"

namespace cusplab::excursions {

struct Excursion {
  std::size_t index = 0;  // n
  double log_digit = 0.0;  // log a_{n+1}
  std::optional<cf::Digit> digit;
  std::optional<cf::Convergent> convergent;
  double depth = 0.0;  // d_n; non-positive for skipped balls
  double entry = 0.0;  // distance from i to the entry point
  double exit = 0.0;
  double time = 0.0;  // t_n = entry + d_n
  double gap = 0.0;   // entry of the next entered ball minus exit; NaN if beyond the data
};

struct ExcursionTrace {
  std::size_t horizon = 0;
  std::vector<Excursion> entered;
  // Balls at convergents the ray misses or touches. Their times are NaN.
  std::vector<Excursion> skipped;
};

/// Trace for indices n = 0..horizon−1. Needs at least horizon + 2 reliable
/// digits (InsufficientData otherwise); periodic expansions always suffice.
/// The integer part must be 0.
ExcursionTrace excursion_trace(const cf::ContinuedFraction& xi, std::size_t horizon);

/// Same from log-digits log a_1, log a_2, ..., so digits far beyond 64 bits
/// can be used. Each entry must be >= 0 and be the log of an integer.
ExcursionTrace excursion_trace_log(std::span<const double> log_digits, std::size_t horizon);

/// Empirical κ*: the largest known gap over all traces. NaN if none.
double gap_bound_estimate(std::span<const ExcursionTrace> traces);

struct Membership {
  std::vector<bool> depth_ok;  // per entered excursion
  std::vector<bool> gap_ok;    // per entered excursion; unknown gaps count as ok
  bool verdict = false;
};

/// Finite-horizon membership of the (τ, κ)-Good set: every entered depth
/// exceeds log τ and every known gap is below κ.
Membership good_membership(const ExcursionTrace& trace, double tau, double kappa);

/// Two-sided variant used for the lower bound: log τ < d_n <= log τ' and
/// gaps below κ.
Membership bounded_membership(const ExcursionTrace& trace, double tau, double tau_upper, double kappa);

struct JarnikRatios {
  std::vector<double> depth_over_time;  // d_n / t_n
  std::vector<double> depth_over_past;  // d_n / (2 Σ_{i<n} d_i); NaN for the first record
  double time_ratio_estimate = 0.0;     // tail sup of depth_over_time
  double past_ratio_estimate = 0.0;     // tail sup of depth_over_past
};

/// Ratios over entered excursions with tail-sup estimates over the trailing
/// `tail_fraction` of the records. Throws DomainError with fewer than 2.
JarnikRatios jarnik_ratios(const ExcursionTrace& trace, double tail_fraction = 0.5);

/// θ ↦ θ/(1−θ) for θ in [0, 1), and its inverse ω ↦ ω/(1+ω).
double theta_to_omega(double theta);
double omega_to_theta(double omega);

}  // namespace cusplab::excursions
