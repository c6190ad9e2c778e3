#pragma once

// Digit growth sequences s_1, s_2, ... kept as log s_n, their growth exponent
// ω (lim sup) and critical exponent ρ (lim inf), and synthetic excursion
// traces with prescribed growth.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cusplab/excursions.hpp"

namespace cusplab::growth {

enum class GeneratorKind { LogGeometric, Geometric, Polynomial, Explicit, Spiked };

class GrowthSequence {
 public:
  /// log s_n = αⁿ log b.
  static GrowthSequence log_geometric(double alpha, double base = 2.0);
  /// s_n = cⁿ.
  static GrowthSequence geometric(double c);
  /// s_n = c·n^p.
  static GrowthSequence polynomial(double c, double p);
  /// Given values s_1, ..., s_m (each >= 1); only m terms exist.
  static GrowthSequence explicit_values(std::vector<double> values);
  /// Slowly growing background log s_n = 1 + log(n + 1), with every period-th
  /// term replaced by a spike log s_n = 2ω log(s_1 ⋯ s_{n−1}). The lim sup
  /// defining ω is attained exactly at the spikes.
  static GrowthSequence spiked(double omega, std::size_t period = 100);

  GeneratorKind kind() const noexcept { return kind_; }

  /// Number of available terms; nullopt for generators.
  std::optional<std::size_t> length() const;

  /// log s_1, ..., log s_n. Throws InsufficientData past an explicit list.
  std::vector<double> log_values(std::size_t n) const;

  /// log of integer digits a_n = s_n, rounding s_n while it is small enough
  /// to be represented exactly.
  std::vector<double> log_digits(std::size_t n) const;

  /// ω and ρ = 1/(2(1 + ω)) when the generator determines them.
  std::optional<double> closed_omega() const;
  std::optional<double> closed_rho() const;

  /// s_n → ∞. Generators decide by their parameters; explicit lists need at
  /// least 4 terms, s_n >= 1, and a second half whose minimum exceeds the
  /// minimum of the first half.
  bool admissible() const;

  /// Short description, e.g. "loggeom:2,2".
  std::string describe() const;

 private:
  GeneratorKind kind_ = GeneratorKind::Explicit;
  double p1_ = 0.0;
  double p2_ = 0.0;
  std::size_t period_ = 0;
  std::vector<double> explicit_log_;
};

struct OmegaRho {
  // Index n − 1 holds the estimate at n = 1..n_max.
  std::vector<double> omega_hat;     // log s_n / (2 log(s_1 ⋯ s_{n−1})); NaN at n = 1
  std::vector<double> rho_hat;       // log(s_1 ⋯ s_n) / log((s_1 ⋯ s_n)² s_{n+1})
  std::vector<double> rho_hat_inflated;  // same with (Kⁿ s_1 ⋯ s_n)² in the denominator
  double omega_estimate = 0.0;  // tail sup of omega_hat
  double rho_estimate = 0.0;    // tail inf of rho_hat
  double rho_inflated_estimate = 0.0;
  std::optional<double> omega_closed;
  std::optional<double> rho_closed;
};

/// Finite-n estimates from the first n_max + 1 terms. Throws DomainError for
/// an inadmissible sequence or n_max < 2.
OmegaRho seq_omega_rho(const GrowthSequence& seq, std::size_t n_max, double inflation_K = 100.0,
                       double tail_fraction = 0.5);

/// Dimension of the strict Jarník set at exponent θ ∈ [0, 1]: (1 − θ)/2.
double jarnik_dimension(double theta);

/// 1/(2(1 + ω)).
double rho_from_omega(double omega);

/// Excursion trace of the point with digits a_n = s_n.
excursions::ExcursionTrace synthesize_trace(const GrowthSequence& seq, std::size_t horizon);

}  // namespace cusplab::growth
