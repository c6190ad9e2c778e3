#pragma once

// Hausdorff dimension of continued-fraction sets with restricted digits, via
// the pressure equation λ(s) = 1 for the Gauss-map transfer operator
// (L_s f)(x) = Σ_a (a + x)^(−2s) f(1/(a + x)).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cusplab/numerics.hpp"

namespace cusplab::transfer {

using Digit = std::uint64_t;

/// Set of allowed digits: an interval [lower, upper], an unbounded range
/// {lower, lower + 1, ...}, or an explicit finite list.
class DigitAlphabet {
 public:
  static DigitAlphabet interval(Digit lower, Digit upper);
  static DigitAlphabet at_least(Digit lower);
  static DigitAlphabet from_digits(std::vector<Digit> digits);

  bool is_infinite() const noexcept { return !upper_.has_value(); }
  Digit lower() const noexcept { return lower_; }
  std::optional<Digit> upper() const noexcept { return upper_; }
  std::size_t size() const;

  /// The finite digit list; throws DomainError for infinite alphabets.
  std::vector<Digit> digits() const;

  /// An interval mapped into itself by every branch x ↦ 1/(a + x).
  std::pair<double, double> hull() const;

 private:
  Digit lower_ = 1;
  std::optional<Digit> upper_;
  std::vector<Digit> explicit_;  // empty unless built from a list
};

struct OperatorOptions {
  std::size_t nodes = 32;
  double tol = 1e-10;        // on s
  double eig_tol = 1e-12;    // relative eigenvalue change
  // Explicit digits for infinite alphabets run up to lower + extra + scale·lower;
  // the rest is summed through a Taylor expansion at 0 and Hurwitz zeta values.
  std::size_t truncation_extra = 512;
  std::size_t truncation_scale = 8;
  int tail_order = 3;  // upper limit; fewer terms are used when they are negligible
  bool tail_correction = true;  // off: plain truncation, for checking the tail's size
};

/// λ(s) for the collocation discretization.
double collocation_eigenvalue(const DigitAlphabet& alphabet, double s, const OperatorOptions& opt = {});

struct DimensionEstimate {
  double value;
  double lo;  // final bisection bracket
  double hi;
  double residual;  // λ(value) − 1
  int iterations;
};

/// Root of λ(s) = 1 by bisection on collocation eigenvalues.
DimensionEstimate transfer_dimension(const DigitAlphabet& alphabet, const OperatorOptions& opt = {});

/// λ(s) for the Ulam (piecewise constant) discretization; finite alphabets only.
double ulam_eigenvalue(const DigitAlphabet& alphabet, double s, std::size_t bins, double eig_tol = 1e-12);

/// Root of the Ulam pressure equation; an independent check on transfer_dimension.
DimensionEstimate ulam_dimension(const DigitAlphabet& alphabet, std::size_t bins = 4096, double tol = 1e-10);

/// Root of Σ_{a >= N} (a + shift)^(−2s) = 1 for s > 1/2. The shift-1 and
/// shift-0 roots bracket dim F_N from below and above. Throws DomainError for
/// N = 1 with shift 0, where no root exists.
double crude_critical_exponent(Digit N, int shift, double tol = 1e-12);

struct SweepRow {
  Digit N;
  double bracket_lo;  // shift-1 root
  double bracket_hi;  // shift-0 root
  double estimate;    // transfer_dimension of {N, N+1, ...}
  double residual;
};

/// dim F_N with its bracket for each N (each >= 2); rows in input order,
/// computed in parallel.
std::vector<SweepRow> good_dimension_sweep(std::span<const Digit> Ns, const OperatorOptions& opt = {});

}  // namespace cusplab::transfer
