#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace cusplab::numerics {

/// Closed interval [lo, hi] known to contain a quantity.
struct Enclosure {
  double lo;
  double hi;

  double mid() const noexcept { return 0.5 * (lo + hi); }
  double width() const noexcept { return hi - lo; }
};

/// Hurwitz zeta ζ(σ, q) = Σ_{k≥0} (q + k)^(−σ) for σ > 1, q > 0.
///
/// Euler–Maclaurin after shifting q past 16; the enclosure adds the magnitude
/// of the first omitted Bernoulli term, which bounds the remainder for this
/// completely monotone summand, plus a rounding allowance.
Enclosure hurwitz_zeta(double sigma, double q);

/// Result of bisecting a decreasing function for its zero.
struct Root {
  double value;
  double lo;
  double hi;
  int iterations;
  bool resolved;  // false if the sign test became ambiguous before reaching tol
};

/// Sign oracle: +1 if f(s) > 0 for sure, −1 if f(s) < 0 for sure, 0 if the
/// evaluation cannot decide.
using SignOracle = std::function<int(double)>;

/// Bisection for a decreasing function on [lo, hi] with sign(lo) > 0 and
/// sign(hi) < 0 (an endpoint whose sign is 0 is treated as the root).
Root bisect_decreasing(const SignOracle& sign, double lo, double hi, double tol, int max_iter = 200);

/// Chebyshev points of the first kind on [lo, hi], in increasing order, with
/// barycentric interpolation weights.
class ChebyshevGrid {
 public:
  ChebyshevGrid(double lo, double hi, std::size_t count);

  std::size_t size() const noexcept { return nodes_.size(); }
  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }
  std::span<const double> nodes() const noexcept { return nodes_; }

  /// Lagrange basis values ℓ_k(y) for every node k, written to `out`.
  void basis(double y, std::span<double> out) const;

  /// Interpolant of `values` evaluated at y.
  double interpolate(std::span<const double> values, double y) const;

  /// Rows m = 0..order of the functional f ↦ f^(m)(lo) / m! acting on node
  /// values; row-major (order + 1) × size().
  std::vector<double> taylor_at_lo(int order) const;

 private:
  double lo_;
  double hi_;
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

/// Dense row-major square matrix.
struct DenseMatrix {
  std::size_t n = 0;
  std::vector<double> data;

  explicit DenseMatrix(std::size_t size) : n(size), data(size * size, 0.0) {}
  double& operator()(std::size_t i, std::size_t j) { return data[i * n + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data[i * n + j]; }
};

/// Compressed sparse row matrix.
struct SparseMatrix {
  std::size_t n = 0;
  std::vector<std::size_t> row_start;
  std::vector<std::size_t> col;
  std::vector<double> val;
};

struct Eigenpair {
  double value;
  std::vector<double> vector;
  int iterations;
};

/// Leading eigenvalue by power iteration; stops once the relative change of
/// the estimate falls below `tol`. Throws NumericError if that never happens
/// within max_iter steps.
Eigenpair power_iteration(const DenseMatrix& m, double tol, int max_iter = 20000);
Eigenpair power_iteration(const SparseMatrix& m, double tol, int max_iter = 20000);

/// max over the trailing window [⌊(1 − fraction)·n⌋, n) of the sequence; the
/// finite-horizon stand-in for lim sup. NaN entries are skipped.
double tail_sup(std::span<const double> xs, double fraction = 0.5);
double tail_inf(std::span<const double> xs, double fraction = 0.5);

}  // namespace cusplab::numerics
