#include "cusplab/transfer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "cusplab/errors.hpp"
#include "cusplab/parallel.hpp"

namespace cusplab::transfer {

namespace {

// Half-width of the band around 1 where the sign of λ(s) − 1 counts as unknown.
constexpr double kEigenSlack = 1e-14;

int eigen_sign(double lambda) {
  if (lambda > 1.0 + kEigenSlack) return 1;
  if (lambda < 1.0 - kEigenSlack) return -1;
  return 0;
}

// ∫_{u1}^{u2} u^(−2s) du for 0 < u1 <= u2, without cancellation for close ends.
double weight_integral(double u1, double u2, double s) {
  const double e = 1.0 - 2.0 * s;
  const double log_ratio = std::log1p((u2 - u1) / u1);
  if (e == 0.0) return log_ratio;
  return std::pow(u1, e) * std::expm1(e * log_ratio) / e;
}

}  // namespace

DigitAlphabet DigitAlphabet::interval(Digit lower, Digit upper) {
  if (lower < 1 || upper < lower) throw DomainError("digit alphabet needs 1 <= lower <= upper");
  DigitAlphabet a;
  a.lower_ = lower;
  a.upper_ = upper;
  return a;
}

DigitAlphabet DigitAlphabet::at_least(Digit lower) {
  if (lower < 1) throw DomainError("digit alphabet needs lower >= 1");
  DigitAlphabet a;
  a.lower_ = lower;
  return a;
}

DigitAlphabet DigitAlphabet::from_digits(std::vector<Digit> digits) {
  if (digits.empty()) throw DomainError("digit alphabet must be nonempty");
  std::sort(digits.begin(), digits.end());
  digits.erase(std::unique(digits.begin(), digits.end()), digits.end());
  if (digits.front() < 1) throw DomainError("digits must be >= 1");
  DigitAlphabet a;
  a.lower_ = digits.front();
  a.upper_ = digits.back();
  a.explicit_ = std::move(digits);
  return a;
}

std::size_t DigitAlphabet::size() const {
  if (is_infinite()) throw DomainError("infinite alphabet has no finite size");
  if (!explicit_.empty()) return explicit_.size();
  return static_cast<std::size_t>(*upper_ - lower_ + 1);
}

std::vector<Digit> DigitAlphabet::digits() const {
  if (is_infinite()) throw DomainError("infinite alphabet has no digit list");
  if (!explicit_.empty()) return explicit_;
  std::vector<Digit> out;
  out.reserve(size());
  for (Digit a = lower_; a <= *upper_; ++a) out.push_back(a);
  return out;
}

std::pair<double, double> DigitAlphabet::hull() const {
  const double lo = is_infinite() ? 0.0 : 1.0 / (static_cast<double>(*upper_) + 1.0);
  return {lo, 1.0 / static_cast<double>(lower_)};
}

double collocation_eigenvalue(const DigitAlphabet& alphabet, double s, const OperatorOptions& opt) {
  if (opt.nodes < 8) throw DomainError("collocation needs at least 8 nodes");
  const auto [lo, hi] = alphabet.hull();
  const numerics::ChebyshevGrid grid(lo, hi, opt.nodes);
  const std::size_t K = grid.size();
  const auto nodes = grid.nodes();

  std::vector<Digit> digits;
  std::vector<double> tail_rows;
  double tail_start = 0.0;
  int tail_order = 0;
  if (alphabet.is_infinite()) {
    if (!(s > 0.5)) throw DomainError("infinite alphabets need s > 1/2");
    const Digit last = alphabet.lower() + opt.truncation_extra + opt.truncation_scale * alphabet.lower();
    digits.reserve(static_cast<std::size_t>(last - alphabet.lower() + 1));
    for (Digit a = alphabet.lower(); a <= last; ++a) digits.push_back(a);
    tail_start = static_cast<double>(last) + 1.0;
    // Term m of the tail is about (N·last)^(−m) times term 0. Keep terms down
    // to 1e−13: higher derivative functionals on a short interval only add
    // cancellation noise.
    const double ratio = std::log10(static_cast<double>(alphabet.lower()) * tail_start);
    const int wanted = static_cast<int>(std::ceil(13.0 / ratio)) - 1;
    tail_order = std::clamp(wanted, 1, opt.tail_order);
    if (opt.tail_correction) tail_rows = grid.taylor_at_lo(tail_order);
  } else {
    digits = alphabet.digits();
  }

  numerics::DenseMatrix A(K);
  std::vector<double> basis(K);
  for (std::size_t i = 0; i < K; ++i) {
    const double x = nodes[i];
    for (Digit a : digits) {
      const double u = static_cast<double>(a) + x;
      const double w = std::pow(u, -2.0 * s);
      grid.basis(1.0 / u, basis);
      for (std::size_t k = 0; k < K; ++k) A(i, k) += w * basis[k];
    }
    if (!tail_rows.empty()) {
      // Σ_{a > last} (a + x)^(−2s) f(1/(a + x)) ≈ Σ_m f^(m)(0)/m! ζ(2s + m, last + 1 + x)
      for (int m = 0; m <= tail_order; ++m) {
        const double z = numerics::hurwitz_zeta(2.0 * s + m, tail_start + x).mid();
        const double* row = &tail_rows[static_cast<std::size_t>(m) * K];
        for (std::size_t k = 0; k < K; ++k) A(i, k) += z * row[k];
      }
    }
  }
  return numerics::power_iteration(A, opt.eig_tol).value;
}

DimensionEstimate transfer_dimension(const DigitAlphabet& alphabet, const OperatorOptions& opt) {
  const double lo = alphabet.is_infinite() ? 0.5 + 1e-7 : 0.0;
  auto lambda = [&](double s) { return collocation_eigenvalue(alphabet, s, opt); };
  const auto root = numerics::bisect_decreasing([&](double s) { return eigen_sign(lambda(s)); }, lo, 1.0, opt.tol);
  return {root.value, root.lo, root.hi, lambda(root.value) - 1.0, root.iterations};
}

double ulam_eigenvalue(const DigitAlphabet& alphabet, double s, std::size_t bins, double eig_tol) {
  if (alphabet.is_infinite()) throw DomainError("Ulam discretization needs a finite alphabet");
  if (bins < 64) throw DomainError("Ulam discretization needs at least 64 bins");
  const auto [lo, hi] = alphabet.hull();
  const double h = (hi - lo) / static_cast<double>(bins);
  const auto digits = alphabet.digits();
  auto edge = [&](std::size_t j) { return j == bins ? hi : lo + h * static_cast<double>(j); };

  numerics::SparseMatrix P;
  P.n = bins;
  P.row_start.push_back(0);
  std::vector<std::pair<std::size_t, double>> row;
  for (std::size_t i = 0; i < bins; ++i) {
    row.clear();
    const double c0 = edge(i);
    const double c1 = edge(i + 1);
    for (Digit ad : digits) {
      const double a = static_cast<double>(ad);
      const double y_lo = 1.0 / (a + c1);
      const double y_hi = 1.0 / (a + c0);
      const auto j_lo = static_cast<std::size_t>(std::clamp((y_lo - lo) / h, 0.0, static_cast<double>(bins - 1)));
      const auto j_hi = static_cast<std::size_t>(std::clamp((y_hi - lo) / h, 0.0, static_cast<double>(bins - 1)));
      for (std::size_t j = j_lo; j <= j_hi; ++j) {
        // x in bin i with 1/(a + x) in bin j.
        const double x0 = std::max(c0, 1.0 / edge(j + 1) - a);
        const double x1 = std::min(c1, 1.0 / edge(j) - a);
        if (!(x1 > x0)) continue;
        row.emplace_back(j, weight_integral(a + x0, a + x1, s) / h);
      }
    }
    std::sort(row.begin(), row.end());
    for (std::size_t p = 0; p < row.size(); ++p) {
      if (!P.col.empty() && P.col.size() > P.row_start.back() && P.col.back() == row[p].first) {
        P.val.back() += row[p].second;
      } else {
        P.col.push_back(row[p].first);
        P.val.push_back(row[p].second);
      }
    }
    P.row_start.push_back(P.col.size());
  }
  return numerics::power_iteration(P, eig_tol).value;
}

DimensionEstimate ulam_dimension(const DigitAlphabet& alphabet, std::size_t bins, double tol) {
  auto lambda = [&](double s) { return ulam_eigenvalue(alphabet, s, bins); };
  const auto root = numerics::bisect_decreasing([&](double s) { return eigen_sign(lambda(s)); }, 0.0, 1.0, tol);
  return {root.value, root.lo, root.hi, lambda(root.value) - 1.0, root.iterations};
}

double crude_critical_exponent(Digit N, int shift, double tol) {
  if (shift != 0 && shift != 1) throw DomainError("crude_critical_exponent: shift must be 0 or 1");
  if (N < 1) throw DomainError("crude_critical_exponent: N must be >= 1");
  if (N == 1 && shift == 0) {
    throw DomainError("crude_critical_exponent: Σ_{a>=1} a^(−2s) exceeds 1 for every s > 1/2, no root");
  }
  const double q = static_cast<double>(N) + shift;
  auto sign = [&](double s) {
    const auto z = numerics::hurwitz_zeta(2.0 * s, q);
    if (z.lo > 1.0) return 1;
    if (z.hi < 1.0) return -1;
    return 0;
  };
  const auto root = numerics::bisect_decreasing(sign, 0.5 + 1e-12, 4.0, tol);
  return root.value;
}

std::vector<SweepRow> good_dimension_sweep(std::span<const Digit> Ns, const OperatorOptions& opt) {
  if (Ns.empty()) throw DomainError("good_dimension_sweep: empty N list");
  for (Digit N : Ns) {
    if (N < 2) throw DomainError("good_dimension_sweep: every N must be >= 2");
  }
  std::vector<SweepRow> rows(Ns.size());
  parallel_for(Ns.size(), [&](std::size_t k) {
    const Digit N = Ns[k];
    const auto est = transfer_dimension(DigitAlphabet::at_least(N), opt);
    rows[k] = {N, crude_critical_exponent(N, 1), crude_critical_exponent(N, 0), est.value, est.residual};
  });
  return rows;
}

}  // namespace cusplab::transfer
