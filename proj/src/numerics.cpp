#include "cusplab/numerics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "cusplab/errors.hpp"

namespace cusplab::numerics {

namespace {

// B_{2j} / (2j)! for j = 1..7.
constexpr std::array<double, 7> kBernoulliOverFactorial = {
    (1.0 / 6.0) / 2.0,
    (-1.0 / 30.0) / 24.0,
    (1.0 / 42.0) / 720.0,
    (-1.0 / 30.0) / 40320.0,
    (5.0 / 66.0) / 3628800.0,
    (-691.0 / 2730.0) / 479001600.0,
    (7.0 / 6.0) / 87178291200.0,
};

}  // namespace

Enclosure hurwitz_zeta(double sigma, double q) {
  if (!(sigma > 1.0) || !(q > 0.0)) throw DomainError("hurwitz_zeta needs sigma > 1 and q > 0");
  const double shift_to = std::max(16.0, sigma + 10.0);
  double direct = 0.0;
  double x = q;
  while (x < shift_to) {
    direct += std::pow(x, -sigma);
    x += 1.0;
  }
  double tail = std::pow(x, 1.0 - sigma) / (sigma - 1.0) + 0.5 * std::pow(x, -sigma);
  double rising = sigma;  // σ(σ+1)...(σ+2j−2)
  double power = std::pow(x, -sigma - 1.0);
  const double inv_x2 = 1.0 / (x * x);
  double omitted = 0.0;
  for (std::size_t j = 0; j < kBernoulliOverFactorial.size(); ++j) {
    const double term = kBernoulliOverFactorial[j] * rising * power;
    if (j + 1 == kBernoulliOverFactorial.size()) {
      omitted = std::abs(term);
      break;
    }
    tail += term;
    const double k = 2.0 * static_cast<double>(j + 1);
    rising *= (sigma + k - 1.0) * (sigma + k);
    power *= inv_x2;
  }
  const double value = direct + tail;
  const double slack = omitted + 4.0 * std::numeric_limits<double>::epsilon() * std::abs(value);
  return {value - slack, value + slack};
}

Root bisect_decreasing(const SignOracle& sign, double lo, double hi, double tol, int max_iter) {
  const int s_lo = sign(lo);
  if (s_lo == 0) return {lo, lo, lo, 0, true};
  const int s_hi = sign(hi);
  if (s_hi == 0) return {hi, hi, hi, 0, true};
  if (s_lo < 0 || s_hi > 0) {
    std::ostringstream diag;
    diag << "sign(" << lo << ")=" << s_lo << " sign(" << hi << ")=" << s_hi;
    throw NumericError("bisection bracket has no sign change", diag.str());
  }
  int it = 0;
  while (hi - lo > tol && it < max_iter) {
    ++it;
    const double mid = 0.5 * (lo + hi);
    const int s = sign(mid);
    if (s > 0) {
      lo = mid;
    } else if (s < 0) {
      hi = mid;
    } else {
      return {mid, lo, hi, it, false};
    }
  }
  return {0.5 * (lo + hi), lo, hi, it, hi - lo <= tol};
}

ChebyshevGrid::ChebyshevGrid(double lo, double hi, std::size_t count)
    : lo_(lo), hi_(hi), nodes_(count), weights_(count) {
  if (count < 2 || !(hi > lo)) throw DomainError("Chebyshev grid needs count >= 2 and lo < hi");
  const double mid = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const double k_count = static_cast<double>(count);
  for (std::size_t k = 0; k < count; ++k) {
    const double theta = (2.0 * static_cast<double>(k) + 1.0) * std::numbers::pi / (2.0 * k_count);
    nodes_[k] = mid - half * std::cos(theta);
    weights_[k] = ((k % 2 == 0) ? 1.0 : -1.0) * std::sin(theta);
  }
}

void ChebyshevGrid::basis(double y, std::span<double> out) const {
  double total = 0.0;
  for (std::size_t k = 0; k < nodes_.size(); ++k) {
    const double diff = y - nodes_[k];
    if (diff == 0.0) {
      std::fill(out.begin(), out.end(), 0.0);
      out[k] = 1.0;
      return;
    }
    out[k] = weights_[k] / diff;
    total += out[k];
  }
  for (double& v : out) v /= total;
}

double ChebyshevGrid::interpolate(std::span<const double> values, double y) const {
  double num = 0.0;
  double den = 0.0;
  for (std::size_t k = 0; k < nodes_.size(); ++k) {
    const double diff = y - nodes_[k];
    if (diff == 0.0) return values[k];
    const double t = weights_[k] / diff;
    num += t * values[k];
    den += t;
  }
  return num / den;
}

std::vector<double> ChebyshevGrid::taylor_at_lo(int order) const {
  const std::size_t n = nodes_.size();
  const double kn = static_cast<double>(n);
  std::vector<double> rows(static_cast<std::size_t>(order + 1) * n, 0.0);
  const double scale = 2.0 / (hi_ - lo_);
  for (int m = 0; m <= order; ++m) {
    // T_j^(m)(−1) = (−1)^(j+m) Π_{i<m} (j² − i²)/(2i + 1)
    std::vector<double> deriv(n);
    for (std::size_t j = 0; j < n; ++j) {
      double d = ((j + static_cast<std::size_t>(m)) % 2 == 0) ? 1.0 : -1.0;
      const double jj = static_cast<double>(j);
      for (int i = 0; i < m; ++i) d *= (jj * jj - i * i) / (2.0 * i + 1.0);
      deriv[j] = d;
    }
    double factor = 1.0;
    for (int i = 1; i <= m; ++i) factor *= scale / i;
    for (std::size_t k = 0; k < n; ++k) {
      const double theta = (2.0 * static_cast<double>(k) + 1.0) * std::numbers::pi / (2.0 * kn);
      double acc = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        // Node k sits at t = −cos θ_k, so T_j(t_k) = (−1)^j cos(j θ_k).
        const double tj = ((j % 2 == 0) ? 1.0 : -1.0) * std::cos(static_cast<double>(j) * theta);
        const double coef = (2.0 / kn) * (j == 0 ? 0.5 : 1.0) * tj;
        acc += coef * deriv[j];
      }
      rows[static_cast<std::size_t>(m) * n + k] = factor * acc;
    }
  }
  return rows;
}

namespace {

template <typename Apply>
Eigenpair power_iterate(std::size_t n, Apply&& apply, double tol, int max_iter) {
  std::vector<double> v(n, 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> w(n);
  double estimate = 0.0;
  double previous = std::numeric_limits<double>::quiet_NaN();
  int settled = 0;
  for (int it = 1; it <= max_iter; ++it) {
    apply(v, w);
    double dot = 0.0;
    double norm2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      dot += w[i] * v[i];
      norm2 += w[i] * w[i];
    }
    estimate = dot;  // v has unit norm
    const double norm = std::sqrt(norm2);
    if (!(norm > 0.0) || !std::isfinite(norm)) {
      throw NumericError("power iteration degenerated", "iteration " + std::to_string(it));
    }
    for (std::size_t i = 0; i < n; ++i) v[i] = w[i] / norm;
    if (std::abs(estimate - previous) <= tol * std::abs(estimate)) {
      if (++settled >= 3) return {estimate, std::move(v), it};
    } else {
      settled = 0;
    }
    previous = estimate;
  }
  std::ostringstream diag;
  diag << "last estimate " << estimate << ", previous " << previous << ", tol " << tol;
  throw NumericError("power iteration did not converge", diag.str());
}

}  // namespace

Eigenpair power_iteration(const DenseMatrix& m, double tol, int max_iter) {
  return power_iterate(
      m.n,
      [&](const std::vector<double>& v, std::vector<double>& w) {
        for (std::size_t i = 0; i < m.n; ++i) {
          double acc = 0.0;
          const double* row = &m.data[i * m.n];
          for (std::size_t j = 0; j < m.n; ++j) acc += row[j] * v[j];
          w[i] = acc;
        }
      },
      tol, max_iter);
}

Eigenpair power_iteration(const SparseMatrix& m, double tol, int max_iter) {
  return power_iterate(
      m.n,
      [&](const std::vector<double>& v, std::vector<double>& w) {
        for (std::size_t i = 0; i < m.n; ++i) {
          double acc = 0.0;
          for (std::size_t p = m.row_start[i]; p < m.row_start[i + 1]; ++p) acc += m.val[p] * v[m.col[p]];
          w[i] = acc;
        }
      },
      tol, max_iter);
}

namespace {

template <typename Better>
double tail_extreme(std::span<const double> xs, double fraction, Better better) {
  const auto n = xs.size();
  const auto start = static_cast<std::size_t>(std::floor((1.0 - fraction) * static_cast<double>(n)));
  double best = std::numeric_limits<double>::quiet_NaN();
  for (std::size_t i = std::min(start, n); i < n; ++i) {
    if (std::isnan(xs[i])) continue;
    if (std::isnan(best) || better(xs[i], best)) best = xs[i];
  }
  return best;
}

}  // namespace

double tail_sup(std::span<const double> xs, double fraction) {
  return tail_extreme(xs, fraction, [](double a, double b) { return a > b; });
}

double tail_inf(std::span<const double> xs, double fraction) {
  return tail_extreme(xs, fraction, [](double a, double b) { return a < b; });
}

}  // namespace cusplab::numerics
