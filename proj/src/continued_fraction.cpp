#include "cusplab/continued_fraction.hpp"

#include <boost/multiprecision/integer.hpp>
#include <cmath>
#include <map>
#include <utility>

#include "cusplab/errors.hpp"

namespace cusplab::cf {

namespace {

// Floor division for signed big integers.
BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Digit to_digit(const BigInt& a) {
  if (a < 1 || a > std::numeric_limits<Digit>::max()) {
    throw DomainError("continued fraction digit out of 64-bit range");
  }
  return a.convert_to<Digit>();
}

std::vector<Digit> euclid(BigInt p, BigInt q, std::size_t n) {
  std::vector<Digit> out;
  while (p != 0 && out.size() < n) {
    // x = p/q in (0, 1): next digit is floor(q/p), remainder x' = (q mod p)/p.
    BigInt a = q / p;
    BigInt r = q % p;
    out.push_back(to_digit(a));
    q = p;
    p = r;
  }
  return out;
}

std::pair<BigInt, BigInt> exact_dyadic(double x) {
  int e = 0;
  const double mant = std::frexp(x, &e);
  const auto m = static_cast<std::int64_t>(std::ldexp(mant, 53));
  BigInt p = m;
  BigInt q = 1;
  const int shift = 53 - e;
  if (shift >= 0) {
    q <<= shift;
  } else {
    p <<= -shift;
  }
  const BigInt g = boost::multiprecision::gcd(p, q);
  return {p / g, q / g};
}

}  // namespace

ContinuedFraction::ContinuedFraction(std::vector<Digit> prefix, std::vector<Digit> period, BigInt integer_part)
    : prefix_(std::move(prefix)), period_(std::move(period)), integer_part_(std::move(integer_part)) {
  for (Digit a : prefix_) {
    if (a == 0) throw DomainError("continued fraction digits must be >= 1");
  }
  for (Digit a : period_) {
    if (a == 0) throw DomainError("continued fraction digits must be >= 1");
  }
}

Digit ContinuedFraction::digit(std::size_t n) const {
  if (n == 0) throw DomainError("digits are indexed from 1");
  if (n <= prefix_.size()) return prefix_[n - 1];
  if (period_.empty()) {
    throw InsufficientData("continued fraction has only " + std::to_string(prefix_.size()) + " digits");
  }
  return period_[(n - 1 - prefix_.size()) % period_.size()];
}

std::vector<Digit> ContinuedFraction::digits(std::size_t n) const {
  if (n > size()) {
    throw InsufficientData("requested " + std::to_string(n) + " digits, only " + std::to_string(size()) +
                           " available");
  }
  std::vector<Digit> out;
  out.reserve(n);
  for (std::size_t k = 1; k <= n; ++k) out.push_back(digit(k));
  return out;
}

ContinuedFraction cf_expand(const BigInt& p, const BigInt& q, std::size_t n) {
  if (q == 0) throw DomainError("cf_expand: zero denominator");
  BigInt num = p;
  BigInt den = q;
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num <= 0 || num >= den) throw DomainError("cf_expand: x must lie in (0, 1)");
  return ContinuedFraction(euclid(num, den, n));
}

ContinuedFraction cf_expand(double x, std::size_t n) {
  if (!(x > 0.0 && x < 1.0)) throw DomainError("cf_expand: x must lie in (0, 1)");
  if (n == 0) throw DomainError("cf_expand: depth must be >= 1");
  const auto [p, q] = exact_dyadic(x);
  ContinuedFraction out(euclid(p, q, n));

  // Digits shared by both neighbouring doubles are shared by everything in
  // between, because cylinder sets are intervals.
  const auto [lp, lq] = exact_dyadic(std::nextafter(x, 0.0));
  const auto [hp, hq] = exact_dyadic(std::nextafter(x, 1.0));
  const auto lo = euclid(lp, lq, n + 1);
  const auto hi = euclid(hp, hq, n + 1);
  // The last digit of a terminating expansion is ambiguous ([..., a] equals
  // [..., a − 1, 1]), so it never counts.
  auto usable = [n](const std::vector<Digit>& ds) { return ds.size() <= n ? ds.size() - 1 : ds.size(); };
  std::size_t common = 0;
  while (common < usable(lo) && common < usable(hi) && lo[common] == hi[common]) ++common;
  out.set_reliable_digits(std::min({common, usable(out.prefix()), n}));
  return out;
}

ContinuedFraction cf_quadratic(const BigInt& D, const BigInt& r, const BigInt& s, int sign) {
  if (D <= 0) throw DomainError("cf_quadratic: D must be positive");
  if (s == 0) throw DomainError("cf_quadratic: zero denominator");
  const BigInt root = boost::multiprecision::sqrt(D);
  if (root * root == D) throw DomainError("cf_quadratic: D is a perfect square");
  if (sign != 1 && sign != -1) throw DomainError("cf_quadratic: sign must be +1 or -1");

  // Write x = (P + sqrt(d)) / Q with Q | d − P².
  BigInt P = sign > 0 ? r : -r;
  BigInt Q = sign > 0 ? s : -s;
  BigInt d = D;
  if ((d - P * P) % Q != 0) {
    const BigInt scale = Q < 0 ? BigInt(-Q) : Q;
    P *= scale;
    d *= scale * scale;
    Q *= scale;
  }
  const BigInt isq = boost::multiprecision::sqrt(d);

  auto next_digit = [&](const BigInt& p, const BigInt& q) {
    // floor((p + sqrt(d)) / q) with sqrt(d) irrational in (isq, isq + 1).
    if (q > 0) return floor_div(p + isq, q);
    return BigInt(-floor_div(p + isq, -q) - 1);
  };

  const BigInt a0 = next_digit(P, Q);
  P = a0 * Q - P;
  Q = (d - P * P) / Q;

  std::vector<Digit> digits;
  std::map<std::pair<BigInt, BigInt>, std::size_t> seen;
  while (true) {
    // Current tail is 1/(x − a) = (P + sqrt(d))/Q after the update above.
    auto key = std::make_pair(P, Q);
    if (auto it = seen.find(key); it != seen.end()) {
      std::vector<Digit> prefix(digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(it->second));
      std::vector<Digit> period(digits.begin() + static_cast<std::ptrdiff_t>(it->second), digits.end());
      return ContinuedFraction(std::move(prefix), std::move(period), a0);
    }
    seen.emplace(std::move(key), digits.size());
    const BigInt a = next_digit(P, Q);
    digits.push_back(to_digit(a));
    P = a * Q - P;
    Q = (d - P * P) / Q;
    if (digits.size() > 100000) throw NumericError("cf_quadratic: period not found", "D=" + D.str());
  }
}

std::vector<Convergent> convergents(const ContinuedFraction& cf, std::size_t n) {
  const auto digits = cf.digits(n);
  std::vector<Convergent> out;
  out.reserve(n);
  BigInt p_prev = 1;
  BigInt q_prev = 0;
  BigInt p = cf.integer_part();
  BigInt q = 1;
  for (Digit a : digits) {
    BigInt p_next = BigInt(a) * p + p_prev;
    BigInt q_next = BigInt(a) * q + q_prev;
    p_prev = std::move(p);
    q_prev = std::move(q);
    p = std::move(p_next);
    q = std::move(q_next);
    out.push_back({p, q});
  }
  return out;
}

hyperbolic::Horoball ford_circle(const BigInt& p, const BigInt& q) {
  if (q < 0) throw DomainError("ford_circle: q must be >= 0");
  if (boost::multiprecision::gcd(p, q) != 1) throw DomainError("ford_circle: p/q is not in lowest terms");
  if (q == 0) return {hyperbolic::BoundaryPoint::infinity(), 1.0};
  const double qd = q.convert_to<double>();
  // Divide exactly first so large p, q keep a correctly rounded base.
  const BigInt whole = floor_div(p, q);
  const BigInt rest = p - whole * q;
  const double base = whole.convert_to<double>() + rest.convert_to<double>() / qd;
  return {base, 1.0 / (qd * qd)};
}

}  // namespace cusplab::cf
