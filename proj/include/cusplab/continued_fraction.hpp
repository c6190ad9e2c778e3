#pragma once

// Continued fractions, convergents and Ford circles.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

#include "cusplab/hyperbolic.hpp"

namespace cusplab::cf {

using BigInt = boost::multiprecision::cpp_int;
using Digit = std::uint64_t;

/// x = integer_part + [a_1, a_2, ...]. The digit string is a finite prefix
/// followed by an optional period repeated forever.
class ContinuedFraction {
 public:
  static constexpr std::size_t kUnlimited = std::numeric_limits<std::size_t>::max();

  ContinuedFraction() = default;
  /// Throws DomainError if any digit is 0.
  ContinuedFraction(std::vector<Digit> prefix, std::vector<Digit> period = {}, BigInt integer_part = 0);

  const BigInt& integer_part() const noexcept { return integer_part_; }
  const std::vector<Digit>& prefix() const noexcept { return prefix_; }
  const std::vector<Digit>& period() const noexcept { return period_; }

  bool is_periodic() const noexcept { return !period_.empty(); }
  /// Number of digits available; kUnlimited for periodic expansions.
  std::size_t size() const noexcept { return is_periodic() ? kUnlimited : prefix_.size(); }

  /// Digits past this count came from exhausted floating precision.
  std::size_t reliable_digits() const noexcept { return reliable_; }
  void set_reliable_digits(std::size_t n) noexcept { reliable_ = n; }

  /// a_n for n >= 1. Throws InsufficientData past the end.
  Digit digit(std::size_t n) const;
  /// a_1..a_n. Throws InsufficientData if fewer than n exist.
  std::vector<Digit> digits(std::size_t n) const;

 private:
  std::vector<Digit> prefix_;
  std::vector<Digit> period_;
  BigInt integer_part_ = 0;
  std::size_t reliable_ = kUnlimited;
};

/// Exact expansion of p/q by Euclid, truncated to at most n digits.
/// Requires 0 < p/q < 1.
ContinuedFraction cf_expand(const BigInt& p, const BigInt& q, std::size_t n = ContinuedFraction::kUnlimited);

/// Expansion of a double in (0, 1). The digits are those of the exact binary
/// value of x; reliable_digits() counts how many are shared by every real
/// within one ulp of x.
ContinuedFraction cf_expand(double x, std::size_t n);

/// Exact eventually periodic expansion of (sign·sqrt(D) + r)/s for a
/// non-square D > 0 and s != 0. The integer part is split off.
ContinuedFraction cf_quadratic(const BigInt& D, const BigInt& r, const BigInt& s, int sign = +1);

struct Convergent {
  BigInt p;
  BigInt q;
};

/// p_k/q_k for k = 1..n, including the integer part. Throws InsufficientData
/// if fewer than n digits exist.
std::vector<Convergent> convergents(const ContinuedFraction& cf, std::size_t n);

/// Ford circle at p/q: base p/q with diameter 1/q². (1, 0) is the cusp at
/// infinity, the horoball {y > 1}. Throws DomainError unless gcd(p, q) = 1
/// and q >= 0.
hyperbolic::Horoball ford_circle(const BigInt& p, const BigInt& q);

}  // namespace cusplab::cf
