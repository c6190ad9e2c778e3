#pragma once

// Geometry of the upper half-plane model H = {x + iy : y > 0}.
//
// Everything is computed in H. Disc-model statements are transported through
// the Cayley map, which sends the disc origin to i and the boundary point 1
// to infinity.

#include <compare>
#include <complex>
#include <optional>
#include <utility>

namespace cusplab::hyperbolic {

using Complex = std::complex<double>;

/// A point of the extended real line R ∪ {∞}.
class BoundaryPoint {
 public:
  constexpr BoundaryPoint(double x) : value_(x), infinite_(false) {}  // NOLINT: implicit by design of the API

  static constexpr BoundaryPoint infinity() { return BoundaryPoint(); }

  constexpr bool is_infinite() const noexcept { return infinite_; }
  constexpr bool is_finite() const noexcept { return !infinite_; }

  /// Finite value; throws DomainError for ∞.
  double value() const;

  friend constexpr bool operator==(const BoundaryPoint& a, const BoundaryPoint& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  // ∞ is greater than every finite value.
  friend constexpr std::partial_ordering operator<=>(const BoundaryPoint& a, const BoundaryPoint& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.value_ <=> b.value_;
  }

 private:
  constexpr BoundaryPoint() : value_(0.0), infinite_(true) {}

  double value_;
  bool infinite_;
};

/// Interior point x + iy with y > 0.
class HPoint {
 public:
  HPoint(double x, double y);

  /// The base point i.
  static HPoint base() { return HPoint(0.0, 1.0); }
  static HPoint from_complex(Complex z) { return HPoint(z.real(), z.imag()); }

  double x() const noexcept { return x_; }
  double y() const noexcept { return y_; }
  Complex as_complex() const noexcept { return {x_, y_}; }

  friend bool operator==(const HPoint&, const HPoint&) = default;

 private:
  double x_;
  double y_;
};

/// A point of the closed upper half-plane including ∞. Used where an
/// operation accepts interior and boundary points alike.
class ExtPoint {
 public:
  ExtPoint(const HPoint& p) : z_(p.as_complex()), infinite_(false) {}  // NOLINT
  ExtPoint(const BoundaryPoint& b)  // NOLINT
      : z_(b.is_infinite() ? 0.0 : b.value(), 0.0), infinite_(b.is_infinite()) {}
  ExtPoint(double x) : ExtPoint(BoundaryPoint(x)) {}  // NOLINT

  static ExtPoint infinity() { return ExtPoint(BoundaryPoint::infinity()); }

  bool is_infinite() const noexcept { return infinite_; }
  bool is_interior() const noexcept { return !infinite_ && z_.imag() > 0.0; }
  Complex value() const;

  /// The boundary point this represents; throws for interior points.
  BoundaryPoint boundary() const;
  /// The interior point this represents; throws for boundary points.
  HPoint interior() const;

 private:
  Complex z_;
  bool infinite_;
};

/// Element of PSL2(R) acting by z ↦ (az + b)/(cz + d), stored with ad − bc = 1.
class MoebiusMap {
 public:
  /// Normalizes to unit determinant. Throws DomainError unless ad − bc > 0.
  MoebiusMap(double a, double b, double c, double d);

  static MoebiusMap identity() { return {1.0, 0.0, 0.0, 1.0}; }

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  double c() const noexcept { return c_; }
  double d() const noexcept { return d_; }
  double det() const noexcept { return a_ * d_ - b_ * c_; }

  MoebiusMap inverse() const { return {d_, -b_, -c_, a_}; }

  HPoint operator()(const HPoint& z) const;
  BoundaryPoint operator()(const BoundaryPoint& x) const;
  ExtPoint operator()(const ExtPoint& p) const;

  friend MoebiusMap operator*(const MoebiusMap& f, const MoebiusMap& g);

 private:
  double a_, b_, c_, d_;
};

/// Oriented geodesic from `start` to `end`.
class Geodesic {
 public:
  Geodesic(BoundaryPoint start, BoundaryPoint end);

  const BoundaryPoint& start() const noexcept { return start_; }
  const BoundaryPoint& end() const noexcept { return end_; }
  bool is_vertical() const noexcept { return start_.is_infinite() || end_.is_infinite(); }
  Geodesic reversed() const { return {end_, start_}; }

  friend bool operator==(const Geodesic&, const Geodesic&) = default;

 private:
  BoundaryPoint start_;
  BoundaryPoint end_;
};

/// Horoball tangent to the boundary at `base`. For a finite base, `size` is the
/// Euclidean diameter of the disc; for base ∞ it is the height of the
/// bounding horizontal line.
class Horoball {
 public:
  Horoball(BoundaryPoint base, double size);

  const BoundaryPoint& base() const noexcept { return base_; }
  double size() const noexcept { return size_; }

  /// Highest Euclidean point of the disc. Undefined for base ∞.
  HPoint top() const;

  /// Whether z lies in the open horoball.
  bool contains(const HPoint& z) const;

 private:
  BoundaryPoint base_;
  double size_;
};

Horoball apply(const MoebiusMap& g, const Horoball& h);
Geodesic apply(const MoebiusMap& g, const Geodesic& geo);

/// [x, y, z, t] = (x − y)(z − t) / ((y − z)(t − x)). At most one argument may
/// be ∞; the two factors containing it cancel. Coincident points throw.
Complex cross_ratio(const ExtPoint& x, const ExtPoint& y, const ExtPoint& z, const ExtPoint& t);

/// Closed form: d = 2 asinh(|z − w| / (2 sqrt(Im z Im w))).
double hyp_distance(const HPoint& z, const HPoint& w);

/// Geodesic through z and w, oriented so that travelling from z to w runs
/// from start to end.
Geodesic geodesic_through(const HPoint& z, const HPoint& w);

/// d(z, w) = log [w, ξ, z, η] with (ξ, η) the endpoints of geodesic_through(z, w).
double distance_via_crossratio(const HPoint& z, const HPoint& w);

struct LemmaConstants {
  double center;    // c, centre of the semicircle joining i to n − 1/2
  double distance;  // d(i, i + 2c)
};

/// Centre and distance for the semicircle through i ending at n − 1/2, n ≥ 2.
LemmaConstants lemma_geodesic_constants(long n);

/// Signed penetration of a geodesic into a horoball.
///
/// `formal_depth` is log(R / H) after moving the base point to ∞, where R is
/// the Euclidean radius of the geodesic and H the height of the horoball. It
/// is the maximal distance from the geodesic to the horocycle when positive.
/// Non-positive values mean the geodesic stays outside (0 is tangency); they
/// are kept signed because gap computations use them.
struct Penetration {
  enum class Kind { enters, tangent, misses };

  double formal_depth;

  Kind kind() const noexcept {
    if (formal_depth > 0.0) return Kind::enters;
    if (formal_depth == 0.0) return Kind::tangent;
    return Kind::misses;
  }
  bool enters() const noexcept { return formal_depth > 0.0; }
};

/// Throws DomainError if an endpoint of the geodesic is the base point.
Penetration penetration_depth(const Horoball& h, const Geodesic& g);

struct Chord {
  HPoint entry;
  HPoint exit;
};

/// Intersections of the geodesic with the horocycle, in travel order.
/// Throws DomainError unless the geodesic enters the open horoball.
Chord entry_exit_points(const Horoball& h, const Geodesic& g);

/// Hyperbolic length of the intra-horoball segment for a given depth:
/// 2 arccosh(e^depth), computed without overflow for large depths.
double chord_length(double depth);

/// Set of endpoints ξ such that the geodesic ray from the viewpoint to ξ meets
/// the horoball. The arc runs counter-clockwise in the disc picture centred at
/// the viewpoint, i.e. increasing along R, and may pass through ∞ (then
/// `from > to`).
struct Shadow {
  BoundaryPoint from;
  BoundaryPoint to;
  double angular_length;  // visual angle at the viewpoint, in (0, 2π)
  double distance;        // d(viewpoint, horoball), the distance to its nearest point

  bool wraps() const { return to < from; }
  /// Euclidean length on R; +∞ if the shadow contains ∞.
  double length() const;
};

/// Throws DomainError if the viewpoint lies in the closed horoball.
Shadow shadow(const Horoball& h, const HPoint& viewpoint);

/// Disc → half-plane, w ↦ i(1 + w)/(1 − w). Requires |w| ≤ 1.
ExtPoint cayley(Complex w);
/// Half-plane → disc, z ↦ (z − i)/(z + i); ∞ ↦ 1.
Complex inverse_cayley(const ExtPoint& z);

}  // namespace cusplab::hyperbolic
