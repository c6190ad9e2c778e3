#include "cusplab/hyperbolic.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "cusplab/errors.hpp"

namespace cusplab::hyperbolic {

namespace {

constexpr Complex kI{0.0, 1.0};

}  // namespace

double BoundaryPoint::value() const {
  if (infinite_) throw DomainError("boundary point is infinite");
  return value_;
}

HPoint::HPoint(double x, double y) : x_(x), y_(y) {
  if (!(y > 0.0) || !std::isfinite(x) || !std::isfinite(y)) {
    throw DomainError("interior point requires finite x and y > 0");
  }
}

Complex ExtPoint::value() const {
  if (infinite_) throw DomainError("point is infinite");
  return z_;
}

BoundaryPoint ExtPoint::boundary() const {
  if (infinite_) return BoundaryPoint::infinity();
  if (z_.imag() != 0.0) throw DomainError("point is not on the boundary");
  return z_.real();
}

HPoint ExtPoint::interior() const {
  if (!is_interior()) throw DomainError("point is not interior");
  return HPoint::from_complex(z_);
}

MoebiusMap::MoebiusMap(double a, double b, double c, double d) {
  const double det = a * d - b * c;
  if (!(det > 0.0) || !std::isfinite(det)) {
    throw DomainError("Moebius map needs a positive finite determinant");
  }
  const double s = std::sqrt(det);
  a_ = a / s;
  b_ = b / s;
  c_ = c / s;
  d_ = d / s;
}

HPoint MoebiusMap::operator()(const HPoint& z) const {
  const Complex zc = z.as_complex();
  const Complex den = c_ * zc + d_;
  const Complex w = (a_ * zc + b_) / den;
  // Im w = y / |cz + d|^2 exactly since ad - bc = 1.
  return {w.real(), z.y() / std::norm(den)};
}

BoundaryPoint MoebiusMap::operator()(const BoundaryPoint& x) const {
  if (x.is_infinite()) {
    if (c_ == 0.0) return BoundaryPoint::infinity();
    return a_ / c_;
  }
  const double den = c_ * x.value() + d_;
  if (den == 0.0) return BoundaryPoint::infinity();
  return (a_ * x.value() + b_) / den;
}

ExtPoint MoebiusMap::operator()(const ExtPoint& p) const {
  if (p.is_interior()) return (*this)(p.interior());
  return (*this)(p.boundary());
}

MoebiusMap operator*(const MoebiusMap& f, const MoebiusMap& g) {
  return {f.a_ * g.a_ + f.b_ * g.c_, f.a_ * g.b_ + f.b_ * g.d_,
          f.c_ * g.a_ + f.d_ * g.c_, f.c_ * g.b_ + f.d_ * g.d_};
}

Geodesic::Geodesic(BoundaryPoint start, BoundaryPoint end) : start_(start), end_(end) {
  if (start_ == end_) throw DomainError("geodesic endpoints must differ");
}

Horoball::Horoball(BoundaryPoint base, double size) : base_(base), size_(size) {
  if (!(size > 0.0) || !std::isfinite(size)) throw DomainError("horoball size must be positive");
}

HPoint Horoball::top() const {
  if (base_.is_infinite()) throw DomainError("horoball at infinity has no top");
  return {base_.value(), size_};
}

bool Horoball::contains(const HPoint& z) const {
  if (base_.is_infinite()) return z.y() > size_;
  const double r = 0.5 * size_;
  return std::hypot(z.x() - base_.value(), z.y() - r) < r;
}

Horoball apply(const MoebiusMap& g, const Horoball& h) {
  if (h.base().is_finite()) {
    const double x0 = h.base().value();
    const double den = g.c() * x0 + g.d();
    if (den == 0.0) return {BoundaryPoint::infinity(), 1.0 / (g.c() * g.c() * h.size())};
    return {(g.a() * x0 + g.b()) / den, h.size() / (den * den)};
  }
  if (g.c() == 0.0) return {BoundaryPoint::infinity(), g.a() * g.a() * h.size()};
  return {g.a() / g.c(), 1.0 / (h.size() * g.c() * g.c())};
}

Geodesic apply(const MoebiusMap& g, const Geodesic& geo) {
  return {g(geo.start()), g(geo.end())};
}

Complex cross_ratio(const ExtPoint& x, const ExtPoint& y, const ExtPoint& z, const ExtPoint& t) {
  const ExtPoint* pts[4] = {&x, &y, &z, &t};
  int infinite = 0;
  for (const auto* p : pts) infinite += p->is_infinite() ? 1 : 0;
  if (infinite > 1) throw DomainError("cross-ratio: more than one point at infinity");
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (!pts[i]->is_infinite() && !pts[j]->is_infinite() && pts[i]->value() == pts[j]->value()) {
        throw DomainError("cross-ratio: coincident points");
      }
    }
  }
  if (x.is_infinite()) return -(z.value() - t.value()) / (y.value() - z.value());
  if (y.is_infinite()) return -(z.value() - t.value()) / (t.value() - x.value());
  if (z.is_infinite()) return -(x.value() - y.value()) / (t.value() - x.value());
  if (t.is_infinite()) return -(x.value() - y.value()) / (y.value() - z.value());
  return (x.value() - y.value()) * (z.value() - t.value()) /
         ((y.value() - z.value()) * (t.value() - x.value()));
}

double hyp_distance(const HPoint& z, const HPoint& w) {
  const double chord = std::abs(z.as_complex() - w.as_complex());
  return 2.0 * std::asinh(chord / (2.0 * std::sqrt(z.y() * w.y())));
}

Geodesic geodesic_through(const HPoint& z, const HPoint& w) {
  if (z == w) throw DomainError("geodesic_through: points coincide");
  if (z.x() == w.x()) {
    if (w.y() > z.y()) return {z.x(), BoundaryPoint::infinity()};
    return {BoundaryPoint::infinity(), z.x()};
  }
  const double zz = std::norm(z.as_complex());
  const double ww = std::norm(w.as_complex());
  const double c = (ww - zz) / (2.0 * (w.x() - z.x()));
  const double r = std::hypot(z.x() - c, z.y());
  // The endpoints multiply to c^2 - r^2 = 2 c Re z - |z|^2; take the
  // larger-magnitude root directly and the other from the product.
  const double product = 2.0 * c * z.x() - zz;
  double lo = 0.0;
  double hi = 0.0;
  if (c >= 0.0) {
    hi = c + r;
    lo = product / hi;
  } else {
    lo = c - r;
    hi = product / lo;
  }
  if (w.x() > z.x()) return {lo, hi};
  return {hi, lo};
}

double distance_via_crossratio(const HPoint& z, const HPoint& w) {
  const Geodesic g = geodesic_through(z, w);
  return std::log(std::abs(cross_ratio(w, g.start(), z, g.end())));
}

LemmaConstants lemma_geodesic_constants(long n) {
  if (n < 2) throw DomainError("lemma_geodesic_constants needs n >= 2");
  const double nn = static_cast<double>(n);
  const double c = (4.0 * nn * nn - 4.0 * nn - 3.0) / (4.0 * (2.0 * nn - 1.0));
  const double half = nn - 0.5;
  const double offset = 2.0 * c - half;
  return {c, std::log((1.0 + half * half) / (1.0 + offset * offset))};
}

Penetration penetration_depth(const Horoball& h, const Geodesic& g) {
  if (g.start() == h.base() || g.end() == h.base()) {
    throw DomainError("geodesic ends at the horoball base point");
  }
  if (h.base().is_infinite()) {
    const double width = std::abs(g.end().value() - g.start().value());
    return {std::log(width / (2.0 * h.size()))};
  }
  const double x0 = h.base().value();
  const double D = h.size();
  if (g.start().is_infinite() || g.end().is_infinite()) {
    const double foot = g.start().is_infinite() ? g.end().value() : g.start().value();
    return {std::log(D / (2.0 * std::abs(foot - x0)))};
  }
  const double alpha = g.start().value();
  const double beta = g.end().value();
  return {std::log(D * std::abs(alpha - beta) / (2.0 * std::abs(alpha - x0) * std::abs(beta - x0)))};
}

Chord entry_exit_points(const Horoball& h, const Geodesic& g) {
  if (!penetration_depth(h, g).enters()) {
    throw DomainError("entry_exit_points: geodesic does not enter the horoball");
  }
  // Move the base point to ∞, where the horoball is {y > height}.
  const MoebiusMap to_infinity = h.base().is_infinite()
                                     ? MoebiusMap::identity()
                                     : MoebiusMap(0.0, -1.0, 1.0, -h.base().value());
  const double height = h.base().is_infinite() ? h.size() : 1.0 / h.size();
  const double a = to_infinity(g.start()).value();
  const double b = to_infinity(g.end()).value();
  const double mid = 0.5 * (a + b);
  const double radius = 0.5 * std::abs(b - a);
  const double half = std::sqrt((radius - height) * (radius + height));
  HPoint left(mid - half, height);
  HPoint right(mid + half, height);
  const MoebiusMap back = to_infinity.inverse();
  if (a < b) return {back(left), back(right)};
  return {back(right), back(left)};
}

double chord_length(double depth) {
  if (depth < 0.0) throw DomainError("chord_length needs a non-negative depth");
  return 2.0 * (depth + std::log1p(std::sqrt(-std::expm1(-2.0 * depth))));
}

double Shadow::length() const {
  if (from.is_infinite() || to.is_infinite() || wraps()) return std::numeric_limits<double>::infinity();
  return to.value() - from.value();
}

Shadow shadow(const Horoball& h, const HPoint& viewpoint) {
  double distance = 0.0;
  if (h.base().is_infinite()) {
    distance = std::log(h.size() / viewpoint.y());
  } else {
    const double dx = viewpoint.x() - h.base().value();
    distance = std::log((dx * dx + viewpoint.y() * viewpoint.y()) / (h.size() * viewpoint.y()));
  }
  if (!(distance > 0.0)) throw DomainError("shadow: viewpoint lies in the closed horoball");

  // Recentre at the viewpoint, then look from the disc origin: rays are radii
  // and the horoball is a disc tangent to the circle at the image of its base.
  const MoebiusMap recentre(1.0, -viewpoint.x(), 0.0, viewpoint.y());
  const Complex base_dir = inverse_cayley(recentre(ExtPoint(h.base())));
  const double phi = std::arg(base_dir);
  const double half_angle = std::asin(std::exp(-distance));
  const MoebiusMap back = recentre.inverse();
  auto boundary_at = [&](double angle) {
    return back(cayley(std::polar(1.0, angle)).boundary());
  };
  return {boundary_at(phi - half_angle), boundary_at(phi + half_angle), 2.0 * half_angle, distance};
}

ExtPoint cayley(Complex w) {
  const double r = std::abs(w);
  if (r > 1.0 + 1e-12) throw DomainError("cayley: point outside the closed disc");
  if (w == Complex(1.0, 0.0)) return ExtPoint::infinity();
  const Complex z = kI * (1.0 + w) / (1.0 - w);
  if (std::abs(1.0 - r) <= 1e-12) return BoundaryPoint(z.real());
  return HPoint::from_complex(z);
}

Complex inverse_cayley(const ExtPoint& z) {
  if (z.is_infinite()) return {1.0, 0.0};
  const Complex v = z.value();
  return (v - kI) / (v + kI);
}

}  // namespace cusplab::hyperbolic
