#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "steiner/errors.hpp"

namespace steiner {

// Points of the plane are complex numbers; all constructions multiply by
// unit-modulus rotation factors.
using Point = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr double kSteinerAngle = 2.0 * std::numbers::pi / 3.0;

// Shared tolerances: absolute 1e-9 on O(1) coordinates, relative 1e-9 on
// lengths, scale-invariant 1e-12 cross-product test for collinearity.
inline constexpr double kCoordTol = 1e-9;
inline constexpr double kLengthRelTol = 1e-9;
inline constexpr double kCollinearTol = 1e-12;

// omega = e^{i pi/3}, the sixth root of unity; omega + conj(omega) = 1.
Point unit_rotation(double angle);
Point omega();
Point omega_pow(int exponent);

inline double cross(Point a, Point b) { return a.real() * b.imag() - a.imag() * b.real(); }
inline double dot(Point a, Point b) { return a.real() * b.real() + a.imag() * b.imag(); }
inline double dist(Point a, Point b) { return std::abs(a - b); }

inline bool is_finite(Point p) {
  return std::isfinite(p.real()) && std::isfinite(p.imag());
}

inline bool approx_eq(Point a, Point b, double tol = kCoordTol) {
  return std::abs(a - b) <= tol;
}

struct Circle {
  Point center;
  double radius = 0.0;  // >= 0

  bool contains(Point p, double tol = 0.0) const {
    return std::abs(p - center) <= radius + tol;
  }
};

enum class Side { left, right };

// center + (p - center) e^{i angle}
Point rotate(Point p, Point center, double angle);

// The point t with |ta| = |tb| = |ab| on the requested side of the directed
// line a -> b.  Throws CoincidentPoints if a == b within tolerance.
Point third_equilateral_point(Point a, Point b, Side side);

// Scale-invariant collinearity test: |cross(b-a, c-a)| <= 1e-12 |b-a| |c-a|.
bool collinear(Point a, Point b, Point c);

// Circumcircle of a nondegenerate triangle.  Throws CollinearPoints.
Circle circumcircle(Point a, Point b, Point c);

// (|ab| + |bc|) / |ac|.  Bounded by 1/cos(theta/2) where theta is the
// exterior angle at b.  Throws CoincidentPoints if a == c.
double reverse_triangle_ratio(Point a, Point b, Point c);

// Convex angle at apex between rays apex->a and apex->b, in [0, pi].
double angle_at(Point apex, Point a, Point b);

// Signed turn at b when walking a -> b -> c: the angle in [-pi, pi] by which
// the continuation of ab must rotate to line up with bc.  Positive turns are
// counterclockwise (left).
double signed_turn(Point a, Point b, Point c);

// A polygonal path together with the signed turn at each internal vertex.
struct PolyPath {
  std::vector<Point> vertices;  // length >= 2
  std::vector<double> turns;    // length = vertices.size() - 2

  // Builds the path and computes the turns from the geometry.
  static PolyPath from_vertices(std::vector<Point> vertices);

  double length() const;
  Point start() const { return vertices.front(); }
  Point end() const { return vertices.back(); }
  double endpoint_distance() const { return std::abs(end() - start()); }
};

// kappa = max over contiguous turn windows of |sum of turns|.
double path_kappa(const PolyPath& path);

struct SchmidtReport {
  double length_ratio = 0.0;  // sum of edge lengths / endpoint distance
  double bound = 0.0;         // 1 / cos(kappa/2)
  bool holds = false;
};

// Checks the chord-length inequality for paths of total turn kappa < pi.
// Throws KappaTooLarge if kappa >= pi, CoincidentEndpoints if the endpoints
// coincide.
SchmidtReport schmidt_bound_check(const PolyPath& path);

}  // namespace steiner
