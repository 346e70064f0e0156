#include "steiner/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace steiner {

Point unit_rotation(double angle) { return std::polar(1.0, angle); }

Point omega() { return unit_rotation(kPi / 3.0); }

Point omega_pow(int exponent) { return unit_rotation(exponent * kPi / 3.0); }

Point rotate(Point p, Point center, double angle) {
  return center + (p - center) * unit_rotation(angle);
}

Point third_equilateral_point(Point a, Point b, Side side) {
  if (std::abs(a - b) <= kCollinearTol * std::max(1.0, std::abs(a) + std::abs(b))) {
    throw CoincidentPoints("third_equilateral_point: a == b");
  }
  double angle = side == Side::left ? kPi / 3.0 : -kPi / 3.0;
  return rotate(b, a, angle);
}

bool collinear(Point a, Point b, Point c) {
  return std::abs(cross(b - a, c - a)) <= kCollinearTol * std::abs(b - a) * std::abs(c - a);
}

Circle circumcircle(Point a, Point b, Point c) {
  if (collinear(a, b, c)) {
    throw CollinearPoints("circumcircle: collinear points");
  }
  // Solve |x - a| = |x - b| = |x - c| via the perpendicular-bisector system,
  // translated so a is the origin for conditioning.
  Point u = b - a;
  Point v = c - a;
  double d = 2.0 * cross(u, v);
  double nu = std::norm(u);
  double nv = std::norm(v);
  Point center = a + Point(v.imag() * nu - u.imag() * nv, u.real() * nv - v.real() * nu) / d;
  double radius = (std::abs(center - a) + std::abs(center - b) + std::abs(center - c)) / 3.0;
  return Circle{center, radius};
}

double reverse_triangle_ratio(Point a, Point b, Point c) {
  double ac = std::abs(c - a);
  if (ac <= kCollinearTol * std::max(1.0, std::abs(a) + std::abs(c))) {
    throw CoincidentPoints("reverse_triangle_ratio: a == c");
  }
  return (std::abs(b - a) + std::abs(c - b)) / ac;
}

double angle_at(Point apex, Point a, Point b) {
  Point u = a - apex;
  Point v = b - apex;
  // atan2 of the relative rotation is robust near 0 and pi.
  return std::abs(std::arg(v * std::conj(u)));
}

double signed_turn(Point a, Point b, Point c) {
  Point u = b - a;
  Point v = c - b;
  return std::arg(v * std::conj(u));
}

PolyPath PolyPath::from_vertices(std::vector<Point> vertices) {
  PolyPath path;
  path.vertices = std::move(vertices);
  if (path.vertices.size() < 2) {
    throw Error("PolyPath: need at least two vertices");
  }
  for (size_t i = 0; i + 2 < path.vertices.size(); ++i) {
    path.turns.push_back(signed_turn(path.vertices[i], path.vertices[i + 1], path.vertices[i + 2]));
  }
  return path;
}

double PolyPath::length() const {
  double total = 0.0;
  for (size_t i = 0; i + 1 < vertices.size(); ++i) {
    total += std::abs(vertices[i + 1] - vertices[i]);
  }
  return total;
}

double path_kappa(const PolyPath& path) {
  // max over windows of |sum| = spread of the prefix sums.
  double prefix = 0.0;
  double lo = 0.0;
  double hi = 0.0;
  for (double turn : path.turns) {
    prefix += turn;
    lo = std::min(lo, prefix);
    hi = std::max(hi, prefix);
  }
  return hi - lo;
}

SchmidtReport schmidt_bound_check(const PolyPath& path) {
  double kappa = path_kappa(path);
  if (kappa >= kPi) {
    throw KappaTooLarge("schmidt_bound_check: kappa >= pi");
  }
  double chord = path.endpoint_distance();
  double total = path.length();
  if (chord <= kCollinearTol * std::max(1.0, total)) {
    throw CoincidentEndpoints("schmidt_bound_check: coincident endpoints");
  }
  SchmidtReport report;
  report.length_ratio = total / chord;
  report.bound = 1.0 / std::cos(kappa / 2.0);
  report.holds = report.length_ratio <= report.bound + 1e-10;
  return report;
}

}  // namespace steiner
