#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "steiner/geometry.hpp"
#include "steiner/instance_gen.hpp"

using namespace steiner;
using doctest::Approx;

namespace {

Point random_point(std::mt19937_64& rng, double span = 10.0) {
  return {uniform(rng, -span, span), uniform(rng, -span, span)};
}

}  // namespace

TEST_CASE("rotate basics") {
  Point r = rotate({1.0, 0.0}, {0.0, 0.0}, kPi / 3.0);
  CHECK(std::abs(r - Point{std::cos(kPi / 3.0), std::sin(kPi / 3.0)}) < 1e-15);

  Point p{2.5, -1.25};
  CHECK(std::abs(rotate(p, p, 1.234) - p) < 1e-15);

  CHECK(std::abs(rotate({2.0, 0.0}, {1.0, 0.0}, kPi) - Point{0.0, 0.0}) < 1e-15);
}

TEST_CASE("rotate preserves distances") {
  std::mt19937_64 rng(101);
  for (int i = 0; i < 2000; ++i) {
    Point p = random_point(rng), q = random_point(rng), c = random_point(rng);
    double angle = uniform(rng, -kTwoPi, kTwoPi);
    double before = std::abs(p - q);
    double after = std::abs(rotate(p, c, angle) - rotate(q, c, angle));
    CHECK(std::abs(after - before) <= 1e-12 * std::max(1.0, before));
    CHECK(std::abs(std::abs(rotate(p, c, angle) - c) - std::abs(p - c)) <=
          1e-12 * std::max(1.0, std::abs(p - c)));
  }
}

TEST_CASE("third equilateral point") {
  Point left = third_equilateral_point({0.0, 0.0}, {1.0, 0.0}, Side::left);
  CHECK(std::abs(left - Point{0.5, std::sqrt(3.0) / 2.0}) < 1e-15);

  Point right = third_equilateral_point({0.0, 0.0}, {1.0, 0.0}, Side::right);
  CHECK(std::abs(right - Point{0.5, -std::sqrt(3.0) / 2.0}) < 1e-15);

  // |ta| = |tb| = |ab| = 2 solved by hand: t = (-sqrt(3), 1).
  Point t = third_equilateral_point({0.0, 0.0}, {0.0, 2.0}, Side::left);
  CHECK(std::abs(t - Point{-std::sqrt(3.0), 1.0}) < 1e-14);

  CHECK_THROWS_AS(third_equilateral_point({1.0, 1.0}, {1.0, 1.0}, Side::left), CoincidentPoints);
}

TEST_CASE("left and right equilateral points are reflections across ab") {
  std::mt19937_64 rng(102);
  for (int i = 0; i < 2000; ++i) {
    Point a = random_point(rng), b = random_point(rng);
    if (std::abs(a - b) < 1e-6) continue;
    Point l = third_equilateral_point(a, b, Side::left);
    Point r = third_equilateral_point(a, b, Side::right);
    Point mid = 0.5 * (l + r);
    // The midpoint lies on line ab.
    CHECK(std::abs(cross(b - a, mid - a)) <= 1e-10 * std::abs(b - a) * std::max(1.0, std::abs(mid - a)));
    CHECK(std::abs(std::abs(l - a) - std::abs(b - a)) < 1e-10);
    CHECK(std::abs(std::abs(r - b) - std::abs(b - a)) < 1e-10);
  }
}

TEST_CASE("circumcircle") {
  // Equilateral with side 1: center (1/2, sqrt(3)/6), radius 1/sqrt(3).
  Circle c = circumcircle({0.0, 0.0}, {1.0, 0.0}, {0.5, std::sqrt(3.0) / 2.0});
  CHECK(std::abs(c.center - Point{0.5, std::sqrt(3.0) / 6.0}) < 1e-14);
  CHECK(c.radius == Approx(1.0 / std::sqrt(3.0)).epsilon(1e-12));

  // Right angle: hypotenuse midpoint.
  Circle h = circumcircle({0.0, 0.0}, {2.0, 0.0}, {0.0, 2.0});
  CHECK(std::abs(h.center - Point{1.0, 1.0}) < 1e-13);
  CHECK(h.radius == Approx(std::sqrt(2.0)).epsilon(1e-12));

  CHECK_THROWS_AS(circumcircle({0.0, 0.0}, {1.0, 0.0}, {2.0, 1e-15}), CollinearPoints);
}

TEST_CASE("circumcircle is equidistant on random triangles") {
  std::mt19937_64 rng(103);
  for (int i = 0; i < 2000; ++i) {
    Point a = random_point(rng), b = random_point(rng), c = random_point(rng);
    if (collinear(a, b, c)) continue;
    Circle circle = circumcircle(a, b, c);
    for (Point p : {a, b, c}) {
      CHECK(std::abs(std::abs(p - circle.center) - circle.radius) <= 1e-10 * circle.radius);
    }
  }
}

TEST_CASE("reverse triangle ratio") {
  CHECK(reverse_triangle_ratio({0.0, 0.0}, {1.0, 0.0}, {2.0, 0.0}) == Approx(1.0));
  // Exterior angle pi/2 at b: equality case of the bound.
  CHECK(reverse_triangle_ratio({0.0, 0.0}, {1.0, 1.0}, {2.0, 0.0}) ==
        Approx(std::sqrt(2.0)).epsilon(1e-14));
  CHECK_THROWS_AS(reverse_triangle_ratio({0.0, 0.0}, {1.0, 0.0}, {0.0, 0.0}), CoincidentPoints);
}

TEST_CASE("reverse triangle inequality holds on random triangles") {
  std::mt19937_64 rng(104);
  for (int i = 0; i < 10000; ++i) {
    Point a = random_point(rng), b = random_point(rng), c = random_point(rng);
    if (std::abs(a - c) < 1e-6 || std::abs(a - b) < 1e-9 || std::abs(b - c) < 1e-9) continue;
    double ratio = reverse_triangle_ratio(a, b, c);
    double exterior = kPi - angle_at(b, a, c);
    if (exterior >= kPi - 1e-9) continue;  // bound degenerates
    CHECK(ratio <= 1.0 / std::cos(exterior / 2.0) + 1e-12);
  }
}

TEST_CASE("equilateral distance inequality with equality on the minor arc") {
  // |xa| <= |xb| + |xc| for equilateral abc; equality exactly on arc bc.
  Point a{0.0, 0.0}, b{1.0, 0.0};
  Point c = third_equilateral_point(a, b, Side::left);
  Circle circle = circumcircle(a, b, c);
  std::mt19937_64 rng(105);
  for (int i = 0; i < 10000; ++i) {
    Point x = random_point(rng, 3.0);
    double slack = std::abs(x - b) + std::abs(x - c) - std::abs(x - a);
    CHECK(slack >= -1e-10);
    if (slack < 1e-6) {
      CHECK(std::abs(std::abs(x - circle.center) - circle.radius) < 2e-6);
      CHECK(std::abs(angle_at(x, b, c) - kSteinerAngle) < 2e-3);
    }
  }
  // Points sampled on the minor arc bc (the far side from a) give equality.
  for (int i = 0; i < 100; ++i) {
    double base = std::arg(0.5 * (b + c) - circle.center);
    double theta = base + uniform(rng, -kPi / 6.0, kPi / 6.0);
    Point x = circle.center + std::polar(circle.radius, theta);
    CHECK(std::abs(x - b) + std::abs(x - c) - std::abs(x - a) < 1e-9);
  }
}

TEST_CASE("path kappa") {
  PolyPath two = PolyPath::from_vertices({{0.0, 0.0}, {1.0, 0.0}});
  CHECK(path_kappa(two) == 0.0);

  PolyPath path;
  path.vertices = {{0, 0}, {1, 0}, {2, 0}, {3, 0}, {4, 0}};
  path.turns = {0.1, 0.2, -0.05};
  // Window enumeration by hand: the prefix maximum 0.3 dominates.
  CHECK(path_kappa(path) == Approx(0.3));

  path.turns = {0.3, -0.3};
  CHECK(path_kappa(path) == Approx(0.3));
}

TEST_CASE("kappa equals brute-force window maximum") {
  std::mt19937_64 rng(106);
  for (int trial = 0; trial < 500; ++trial) {
    PolyPath path;
    int m = 2 + static_cast<int>(uniform01(rng) * 8);
    path.vertices.assign(m + 1, Point{0.0, 0.0});  // vertices unused here
    int turns = m - 1;
    for (int i = 0; i < turns; ++i) path.turns.push_back(uniform(rng, -1.0, 1.0));
    double brute = 0.0;
    double total_abs = 0.0;
    for (size_t i = 0; i < path.turns.size(); ++i) {
      total_abs += std::abs(path.turns[i]);
      double sum = 0.0;
      for (size_t j = i; j < path.turns.size(); ++j) {
        sum += path.turns[j];
        brute = std::max(brute, std::abs(sum));
      }
    }
    CHECK(path_kappa(path) == Approx(brute).epsilon(1e-12));
    CHECK(path_kappa(path) >= 0.0);
    CHECK(path_kappa(path) <= total_abs + 1e-15);
  }
}

TEST_CASE("turns recomputed from vertices match stored turns") {
  std::mt19937_64 rng(107);
  for (int trial = 0; trial < 200; ++trial) {
    // Build a path from random turns, then recover them.
    int m = 3 + static_cast<int>(uniform01(rng) * 6);
    std::vector<double> turns;
    std::vector<Point> vertices{{0.0, 0.0}};
    Point dir{1.0, 0.0};
    vertices.push_back(vertices.back() + dir);
    for (int i = 0; i < m; ++i) {
      double t = uniform(rng, -2.5, 2.5);
      turns.push_back(t);
      dir *= unit_rotation(t);
      vertices.push_back(vertices.back() + dir * uniform(rng, 0.1, 2.0));
    }
    PolyPath path = PolyPath::from_vertices(vertices);
    REQUIRE(path.turns.size() == turns.size());
    for (size_t i = 0; i < turns.size(); ++i) {
      CHECK(path.turns[i] == Approx(turns[i]).epsilon(1e-10));
    }
  }
}

TEST_CASE("schmidt bound check") {
  PolyPath straight = PolyPath::from_vertices({{0.0, 0.0}, {1.0, 0.0}, {2.0, 0.0}});
  auto report = schmidt_bound_check(straight);
  CHECK(report.length_ratio == Approx(1.0));
  CHECK(report.bound == Approx(1.0));
  CHECK(report.holds);

  // Two segments with turn theta: ratio <= 1/cos(theta/2), tight as the legs
  // balance.
  double theta = 0.8;
  PolyPath bent = PolyPath::from_vertices(
      {{0.0, 0.0}, {1.0, 0.0}, Point{1.0, 0.0} + unit_rotation(theta)});
  auto bent_report = schmidt_bound_check(bent);
  CHECK(bent_report.length_ratio == Approx(1.0 / std::cos(theta / 2.0)).epsilon(1e-12));
  CHECK(bent_report.holds);

  // Two left turns of 1.8 each: kappa = 3.6 >= pi.
  PolyPath sharp = PolyPath::from_vertices({{0.0, 0.0},
                                            {1.0, 0.0},
                                            Point{1.0, 0.0} + unit_rotation(1.8),
                                            Point{1.0, 0.0} + unit_rotation(1.8) +
                                                unit_rotation(3.6)});
  CHECK(path_kappa(sharp) >= kPi);
  CHECK_THROWS_AS(schmidt_bound_check(sharp), KappaTooLarge);

  PolyPath loop = PolyPath::from_vertices(
      {{0.0, 0.0}, {1.0, 0.0}, Point{1.0, 0.0} + unit_rotation(2.0), {0.0, 0.0}});
  if (path_kappa(loop) < kPi) {
    CHECK_THROWS_AS(schmidt_bound_check(loop), CoincidentEndpoints);
  }
}

TEST_CASE("schmidt inequality on random low-curvature paths") {
  std::mt19937_64 rng(108);
  int checked = 0;
  while (checked < 10000) {
    int m = 1 + static_cast<int>(uniform01(rng) * 8);
    std::vector<Point> vertices{{0.0, 0.0}, {1.0, 0.0}};
    Point dir{1.0, 0.0};
    for (int i = 0; i < m; ++i) {
      dir *= unit_rotation(uniform(rng, -0.35, 0.35));
      vertices.push_back(vertices.back() + dir * uniform(rng, 0.05, 2.0));
    }
    PolyPath path = PolyPath::from_vertices(std::move(vertices));
    if (path_kappa(path) >= kPi) continue;
    auto report = schmidt_bound_check(path);
    CHECK(report.holds);
    ++checked;
  }
}
