#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "steiner/bounds.hpp"

namespace steiner {

namespace {

Point horner(const std::vector<Point>& coeff, Point z) {
  Point value = 0.0;
  for (auto it = coeff.rbegin(); it != coeff.rend(); ++it) value = value * z + *it;
  return value;
}

std::vector<Point> derivative(const std::vector<Point>& coeff) {
  std::vector<Point> out;
  for (size_t j = 1; j < coeff.size(); ++j) out.push_back(static_cast<double>(j) * coeff[j]);
  return out;
}

// Winding number of the polynomial image of |z - 1| = radius, which equals
// the number of roots (with multiplicity) inside the disk.
int winding_count(const std::vector<Point>& coeff, double radius) {
  constexpr int kSamples = 8192;
  double total = 0.0;
  Point prev = horner(coeff, Point{1.0 + radius, 0.0});
  for (int j = 1; j <= kSamples; ++j) {
    double theta = kTwoPi * j / kSamples;
    Point z = Point{1.0, 0.0} + std::polar(radius, theta);
    Point value = horner(coeff, z);
    total += std::arg(value / prev);
    prev = value;
  }
  return static_cast<int>(std::lround(total / kTwoPi));
}

}  // namespace

RootProbe poly_root_probe(int k, int h, PolyKind kind) {
  auto coeff = poly_coefficients(k, h, kind);
  auto deriv = derivative(coeff);
  double kk = static_cast<double>(k) * k;

  double coeff_scale = 0.0;
  for (Point c : coeff) coeff_scale = std::max(coeff_scale, std::abs(c));

  std::vector<Point> roots;
  auto try_seed = [&](Point seed) {
    Point z = seed;
    for (int iter = 0; iter < 80; ++iter) {
      Point f = horner(coeff, z);
      Point df = horner(deriv, z);
      if (std::abs(df) == 0.0) return;
      Point step = f / df;
      z -= step;
      if (std::abs(step) < 1e-14 * std::max(1.0, std::abs(z))) break;
    }
    if (std::abs(horner(coeff, z)) > 1e-9 * coeff_scale) return;
    for (Point r : roots) {
      if (std::abs(r - z) < 1e-8) return;
    }
    roots.push_back(z);
  };

  auto scan = [&](int seeds_per_ring) {
    for (double ring : {0.5 / kk, 1.0 / kk, 2.0 / kk, 4.0 / kk}) {
      for (int j = 0; j < seeds_per_ring; ++j) {
        try_seed(Point{1.0, 0.0} + std::polar(ring, kTwoPi * j / seeds_per_ring));
      }
    }
  };

  RootProbe probe;
  probe.scan_radius = 8.0 / kk;
  scan(64);
  probe.roots_in_disk = winding_count(coeff, probe.scan_radius);
  auto found_in_disk = [&]() {
    return static_cast<int>(std::count_if(roots.begin(), roots.end(), [&](Point r) {
      return std::abs(r - Point{1.0, 0.0}) <= probe.scan_radius;
    }));
  };
  if (found_in_disk() < probe.roots_in_disk) {
    scan(512);  // denser retry before giving up
  }
  probe.certified = found_in_disk() >= probe.roots_in_disk;
  if (!probe.certified) {
    throw NoRootFound("poly_root_probe: winding count " + std::to_string(probe.roots_in_disk) +
                      " unmatched by located roots within radius " +
                      std::to_string(probe.scan_radius));
  }

  if (roots.empty()) {
    // No roots anywhere near 1; the scan disk itself certifies the distance.
    probe.min_dist_to_1 = probe.scan_radius;
    probe.root = Point{std::numeric_limits<double>::quiet_NaN(), 0.0};
    return probe;
  }
  auto nearest = *std::min_element(roots.begin(), roots.end(), [](Point a, Point b) {
    return std::abs(a - Point{1.0, 0.0}) < std::abs(b - Point{1.0, 0.0});
  });
  probe.root = nearest;
  probe.min_dist_to_1 = std::abs(nearest - Point{1.0, 0.0});
  return probe;
}

}  // namespace steiner
