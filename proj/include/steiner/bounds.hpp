#pragma once

#include <optional>
#include <string>
#include <vector>

#include "steiner/embedded_tree.hpp"
#include "steiner/geometry.hpp"

namespace steiner {

// All bound functions return the relative-error bound (ratio minus one) and
// throw RangeViolation outside their stated parameter ranges.

// 1/cos((n-2) eps / 2) - 1, for n >= 3 and 0 < eps < pi/(n-2).
double ub_plane_small_eps(int n, double eps);

// 2n - 4, for n >= 3 and eps <= pi/6.
double ub_plane_moderate(int n, double eps);

// A^{n-2} + (A^{n-2} - 1) B / (A - 1) - 1 with
// A = cos(eps/2)/sin(pi/3 - eps/2), B = 1/sin(pi/3 - eps/2);
// for n >= 2 and 0 < eps < 2pi/3.  Bounds L(T)/D - 1.
double ub_exponential(int n, double eps);

// (k+1) sin(eps/2) / sin((k+1) eps/2) - 1, for k >= 1 and 0 < eps < 1/k^2.
// The value always dominates (k^2 + 2k) eps^2 / 24.
double lb_small_eps(int k, double eps);

// sqrt(4C^2-1)/(C-1) (C^k - 1) - 1 with C = 1/(2 sin(pi/3 - eps/2)) for
// pi/3 < eps < 2pi/3, and the limit sqrt(3) k - 1 at eps = pi/3.
double lb_large_eps(int k, double eps);

// Exact worst-case values for three and four terminals, 0 < eps < pi/3.
double exact_n3(double eps);  // sec(eps/2) - 1
double exact_n4(double eps);  // sec(eps) - 1

// The edge-collapse polynomials of the binary family:
// p_{k,h}(z) = z^h + (1 + ... + z^{k-h-1})(z^{h+1} - 1)/2
//            - w (1 + ... + z^{k-h})(z^h - 1)
// and q_{k,h} with w^{-1} in place of w.  1 <= h <= k.
Point poly_p(int k, int h, Point z);
Point poly_q(int k, int h, Point z);

enum class PolyKind { p, q };

// Dense coefficient list (degree k), constant term first.
std::vector<Point> poly_coefficients(int k, int h, PolyKind kind);

struct RootProbe {
  double min_dist_to_1 = 0.0;  // distance from 1 of the nearest located root
  Point root;                  // that root
  double scan_radius = 0.0;    // argument-principle disk radius around 1
  int roots_in_disk = 0;       // winding count on the disk
  bool certified = false;      // every root inside the disk was located
};

// Locates the root nearest to 1 by Newton iterations seeded on rings around
// 1, and counts roots inside |z - 1| <= 8/k^2 by the argument principle so a
// missed nearby root cannot go unnoticed.  Throws NoRootFound if the winding
// count cannot be matched by located roots.
RootProbe poly_root_probe(int k, int h, PolyKind kind);

struct RatioReport {
  std::string instance_id;
  double L_T = 0.0;
  double L_S = 0.0;
  double ratio_minus_1 = 0.0;
  double eps = 0.0;                   // measured angle error of the instance
  int n = 0;                          // number of terminals
  std::optional<double> upper_bound;  // tightest applicable Table-1 upper bound
  std::optional<double> lower_bound;  // construction-specific lower bound, if any
  bool holds = false;
};

// Families whose instances come with a matching lower-bound formula.
struct ConstructionTag {
  enum class Family { none, tk, circle } family = Family::none;
  int k = 0;
  double eps = 0.0;
};

// Compares a tree's measured ratio against every applicable bound.  L_S is
// taken from melzak::solve when non-degenerate, otherwise from the numeric
// oracle.  A bound violation makes holds false; callers treat that as a
// failure, never as something to skip.
RatioReport ratio_report(const EmbeddedTree& tree, const std::string& instance_id = "",
                         const ConstructionTag& tag = {});

}  // namespace steiner
