#include "steiner/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "steiner/melzak.hpp"

namespace steiner {

double ub_plane_small_eps(int n, double eps) {
  if (n < 3) throw RangeViolation("ub_plane_small_eps: n must be >= 3");
  if (!(eps > 0.0) || !(eps < kPi / (n - 2))) {
    throw RangeViolation("ub_plane_small_eps: need 0 < eps < pi/(n-2)");
  }
  return 1.0 / std::cos((n - 2) * eps / 2.0) - 1.0;
}

double ub_plane_moderate(int n, double eps) {
  if (n < 3) throw RangeViolation("ub_plane_moderate: n must be >= 3");
  if (!(eps >= 0.0) || eps > kPi / 6.0) {
    throw RangeViolation("ub_plane_moderate: need 0 <= eps <= pi/6");
  }
  return 2.0 * n - 4.0;
}

double ub_exponential(int n, double eps) {
  if (n < 2) throw RangeViolation("ub_exponential: n must be >= 2");
  if (!(eps > 0.0) || !(eps < 2.0 * kPi / 3.0)) {
    throw RangeViolation("ub_exponential: need 0 < eps < 2pi/3");
  }
  double a = std::cos(eps / 2.0) / std::sin(kPi / 3.0 - eps / 2.0);
  double b = 1.0 / std::sin(kPi / 3.0 - eps / 2.0);
  double a_pow = std::pow(a, n - 2);
  return a_pow + (a_pow - 1.0) * b / (a - 1.0) - 1.0;
}

double lb_small_eps(int k, double eps) {
  if (k < 1) throw RangeViolation("lb_small_eps: k must be >= 1");
  if (!(eps > 0.0) || !(eps < 1.0 / (static_cast<double>(k) * k))) {
    throw RangeViolation("lb_small_eps: need 0 < eps < 1/k^2");
  }
  double value = (k + 1) * std::sin(eps / 2.0) / std::sin((k + 1) * eps / 2.0) - 1.0;
  double quadratic = (static_cast<double>(k) * k + 2.0 * k) / 24.0 * eps * eps;
  if (value < quadratic - 1e-12) {
    throw Error("lb_small_eps: quadratic lower estimate violated");
  }
  return value;
}

double lb_large_eps(int k, double eps) {
  if (k < 1) throw RangeViolation("lb_large_eps: k must be >= 1");
  if (!(eps >= kPi / 3.0) || !(eps < 2.0 * kPi / 3.0)) {
    throw RangeViolation("lb_large_eps: need pi/3 <= eps < 2pi/3");
  }
  double c = 1.0 / (2.0 * std::sin(kPi / 3.0 - eps / 2.0));
  if (std::abs(c - 1.0) < 1e-12) {
    return std::sqrt(3.0) * k - 1.0;
  }
  return std::sqrt(4.0 * c * c - 1.0) / (c - 1.0) * (std::pow(c, k) - 1.0) - 1.0;
}

double exact_n3(double eps) {
  if (!(eps > 0.0) || !(eps < kPi / 3.0)) {
    throw RangeViolation("exact_n3: need 0 < eps < pi/3");
  }
  return 1.0 / std::cos(eps / 2.0) - 1.0;
}

double exact_n4(double eps) {
  if (!(eps > 0.0) || !(eps < kPi / 3.0)) {
    throw RangeViolation("exact_n4: need 0 < eps < pi/3");
  }
  return 1.0 / std::cos(eps) - 1.0;
}

namespace {

// 1 + z + ... + z^{m-1}
Point geometric_sum(Point z, int m) {
  Point sum = 0.0;
  Point power = 1.0;
  for (int j = 0; j < m; ++j) {
    sum += power;
    power *= z;
  }
  return sum;
}

void check_poly_args(int k, int h) {
  if (k < 1 || h < 1 || h > k) {
    throw RangeViolation("polynomials p/q need 1 <= h <= k");
  }
}

Point poly_eval(int k, int h, Point z, Point w) {
  Point zh = std::pow(z, h);
  return zh + 0.5 * geometric_sum(z, k - h) * (zh * z - 1.0) -
         w * geometric_sum(z, k - h + 1) * (zh - 1.0);
}

}  // namespace

Point poly_p(int k, int h, Point z) {
  check_poly_args(k, h);
  return poly_eval(k, h, z, omega());
}

Point poly_q(int k, int h, Point z) {
  check_poly_args(k, h);
  return poly_eval(k, h, z, std::conj(omega()));
}

std::vector<Point> poly_coefficients(int k, int h, PolyKind kind) {
  check_poly_args(k, h);
  Point w = kind == PolyKind::p ? omega() : std::conj(omega());
  std::vector<Point> coeff(k + 1, Point{0.0, 0.0});
  // z^h
  coeff[h] += 1.0;
  // (1 + ... + z^{k-h-1})(z^{h+1} - 1)/2
  for (int j = 0; j <= k - h - 1; ++j) {
    coeff[j + h + 1] += 0.5;
    coeff[j] -= 0.5;
  }
  // -w (1 + ... + z^{k-h})(z^h - 1)
  for (int j = 0; j <= k - h; ++j) {
    coeff[j + h] -= w;
    coeff[j] += w;
  }
  return coeff;
}

RatioReport ratio_report(const EmbeddedTree& tree, const std::string& instance_id,
                         const ConstructionTag& tag) {
  RatioReport report;
  report.instance_id = instance_id;
  report.n = tree.topology.n_terminals();
  report.L_T = tree.length();
  report.eps = measure_eps(tree);

  auto solved = solve(tree);
  if (solved.status == SolveStatus::NonDegenerate) {
    report.L_S = solved.length;
  } else {
    report.L_S = numeric_oracle(tree.topology, tree.position, 100000, 1e-10, &tree.position).length;
  }
  report.ratio_minus_1 = report.L_T / report.L_S - 1.0;

  double eps = report.eps;
  int n = report.n;
  std::optional<double> ub;
  auto consider = [&ub](double candidate) {
    if (!ub || candidate < *ub) ub = candidate;
  };
  if (eps > 0.0 && eps < kPi / (n - 2)) consider(ub_plane_small_eps(n, eps));
  if (eps <= kPi / 6.0) consider(ub_plane_moderate(n, eps));
  if (eps > 0.0 && eps < 2.0 * kPi / 3.0) consider(ub_exponential(n, eps));
  report.upper_bound = ub;

  switch (tag.family) {
    case ConstructionTag::Family::tk:
      if (tag.eps > 0.0 && tag.eps < 1.0 / (static_cast<double>(tag.k) * tag.k)) {
        report.lower_bound = lb_small_eps(tag.k, tag.eps);
      }
      break;
    case ConstructionTag::Family::circle:
      report.lower_bound = lb_large_eps(tag.k, tag.eps);
      break;
    case ConstructionTag::Family::none:
      break;
  }

  report.holds = true;
  if (report.upper_bound && report.ratio_minus_1 > *report.upper_bound + 1e-9) {
    report.holds = false;
  }
  if (report.lower_bound && report.ratio_minus_1 < *report.lower_bound - 1e-8) {
    report.holds = false;
  }
  if (report.L_S > report.L_T + 1e-9 * std::max(1.0, report.L_T)) {
    report.holds = false;
  }
  return report;
}

}  // namespace steiner
