#include <cmath>
#include <vector>

#include "steiner/embedded_tree.hpp"

namespace steiner {

namespace {

void check_circle_args(int k, double eps, double delta) {
  if (k < 1) throw Error("build_circle_construction: k must be >= 1");
  if (k > 20) throw KTooLarge("build_circle_construction: k too large");
  if (!(eps >= kPi / 3.0) || !(eps < 2.0 * kPi / 3.0)) {
    throw EpsOutOfRange("build_circle_construction: eps must lie in [pi/3, 2pi/3)");
  }
  if (!(delta > 0.0)) throw Error("build_circle_construction: delta must be positive");
}

}  // namespace

EmbeddedTree build_circle_construction(int k, double eps, double delta) {
  check_circle_args(k, eps, delta);

  double r = std::sin(kPi / 3.0 - eps / 2.0);
  double beta = std::acos(r);  // tangent points sit at +-beta from the radial angle
  int half = (1 << (k + 1)) - 1;  // nodes per cascade, heap ids 1..half

  // First cascade: p_1 on the unit circle at angle pi/2; the point p_j on
  // circle C_{h(j)} is tracked by its polar angle.
  std::vector<double> polar(half + 1, 0.0);
  std::vector<Point> p(half + 1);
  polar[1] = kPi / 2.0;
  p[1] = std::polar(1.0, polar[1]);
  for (int j = 1; j < (1 << k); ++j) {
    int level = heap_height(2 * j);
    double radius = std::pow(r, level);
    // The tangents from p_j touch the next circle at +-beta; taking the
    // clockwise point first makes the cherry positively oriented.
    polar[2 * j] = polar[j] - beta;
    polar[2 * j + 1] = polar[j] + beta;
    p[2 * j] = std::polar(radius, polar[2 * j]);
    p[2 * j + 1] = std::polar(radius, polar[2 * j + 1]);
  }

  // Double the tree: translate by delta along the tangent at p_1 (the +x
  // direction) and join p_1 to its copy.
  Point shift{delta, 0.0};
  int n_nodes = 2 * half;
  auto copy_id = [half](int i) { return half + i; };

  std::vector<std::pair<int, int>> edges;
  edges.reserve(n_nodes - 1);
  edges.emplace_back(1, copy_id(1));
  for (int j = 1; j < (1 << k); ++j) {
    edges.emplace_back(j, 2 * j);
    edges.emplace_back(j, 2 * j + 1);
    edges.emplace_back(copy_id(j), copy_id(2 * j));
    edges.emplace_back(copy_id(j), copy_id(2 * j + 1));
  }

  std::vector<NodeKind> kinds(n_nodes + 1, NodeKind::steiner);
  for (int i = 1 << k; i <= half; ++i) {
    kinds[i] = NodeKind::terminal;
    kinds[copy_id(i)] = NodeKind::terminal;
  }

  // Node id 0 is unused by the heap labelling; shift everything down by one.
  std::vector<std::pair<int, int>> dense_edges;
  dense_edges.reserve(edges.size());
  for (auto [u, v] : edges) dense_edges.emplace_back(u - 1, v - 1);
  std::vector<NodeKind> dense_kinds(kinds.begin() + 1, kinds.end());

  EmbeddedTree tree;
  tree.topology = FullTopology::from_edges(n_nodes, dense_edges, dense_kinds, (1 << k) - 1);
  tree.position.assign(n_nodes, Point{0.0, 0.0});
  for (int i = 1; i <= half; ++i) {
    tree.position[i - 1] = p[i];
    tree.position[copy_id(i) - 1] = p[i] + shift;
  }
  tree.declared_eps = eps;
  return tree;
}

double circle_tree_length_formula(int k, double eps, double delta) {
  check_circle_args(k, eps, delta);
  double r = std::sin(kPi / 3.0 - eps / 2.0);
  double c = std::cos(kPi / 3.0 - eps / 2.0);
  // 4 c (1 - (2r)^k) / (1 - 2r), summed termwise so the eps = pi/3 case
  // (2r = 1, value 2 sqrt(3) k) needs no separate branch.
  double series = 0.0;
  double power = 1.0;
  for (int i = 0; i < k; ++i) {
    series += power;
    power *= 2.0 * r;
  }
  return delta + 4.0 * c * series;
}

double circle_star_length_formula(int k, double eps, double delta) {
  check_circle_args(k, eps, delta);
  double r = std::sin(kPi / 3.0 - eps / 2.0);
  return delta + 2.0 * std::pow(2.0 * r, k);
}

}  // namespace steiner
