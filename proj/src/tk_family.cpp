#include <vector>

#include "steiner/embedded_tree.hpp"

namespace steiner {

void TkParams::validate() const {
  if (k < 1) throw Error("TkParams: k must be >= 1");
  if (k > 20) throw KTooLarge("TkParams: k too large");
  if (!(eps >= 0.0) || eps >= kPi / 3.0) {
    throw EpsOutOfRange("TkParams: eps must lie in [0, pi/3)");
  }
}

namespace {

EmbeddedTree make_tk_tree(const TkParams& params, std::vector<Point> positions) {
  EmbeddedTree tree;
  tree.topology = complete_binary_topology(params.k);
  tree.position = std::move(positions);
  tree.declared_eps = params.eps;
  return tree;
}

}  // namespace

EmbeddedTree build_tk_recursive(const TkParams& params) {
  params.validate();
  int n_nodes = 1 << (params.k + 1);
  std::vector<Point> p(n_nodes);
  Point z = params.z();
  Point w = omega();
  p[0] = 0.0;
  p[1] = 1.0;
  for (int i = 1; i < n_nodes / 2; ++i) {
    Point step = 0.5 * (p[i] - p[i / 2]) * z;
    p[2 * i] = p[i] + step / w;
    p[2 * i + 1] = p[i] + step * w;
  }
  return make_tk_tree(params, std::move(p));
}

EmbeddedTree build_tk_closed_form(const TkParams& params) {
  params.validate();
  int n_nodes = 1 << (params.k + 1);
  std::vector<Point> p(n_nodes);
  Point half_z = 0.5 * params.z();
  p[0] = 0.0;
  for (int i = 1; i < n_nodes; ++i) {
    auto a = heap_turn_exponents(i);
    Point sum = 0.0;
    Point power = 1.0;
    for (size_t j = 0; j < a.size(); ++j) {
      sum += omega_pow(a[j]) * power;
      power *= half_z;
    }
    p[i] = sum;
  }
  return make_tk_tree(params, std::move(p));
}

}  // namespace steiner
