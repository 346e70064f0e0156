#include "steiner/instance_gen.hpp"

#include <cmath>
#include <map>
#include <utility>
#include <vector>

namespace steiner {

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform01(rng);
}

FullTopology random_full_topology(int n, std::mt19937_64& rng) {
  if (n < 3) throw Error("random_full_topology: need n >= 3");
  // Merge terminals 1..n-1 pairwise under new Steiner points; the last
  // cluster's top joins terminal 0.
  std::vector<int> tops;
  for (int t = 1; t < n; ++t) tops.push_back(t);
  std::vector<std::pair<int, int>> edges;
  int next_id = n;
  while (tops.size() > 1) {
    size_t i = static_cast<size_t>(uniform01(rng) * tops.size());
    i = std::min(i, tops.size() - 1);
    int a = tops[i];
    tops[i] = tops.back();
    tops.pop_back();
    size_t j = static_cast<size_t>(uniform01(rng) * tops.size());
    j = std::min(j, tops.size() - 1);
    int b = tops[j];
    int s = next_id++;
    edges.emplace_back(s, a);
    edges.emplace_back(s, b);
    tops[j] = s;
  }
  edges.emplace_back(0, tops.front());

  int node_count = next_id;
  std::vector<NodeKind> kinds(node_count, NodeKind::steiner);
  for (int t = 0; t < n; ++t) kinds[t] = NodeKind::terminal;
  return FullTopology::from_edges(node_count, edges, kinds, 0);
}

EmbeddedTree random_approx_tree(int n, double eps, std::mt19937_64& rng) {
  FullTopology topo = random_full_topology(n, rng);
  std::map<int, double> lengths;
  for (int node = 0; node < topo.node_count(); ++node) {
    if (node == topo.root_terminal()) continue;
    lengths[node] = std::exp(uniform(rng, std::log(0.1), 0.0));
  }
  // The recursive builder keys lengths by child node; every non-root node is
  // the child of exactly one edge.
  std::map<int, AngleErrors> errors;
  for (int node = 0; node < topo.node_count(); ++node) {
    if (topo.is_terminal(node)) continue;
    AngleErrors e;
    e.first = uniform(rng, -eps / 2.0, eps / 2.0);
    e.between_children = uniform(rng, -eps / 2.0, eps / 2.0);
    e.second = -e.first - e.between_children;
    errors[node] = e;
  }
  auto tree = build_from_angle_errors(topo, Point{1.0, 0.0}, lengths, errors);
  return tree;
}

}  // namespace steiner
