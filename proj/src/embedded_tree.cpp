#include "steiner/embedded_tree.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace steiner {

double EmbeddedTree::length() const {
  double total = 0.0;
  for (auto [u, v] : topology.edges()) {
    total += edge_length(u, v);
  }
  return total;
}

std::array<double, 3> EmbeddedTree::steiner_angles(int steiner) const {
  const auto& nbrs = topology.neighbors(steiner);
  std::array<Point, 3> rays;
  for (int j = 0; j < 3; ++j) {
    rays[j] = position[nbrs[j]] - position[steiner];
    if (std::abs(rays[j]) < 1e-12) {
      throw DegenerateEdge("steiner_angles: zero-length edge at node " + std::to_string(steiner));
    }
  }
  Point apex = position[steiner];
  return {angle_at(apex, position[nbrs[0]], position[nbrs[1]]),
          angle_at(apex, position[nbrs[0]], position[nbrs[2]]),
          angle_at(apex, position[nbrs[1]], position[nbrs[2]])};
}

bool EmbeddedTree::non_reflex_at(int steiner) const {
  auto angles = steiner_angles(steiner);
  double sum = angles[0] + angles[1] + angles[2];
  return std::abs(sum - kTwoPi) <= 1e-9;
}

void EmbeddedTree::validate() const {
  topology.validate();
  if (static_cast<int>(position.size()) != topology.node_count()) {
    throw Error("EmbeddedTree: position count mismatch");
  }
  for (Point p : position) {
    if (!is_finite(p)) throw Error("EmbeddedTree: non-finite coordinate");
  }
}

double measure_eps(const EmbeddedTree& tree) {
  double worst = 0.0;
  for (int s = 0; s < tree.topology.node_count(); ++s) {
    if (tree.topology.is_terminal(s)) continue;
    for (double angle : tree.steiner_angles(s)) {
      worst = std::max(worst, std::abs(angle - kSteinerAngle));
    }
  }
  return worst;
}

double AngleErrors::max_abs() const {
  return std::max({std::abs(first), std::abs(second), std::abs(between_children)});
}

EmbeddedTree build_from_angle_errors(const FullTopology& topology, Point root_edge_dir,
                                     const std::map<int, double>& edge_lengths,
                                     const std::map<int, AngleErrors>& errors) {
  topology.validate();
  if (std::abs(root_edge_dir) < 1e-12) {
    throw Error("build_from_angle_errors: zero root edge direction");
  }
  auto rooted = root_topology(topology);

  auto length_of = [&](int child) {
    auto it = edge_lengths.find(child);
    if (it == edge_lengths.end() || !(it->second > 0.0)) {
      throw Error("build_from_angle_errors: missing or nonpositive length for edge to node " +
                  std::to_string(child));
    }
    return it->second;
  };

  EmbeddedTree tree;
  tree.topology = topology;
  tree.position.assign(topology.node_count(), Point{0.0, 0.0});

  int root = topology.root_terminal();
  Point dir0 = root_edge_dir / std::abs(root_edge_dir);
  tree.position[root] = 0.0;
  tree.position[rooted.top] = dir0 * length_of(rooted.top);

  double eps_actual = 0.0;
  // (node, incoming unit direction); children placed from their parent.
  std::vector<std::pair<int, Point>> stack{{rooted.top, dir0}};
  while (!stack.empty()) {
    auto [node, incoming] = stack.back();
    stack.pop_back();
    if (topology.is_terminal(node)) continue;

    auto it = errors.find(node);
    AngleErrors err = it == errors.end() ? AngleErrors{} : it->second;
    double sum = err.first + err.second + err.between_children;
    if (std::abs(sum) > 1e-12) {
      throw InvalidAngleTriple("angle errors at node " + std::to_string(node) +
                               " do not sum to zero");
    }
    for (double e : {err.first, err.second, err.between_children}) {
      double angle = kSteinerAngle + e;
      if (!(angle > 0.0) || !(angle < kPi)) {
        throw InvalidAngleTriple("angle out of (0, pi) at node " + std::to_string(node));
      }
    }
    eps_actual = std::max(eps_actual, err.max_abs());

    // Counterclockwise from the ray back to the parent: first child after
    // 2pi/3 + first, second child another 2pi/3 + between_children later.
    Point back = -incoming;
    auto [c1, c2] = rooted.children[node];
    Point dir1 = back * unit_rotation(kSteinerAngle + err.first);
    Point dir2 = dir1 * unit_rotation(kSteinerAngle + err.between_children);
    tree.position[c1] = tree.position[node] + dir1 * length_of(c1);
    tree.position[c2] = tree.position[node] + dir2 * length_of(c2);
    stack.push_back({c1, dir1});
    stack.push_back({c2, dir2});
  }

  tree.declared_eps = eps_actual;
  return tree;
}

EmbeddedTree build_witness3(double eps, double delta) {
  if (!(eps >= 0.0) || eps >= kPi / 3.0) {
    throw EpsOutOfRange("build_witness3: eps must lie in [0, pi/3)");
  }
  if (!(delta > 0.0)) throw Error("build_witness3: delta must be positive");
  // Terminals 0 (root), 2, 3 around Steiner point 1; angles
  // (t0, t1) = (t0, t2) = 2pi/3 + eps/2 and (t1, t2) = 2pi/3 - eps.  The
  // narrow cherry keeps every angle of the terminal triangle below 2pi/3, so
  // the shortest same-topology tree is non-degenerate with length
  // delta + 2 cos(eps/2).
  FullTopology topo = complete_binary_topology(1);
  std::map<int, double> lengths{{1, delta}, {2, 1.0}, {3, 1.0}};
  std::map<int, AngleErrors> errors{{1, {eps / 2.0, eps / 2.0, -eps}}};
  auto tree = build_from_angle_errors(topo, Point{1.0, 0.0}, lengths, errors);
  tree.declared_eps = eps;
  return tree;
}

EmbeddedTree build_witness4(double eps, double delta) {
  if (!(eps >= 0.0) || eps >= kPi / 3.0) {
    throw EpsOutOfRange("build_witness4: eps must lie in [0, pi/3)");
  }
  if (!(delta > 0.0)) throw Error("build_witness4: delta must be positive");
  // Nodes: 0..3 terminals t1..t4, 4 and 5 the Steiner points s1, s2.
  // Edges: t1-s1, t2-s1, s1-s2, s2-t4, s2-t3.  Rooted at t1; at s2 the edge
  // to t4 comes first counterclockwise from the middle edge.
  std::vector<std::pair<int, int>> edges{{0, 4}, {1, 4}, {4, 5}, {3, 5}, {2, 5}};
  std::vector<NodeKind> kinds{NodeKind::terminal, NodeKind::terminal, NodeKind::terminal,
                              NodeKind::terminal, NodeKind::steiner, NodeKind::steiner};
  FullTopology topo = FullTopology::from_edges(6, edges, kinds, 0);
  // At s1, seen from the incoming edge e1 = t1 s1, the counterclockwise
  // sectors are (e1 -> e2) = 2pi/3 + eps1, (e2 -> e0) = 2pi/3 - eps1 - eps2,
  // (e0 -> e1) = 2pi/3 + eps2 with eps1 = 0, eps2 = eps: children stored in
  // adjacency order (t2 first, then s2).
  // At s2, entered via e0, the sectors toward t4 and t3 carry eps3 = -eps,
  // eps4 = 0: (e0 -> e4) = 2pi/3 + eps3, (e4 -> e3) = 2pi/3 + eps4.
  std::map<int, double> lengths{{4, 1.0}, {1, 1.0}, {5, delta}, {2, 1.0}, {3, 1.0}};
  std::map<int, AngleErrors> errors{{4, {0.0, eps, -eps}}, {5, {-eps, eps, 0.0}}};
  auto tree = build_from_angle_errors(topo, Point{1.0, 0.0}, lengths, errors);
  tree.declared_eps = eps;
  return tree;
}

EmbeddedTree split_terminal(const EmbeddedTree& tree, int terminal, double delta) {
  if (terminal < 0 || terminal >= tree.topology.node_count() ||
      !tree.topology.is_terminal(terminal)) {
    throw NotATerminal("split_terminal: node " + std::to_string(terminal) + " is not a terminal");
  }
  if (!(delta > 0.0)) throw Error("split_terminal: delta must be positive");

  int s = tree.topology.neighbors(terminal).front();
  Point t = tree.position[terminal];
  Point u = t - tree.position[s];
  double len = std::abs(u);
  if (len < 1e-12) throw DegenerateEdge("split_terminal: terminal coincides with its neighbor");
  u /= len;

  int n = tree.topology.node_count();
  auto edges = tree.topology.edges();
  edges.emplace_back(terminal, n);
  edges.emplace_back(terminal, n + 1);
  std::vector<NodeKind> kinds;
  kinds.reserve(n + 2);
  for (int i = 0; i < n; ++i) kinds.push_back(tree.topology.kind(i));
  kinds[terminal] = NodeKind::steiner;
  kinds.push_back(NodeKind::terminal);
  kinds.push_back(NodeKind::terminal);

  int root = tree.topology.root_terminal();
  if (root == terminal) root = n;  // the left offspring inherits the root role

  EmbeddedTree out;
  out.topology = FullTopology::from_edges(n + 2, edges, kinds, root);
  out.position = tree.position;
  // Equal 2pi/3 angles at t: the new rays are u rotated by +-pi/3, the first
  // one on the left of s -> t.
  out.position.push_back(t + delta * u * unit_rotation(kPi / 3.0));
  out.position.push_back(t + delta * u * unit_rotation(-kPi / 3.0));
  out.declared_eps = tree.declared_eps;
  return out;
}

}  // namespace steiner
