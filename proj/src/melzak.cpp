#include "steiner/melzak.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace steiner {

namespace {

constexpr double kBoundaryTol = 1e-10;  // boundary cases count as degenerate

// Counterclockwise angle in (0, 2pi] from ray `from` to ray `to`.
double ccw_angle(Point from, Point to) {
  double a = std::arg(to * std::conj(from));
  if (a <= 0.0) a += kTwoPi;
  return a;
}

}  // namespace

MelzakState forward_pass(const FullTopology& topology, const std::vector<Point>& terminals,
                         const std::vector<Point>* steiner_hint) {
  topology.validate();
  if (static_cast<int>(terminals.size()) != topology.node_count()) {
    throw Error("forward_pass: positions must be indexed by node id");
  }

  MelzakState state;
  state.topology = &topology;
  state.rooted = root_topology(topology);
  state.terminal_position = terminals;
  state.quasi_terminal.assign(topology.node_count(),
                              Point{std::numeric_limits<double>::quiet_NaN(), 0.0});
  state.circle.assign(topology.node_count(), Circle{});

  // Subtree terminal centroids for the hint-free side rule.
  std::vector<Point> centroid_sum(topology.node_count(), Point{0.0, 0.0});
  std::vector<int> centroid_count(topology.node_count(), 0);

  for (int node : state.rooted.postorder) {
    if (topology.is_terminal(node)) {
      state.quasi_terminal[node] = terminals[node];
      centroid_sum[node] = terminals[node];
      centroid_count[node] = 1;
      continue;
    }
    auto [c1, c2] = state.rooted.children[node];
    centroid_sum[node] = centroid_sum[c1] + centroid_sum[c2];
    centroid_count[node] = centroid_count[c1] + centroid_count[c2];

    Point qa = state.quasi_terminal[c1];
    Point qb = state.quasi_terminal[c2];
    double scale = std::max({1.0, std::abs(qa), std::abs(qb)});
    if (std::abs(qa - qb) <= 1e-12 * scale) {
      throw CoincidentQuasiTerminals("forward_pass: coincident quasi-terminals below node " +
                                     std::to_string(node));
    }

    Point reference;
    if (steiner_hint != nullptr) {
      reference = (*steiner_hint)[node];
    } else {
      reference = centroid_sum[node] / static_cast<double>(centroid_count[node]);
      state.used_centroid_fallback = true;
    }
    // q on the opposite side of the line qa qb from the reference point.
    double side = cross(qb - qa, reference - qa);
    Point q = third_equilateral_point(qa, qb, side > 0.0 ? Side::right : Side::left);
    state.quasi_terminal[node] = q;
    state.circle[node] = circumcircle(q, qa, qb);
    state.processing_order.push_back(node);
  }
  return state;
}

SolveResult backward_pass(const MelzakState& state) {
  const FullTopology& topology = *state.topology;
  int root = topology.root_terminal();
  int top = state.rooted.top;

  SolveResult result;
  result.length = std::abs(state.terminal_position[root] - state.quasi_terminal[top]);

  std::vector<Point> pos = state.terminal_position;
  // Top-down: reverse of the bottom-up processing order.
  for (auto it = state.processing_order.rbegin(); it != state.processing_order.rend(); ++it) {
    int node = *it;
    int parent = state.rooted.parent[node];
    Point sp = pos[parent];
    Point qi = state.quasi_terminal[node];
    const Circle& ci = state.circle[node];
    auto [c1, c2] = state.rooted.children[node];
    double scale = std::max(1.0, ci.radius);

    Point denom = std::conj(qi) - std::conj(sp);
    if (std::abs(denom) <= 1e-14 * scale) {
      result.collapsed_edges.push_back({parent, node, CollapseReason::lambda_high});
      pos[node] = qi;
      continue;
    }
    // The line through q_i and s_parent meets C_i at q_i and once more; the
    // conjugate formula picks the second intersection.
    double lambda = 2.0 * ((qi - ci.center) / (qi - sp)).real();
    Point si = qi - lambda * (qi - sp);
    pos[node] = si;

    if (std::abs(sp - ci.center) <= ci.radius + kBoundaryTol * scale) {
      result.collapsed_edges.push_back({parent, node, CollapseReason::parent_inside_circle});
      continue;
    }
    if (lambda <= kBoundaryTol) {
      result.collapsed_edges.push_back({parent, node, CollapseReason::lambda_low});
      continue;
    }
    if (lambda >= 1.0 - kBoundaryTol) {
      result.collapsed_edges.push_back({parent, node, CollapseReason::lambda_high});
      continue;
    }
    // Minor arc test: s_i strictly on the far side of line q_c1 q_c2 from q_i.
    Point qa = state.quasi_terminal[c1];
    Point qb = state.quasi_terminal[c2];
    double side_s = cross(qb - qa, si - qa);
    double side_q = cross(qb - qa, qi - qa);
    if (side_s * side_q >= 0.0 || std::abs(side_s) <= kBoundaryTol * std::abs(qb - qa) * scale) {
      result.collapsed_edges.push_back({parent, node, CollapseReason::off_minor_arc});
      continue;
    }
  }

  if (result.collapsed_edges.empty()) {
    result.status = SolveStatus::NonDegenerate;
    EmbeddedTree tree;
    tree.topology = topology;
    tree.position = std::move(pos);
    tree.declared_eps = 0.0;
    result.tree = std::move(tree);
  } else {
    result.status = SolveStatus::Degenerate;
  }
  return result;
}

SolveResult solve(const FullTopology& topology, const std::vector<Point>& terminals,
                  const std::vector<Point>* steiner_hint) {
  return backward_pass(forward_pass(topology, terminals, steiner_hint));
}

SolveResult solve(const EmbeddedTree& tree) {
  return solve(tree.topology, tree.position, &tree.position);
}

namespace {

struct UnfoldWalker {
  const EmbeddedTree& tree;
  std::vector<Point> vertices;

  // Appends the unfolded subtree hanging below `node`, entered from
  // `from_node`, with accumulated rotation `rot`.  The path already ends at
  // the image of `node`.
  void walk(int node, int from_node, Point rot) {
    if (tree.topology.is_terminal(node)) return;
    Point here = tree.position[node];
    Point back = tree.position[from_node] - here;
    int c1 = -1, c2 = -1;
    double best = std::numeric_limits<double>::infinity();
    for (int v : tree.topology.neighbors(node)) {
      if (v == from_node) continue;
      double a = ccw_angle(back, tree.position[v] - here);
      if (a < best) {
        best = a;
        if (c1 != -1) c2 = c1;
        c1 = v;
      } else {
        c2 = v;
      }
    }
    Point w = omega();
    Point end = vertices.back();
    vertices.push_back(end + rot * w * (tree.position[c1] - here));
    walk(c1, node, rot * w);
    end = vertices.back();
    vertices.push_back(end + rot * std::conj(w) * (tree.position[c2] - here));
    walk(c2, node, rot * std::conj(w));
  }
};

}  // namespace

PolyPath unfold_edge(const EmbeddedTree& tree, int u, int v) {
  const auto& nbrs = tree.topology.neighbors(u);
  if (std::find(nbrs.begin(), nbrs.end(), v) == nbrs.end()) {
    throw Error("unfold_edge: (u, v) is not an edge");
  }
  UnfoldWalker side_u{tree, {tree.position[u]}};
  side_u.walk(u, v, Point{1.0, 0.0});
  UnfoldWalker side_v{tree, {tree.position[v]}};
  side_v.walk(v, u, Point{1.0, 0.0});

  std::vector<Point> vertices(side_u.vertices.rbegin(), side_u.vertices.rend());
  vertices.insert(vertices.end(), side_v.vertices.begin(), side_v.vertices.end());
  return PolyPath::from_vertices(std::move(vertices));
}

PolyPath unfold(const EmbeddedTree& tree, int root_terminal) {
  if (!tree.topology.is_terminal(root_terminal)) {
    throw NotATerminal("unfold: root must be a terminal");
  }
  if (tree.topology.n_terminals() < 3) {
    throw Error("unfold: need at least three terminals");
  }
  return unfold_edge(tree, root_terminal, tree.topology.neighbors(root_terminal).front());
}

TkClosedForm closed_form_tk(const TkParams& params) {
  params.validate();
  if (params.eps >= 1.0 / (static_cast<double>(params.k) * params.k)) {
    throw EpsOutOfRange("closed_form_tk: requires eps < 1/k^2");
  }
  int k = params.k;
  int n_nodes = 1 << (k + 1);
  Point z = params.z();
  auto p = build_tk_closed_form(params).position;

  TkClosedForm out;
  double nan = std::numeric_limits<double>::quiet_NaN();
  out.q.assign(n_nodes, Point{nan, nan});
  out.c.assign(n_nodes, Point{nan, nan});
  out.s.assign(n_nodes, Point{nan, nan});

  // Powers of z up to k.
  std::vector<Point> zp(k + 2, Point{1.0, 0.0});
  for (int j = 1; j <= k + 1; ++j) zp[j] = zp[j - 1] * z;

  for (int i = 1; i < n_nodes; ++i) {
    int h = heap_height(i);
    auto a = heap_turn_exponents(i);
    Point w_a = omega_pow(a[h]);
    Point half_z_h = std::pow(Point{0.5, 0.0} * z, h);

    Point tail = 0.0;  // z + z^2 + ... + z^{k-h}
    for (int j = 1; j <= k - h; ++j) tail += zp[j];
    out.q[i] = p[i] + w_a * half_z_h * tail;

    if (i < (1 << k)) {
      out.c[i] = 0.5 * (p[i] + out.q[i]);
      Point head = 0.0;  // 1 + z + ... + z^{k-h-1}
      for (int j = 0; j <= k - h - 1; ++j) head += zp[j];
      out.s[i] = p[i] + w_a / std::pow(2.0, h + 1) * head * (zp[h + 1] - 1.0);
    }
  }
  return out;
}

}  // namespace steiner
