#pragma once

#include <optional>
#include <vector>

#include "steiner/embedded_tree.hpp"
#include "steiner/geometry.hpp"
#include "steiner/topology.hpp"

namespace steiner {

// Forward-pass record: one quasi-terminal per node (terminals are their own),
// and per Steiner node the equilateral triangle over its children's
// quasi-terminals together with its circumcircle.
struct MelzakState {
  const FullTopology* topology = nullptr;
  RootedView rooted;
  std::vector<Point> terminal_position;  // input coordinates (by node id)
  std::vector<Point> quasi_terminal;     // q_i, by node id
  std::vector<Circle> circle;            // C_i, valid at Steiner nodes
  std::vector<int> processing_order;     // Steiner nodes, leaves upward
  bool used_centroid_fallback = false;   // side rule fell back to centroids

  // The equilateral triangle of a Steiner node: (q_i, q_c1, q_c2).
  std::array<Point, 3> triangle(int steiner) const {
    auto [c1, c2] = rooted.children[steiner];
    return {quasi_terminal[steiner], quasi_terminal[c1], quasi_terminal[c2]};
  }
};

enum class SolveStatus { NonDegenerate, Degenerate };

enum class CollapseReason { lambda_low, lambda_high, parent_inside_circle, off_minor_arc };

struct CollapsedEdge {
  int parent = -1;
  int child = -1;
  CollapseReason reason{};
};

struct SolveResult {
  SolveStatus status = SolveStatus::Degenerate;
  // The reconstructed locally minimum tree; positions are meaningful only
  // when status == NonDegenerate.
  std::optional<EmbeddedTree> tree;
  std::vector<CollapsedEdge> collapsed_edges;
  // |root - q_top|: the exact shortest length when NonDegenerate, otherwise a
  // certified lower bound (the unfolding endpoint distance).
  double length = 0.0;
};

// Melzak forward pass: computes quasi-terminals bottom-up.  The equilateral
// third point of each cherry is taken on the side opposite the reference
// point of its Steiner node: the hint position when given (the approximate
// tree's own Steiner coordinate), otherwise the centroid of the subtree's
// terminals, flagged in the state.  Throws CoincidentQuasiTerminals when a
// cherry's quasi-terminals coincide.
MelzakState forward_pass(const FullTopology& topology, const std::vector<Point>& terminals,
                         const std::vector<Point>* steiner_hint = nullptr);

// Backward pass: intersects each segment s_parent q_i with the circle C_i via
// the conjugate formula.  Boundary cases within 1e-10 of lambda in {0,1}, of
// the circle, or of the arc endpoints count as degenerate.
SolveResult backward_pass(const MelzakState& state);

// forward_pass + backward_pass.
SolveResult solve(const FullTopology& topology, const std::vector<Point>& terminals,
                  const std::vector<Point>* steiner_hint = nullptr);

// Convenience: solve the tree's terminals with its own Steiner positions as
// the side hint.
SolveResult solve(const EmbeddedTree& tree);

// Unfolds the two components separated by edge (u, v) into a single polygonal
// path of the same total length: each cherry's edges are rotated by +-pi/3 so
// the path's endpoint distance is a lower bound on L(S(T)).
PolyPath unfold_edge(const EmbeddedTree& tree, int u, int v);

// Unfolding rooted at a terminal: the path starts at the root and traverses
// all 2n-3 edges.
PolyPath unfold(const EmbeddedTree& tree, int root_terminal);

// Closed forms for the binary family (valid for eps < 1/k^2): quasi-terminals
// q_i = p_i + w^{a_h(i)} (z/2)^h (z + ... + z^{k-h}), centres
// c_i = (p_i + q_i)/2, and Steiner points
// s_i = p_i + w^{a_h(i)} 2^{-h-1} (1 + ... + z^{k-h-1})(z^{h+1} - 1).
// Entries outside each map's valid id range are NaN.
struct TkClosedForm {
  std::vector<Point> q;  // ids 1 .. 2^{k+1}-1
  std::vector<Point> c;  // ids 1 .. 2^k-1
  std::vector<Point> s;  // ids 1 .. 2^k-1
};

TkClosedForm closed_form_tk(const TkParams& params);

struct OracleResult {
  std::vector<Point> positions;  // by node id; terminals fixed
  double length = 0.0;
  int sweeps = 0;
  bool converged = false;
};

// Thrown when the oracle runs out of sweeps; carries the last iterate.
struct OracleNoConvergence : NoConvergence {
  OracleResult last_iterate;
  OracleNoConvergence(const std::string& message, OracleResult result)
      : NoConvergence(message), last_iterate(std::move(result)) {}
};

// Independent length oracle: repeatedly moves every Steiner point to the
// Fermat point of its three neighbors (sweeping the tree in alternating
// order, damped on oscillation) until the largest move in a sweep drops
// below tol.  Throws OracleNoConvergence after max_iter sweeps.
OracleResult numeric_oracle(const FullTopology& topology, const std::vector<Point>& terminals,
                            int max_iter = 100000, double tol = 1e-10,
                            const std::vector<Point>* initial = nullptr);

// Fermat point of three points: the point minimizing the summed distance.
Point fermat_point(Point a, Point b, Point c);

}  // namespace steiner
