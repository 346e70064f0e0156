#pragma once

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "steiner/geometry.hpp"
#include "steiner/topology.hpp"

namespace steiner {

// A full topology embedded in the plane: one coordinate per node.  Edge
// lengths and Steiner angle triples are derived from the coordinates.
struct EmbeddedTree {
  FullTopology topology;
  std::vector<Point> position;          // by node id
  std::optional<double> declared_eps;   // the construction's angle-error budget

  double length() const;
  double edge_length(int u, int v) const { return std::abs(position[u] - position[v]); }

  // The three pairwise convex angles at a Steiner point, in neighbor order
  // (0-1, 0-2, 1-2).  Throws DegenerateEdge if an incident edge is shorter
  // than 1e-12.
  std::array<double, 3> steiner_angles(int steiner) const;

  // True if the three edges at the Steiner point span the whole plane (the
  // three sector angles are all <= pi), in which case the convex angles sum
  // to 2 pi.
  bool non_reflex_at(int steiner) const;

  void validate() const;
};

// max over Steiner points and angle pairs of |angle - 2pi/3|; 0 for locally
// minimum trees.  Throws DegenerateEdge when an edge at a Steiner point has
// length < 1e-12, in which case the certificate is undefined.
double measure_eps(const EmbeddedTree& tree);

struct TkParams {
  int k = 1;          // >= 1
  double eps = 0.0;   // radians, in [0, pi/3)

  void validate() const;
  Point z() const { return unit_rotation(eps); }  // e^{i eps}
};

// The binary family: 2^k + 1 terminals, edge e_i of length 2^{-floor(log2 i)},
// angles (2pi/3, 2pi/3 - eps, 2pi/3 + eps) at every Steiner point.  Root
// terminal at the origin, first edge along +x.  Built by the two-term
// recurrence p_{2i} = p_i + (p_i - p_{i/2}) w^{-1} z / 2 (and w z / 2).
EmbeddedTree build_tk_recursive(const TkParams& params);

// Same tree via the closed form p_i = sum_j w^{a_j(i)} (z/2)^j.
EmbeddedTree build_tk_closed_form(const TkParams& params);

// Signed deviations of the three angles at a Steiner point from 2pi/3.
// In the rooted orientation with children (c1, c2) in stored order, the
// counterclockwise sectors are:
//   parent -> c1 : 2pi/3 + first
//   c1 -> c2     : 2pi/3 + between_children
//   c2 -> parent : 2pi/3 + second
struct AngleErrors {
  double first = 0.0;
  double second = 0.0;
  double between_children = 0.0;

  double max_abs() const;
};

// Embeds a rooted topology with the requested edge lengths and Steiner angle
// triples.  The root terminal is placed at the origin and its edge along
// root_edge_dir.  Edge lengths are keyed by the child node of each edge.
// Throws InvalidAngleTriple if a triple does not sum to zero or pushes an
// angle outside (0, pi).
EmbeddedTree build_from_angle_errors(const FullTopology& topology, Point root_edge_dir,
                                     const std::map<int, double>& edge_lengths,
                                     const std::map<int, AngleErrors>& errors);

// The three-terminal extremal tree: angle errors (-eps/2, -eps/2, +eps) with
// root edge of length delta and unit cherry edges.  L(T) = 2 + delta.
EmbeddedTree build_witness3(double eps, double delta);

// The four-terminal extremal tree: errors (0, eps, -eps, 0), middle edge of
// length delta, unit outer edges.  L(T) = 4 + delta.
EmbeddedTree build_witness4(double eps, double delta);

// Converts terminal `terminal` into a Steiner point with two new terminals at
// distance delta and three equal angles there.  Adds exactly 2 delta to the
// length and preserves the angle certificate.  The first new terminal lies on
// the left of the ray s -> t.
EmbeddedTree split_terminal(const EmbeddedTree& tree, int terminal, double delta);

// The concentric-circle construction for eps in [pi/3, 2pi/3): two tangent
// cascades over circles of radius r^i (r = sin(pi/3 - eps/2)) joined by an
// edge of length delta, with 2^{k+1} terminals on the outer circle.  Steiner
// angles take the three values 2pi/3 - eps, 5pi/6 - eps/2, pi/6 + eps/2;
// Steiner points may coincide (the tree stays free of zero-length edges).
// Node ids: heap index i for the first cascade, (2^{k+1} - 1) + i for the
// translated copy; the circles' common center sits at the origin.
// Throws EpsOutOfRange outside [pi/3, 2pi/3).
EmbeddedTree build_circle_construction(int k, double eps, double delta);

// delta + 4 cos(pi/3 - eps/2) (1 - (2r)^k) / (1 - 2r), and its eps = pi/3
// limit delta + 2 sqrt(3) k.
double circle_tree_length_formula(int k, double eps, double delta);

// Length of the degenerate comparison star: delta + 2 (2r)^k.
double circle_star_length_formula(int k, double eps, double delta);

}  // namespace steiner
