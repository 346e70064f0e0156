#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "steiner/errors.hpp"

namespace steiner {

enum class NodeKind { terminal, steiner };

// A full Steiner topology: every terminal has degree 1, every Steiner point
// degree 3.  Node ids are dense integers; the binary family uses heap indices
// directly as ids.
class FullTopology {
 public:
  FullTopology() = default;
  FullTopology(std::vector<std::vector<int>> adjacency, std::vector<NodeKind> kinds,
               int root_terminal);

  static FullTopology from_edges(int node_count, const std::vector<std::pair<int, int>>& edges,
                                 const std::vector<NodeKind>& kinds, int root_terminal);

  int node_count() const { return static_cast<int>(adjacency_.size()); }
  int n_terminals() const { return n_terminals_; }
  int n_steiner() const { return node_count() - n_terminals_; }
  int root_terminal() const { return root_terminal_; }
  NodeKind kind(int node) const { return kinds_[node]; }
  bool is_terminal(int node) const { return kinds_[node] == NodeKind::terminal; }
  const std::vector<int>& neighbors(int node) const { return adjacency_[node]; }
  int degree(int node) const { return static_cast<int>(adjacency_[node].size()); }

  std::vector<int> terminals() const;
  // Edges as (min id, max id) pairs, sorted.
  std::vector<std::pair<int, int>> edges() const;
  int edge_count() const;

  // Checks the full-topology invariants (tree, degrees, root is a terminal).
  // Throws InvalidTopology on violation.
  void validate() const;

 private:
  std::vector<std::vector<int>> adjacency_;
  std::vector<NodeKind> kinds_;
  int n_terminals_ = 0;
  int root_terminal_ = 0;
};

// Parent/children arrays for a topology rooted at its root terminal.
// The root terminal's single neighbor is the top of the tree; every Steiner
// node has exactly two children, stored in adjacency order.
struct RootedView {
  std::vector<int> parent;                   // parent[root] = -1
  std::vector<std::array<int, 2>> children;  // {-1,-1} at terminals
  std::vector<int> postorder;                // leaves before their parents
  int top = -1;                              // the root terminal's neighbor
};

RootedView root_topology(const FullTopology& topology);

// Two terminals sharing a common Steiner point.
struct Cherry {
  int steiner = -1;
  std::array<int, 2> terminals{-1, -1};
};

enum class CherryListing {
  melzak,    // one cherry per eligible Steiner point, avoiding the root when possible
  all_pairs  // every terminal pair sharing a Steiner point (3 entries when n = 3)
};

// All cherries of the topology.  With CherryListing::melzak a Steiner point
// adjacent to three terminals (only possible when n = 3) contributes the one
// pair avoiding the root terminal, which is what Melzak processing consumes.
std::vector<Cherry> cherries(const FullTopology& topology,
                             CherryListing listing = CherryListing::melzak);

// The binary family: nodes 0 .. 2^{k+1}-1, terminals {0} u {2^k .. 2^{k+1}-1},
// edges e_i = (i, floor(i/2)) for 1 <= i <= 2^{k+1}-1, rooted at 0.
// Throws KTooLarge for k > 20 and InvalidTopology for k < 1.
FullTopology complete_binary_topology(int k);

// h(i) = floor(log2 i).
int heap_height(std::int64_t i);

// The exponent sequence a_0(i) .. a_{h(i)}(i): a_0 = 0 and each step adds +1
// for binary digit 1 and -1 for digit 0, reading the digits of i below the
// leading bit from most significant down.
std::vector<int> heap_turn_exponents(std::int64_t i);

}  // namespace steiner
