#include "steiner/topology.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace steiner {

FullTopology::FullTopology(std::vector<std::vector<int>> adjacency, std::vector<NodeKind> kinds,
                           int root_terminal)
    : adjacency_(std::move(adjacency)), kinds_(std::move(kinds)), root_terminal_(root_terminal) {
  n_terminals_ = static_cast<int>(std::count(kinds_.begin(), kinds_.end(), NodeKind::terminal));
  validate();
}

FullTopology FullTopology::from_edges(int node_count,
                                      const std::vector<std::pair<int, int>>& edges,
                                      const std::vector<NodeKind>& kinds, int root_terminal) {
  std::vector<std::vector<int>> adjacency(node_count);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= node_count || v >= node_count) {
      throw InvalidTopology("edge endpoint out of range");
    }
    adjacency[u].push_back(v);
    adjacency[v].push_back(u);
  }
  return FullTopology(std::move(adjacency), kinds, root_terminal);
}

std::vector<int> FullTopology::terminals() const {
  std::vector<int> out;
  for (int i = 0; i < node_count(); ++i) {
    if (is_terminal(i)) out.push_back(i);
  }
  return out;
}

std::vector<std::pair<int, int>> FullTopology::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < node_count(); ++u) {
    for (int v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

int FullTopology::edge_count() const {
  int twice = 0;
  for (const auto& adj : adjacency_) twice += static_cast<int>(adj.size());
  return twice / 2;
}

void FullTopology::validate() const {
  int n = node_count();
  if (n < 2 || static_cast<int>(kinds_.size()) != n) {
    throw InvalidTopology("node/kind count mismatch");
  }
  if (n_terminals_ < 2) {
    throw InvalidTopology("need at least two terminals");
  }
  if (root_terminal_ < 0 || root_terminal_ >= n || !is_terminal(root_terminal_)) {
    throw InvalidTopology("root is not a terminal");
  }
  if (edge_count() != n - 1) {
    throw InvalidTopology("edge count != node count - 1");
  }
  for (int i = 0; i < n; ++i) {
    int deg = degree(i);
    if (is_terminal(i) && deg != 1) {
      throw InvalidTopology("terminal " + std::to_string(i) + " has degree " + std::to_string(deg));
    }
    if (!is_terminal(i) && deg != 3) {
      throw InvalidTopology("steiner point " + std::to_string(i) + " has degree " +
                            std::to_string(deg));
    }
  }
  // Connectivity: reach all nodes from the root.
  std::vector<char> seen(n, 0);
  std::vector<int> stack{root_terminal_};
  seen[root_terminal_] = 1;
  int visited = 0;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    ++visited;
    for (int v : adjacency_[u]) {
      if (!seen[v]) {
        seen[v] = 1;
        stack.push_back(v);
      }
    }
  }
  if (visited != n) {
    throw InvalidTopology("topology is not connected");
  }
  if (n_terminals_ >= 3 && n_steiner() != n_terminals_ - 2) {
    throw InvalidTopology("full topology on n >= 3 terminals needs n - 2 steiner points");
  }
}

RootedView root_topology(const FullTopology& topology) {
  int n = topology.node_count();
  RootedView view;
  view.parent.assign(n, -1);
  view.children.assign(n, {-1, -1});
  view.postorder.reserve(n);

  int root = topology.root_terminal();
  view.top = topology.neighbors(root).front();

  // Iterative DFS producing children in adjacency order and a postorder list.
  std::vector<std::pair<int, int>> stack{{root, -1}};
  std::vector<int> preorder;
  preorder.reserve(n);
  while (!stack.empty()) {
    auto [u, p] = stack.back();
    stack.pop_back();
    view.parent[u] = p;
    preorder.push_back(u);
    int slot = 0;
    for (int v : topology.neighbors(u)) {
      if (v == p) continue;
      if (u != root) {
        if (slot > 1) throw InvalidTopology("steiner point with more than two children");
        view.children[u][slot++] = v;
      }
      stack.push_back({v, u});
    }
  }
  view.postorder.assign(preorder.rbegin(), preorder.rend());
  return view;
}

std::vector<Cherry> cherries(const FullTopology& topology, CherryListing listing) {
  std::vector<Cherry> out;
  for (int s = 0; s < topology.node_count(); ++s) {
    if (topology.is_terminal(s)) continue;
    std::vector<int> adjacent_terminals;
    for (int v : topology.neighbors(s)) {
      if (topology.is_terminal(v)) adjacent_terminals.push_back(v);
    }
    if (adjacent_terminals.size() < 2) continue;
    if (listing == CherryListing::all_pairs) {
      for (size_t i = 0; i < adjacent_terminals.size(); ++i) {
        for (size_t j = i + 1; j < adjacent_terminals.size(); ++j) {
          out.push_back({s, {adjacent_terminals[i], adjacent_terminals[j]}});
        }
      }
    } else {
      // Prefer the pair avoiding the root terminal; with n = 3 a Steiner
      // point sees three terminals and exactly one root-free pair.
      std::vector<int> pool;
      for (int t : adjacent_terminals) {
        if (t != topology.root_terminal()) pool.push_back(t);
      }
      if (pool.size() < 2) pool = adjacent_terminals;
      out.push_back({s, {pool[0], pool[1]}});
    }
  }
  return out;
}

FullTopology complete_binary_topology(int k) {
  if (k < 1) {
    throw InvalidTopology("complete_binary_topology: k must be >= 1");
  }
  if (k > 20) {
    throw KTooLarge("complete_binary_topology: node count would exceed 2^21");
  }
  int n_nodes = 1 << (k + 1);
  std::vector<std::vector<int>> adjacency(n_nodes);
  for (int i = 1; i < n_nodes; ++i) {
    int p = i / 2;
    adjacency[i].push_back(p);
    adjacency[p].push_back(i);
  }
  std::vector<NodeKind> kinds(n_nodes, NodeKind::steiner);
  kinds[0] = NodeKind::terminal;
  for (int i = 1 << k; i < n_nodes; ++i) kinds[i] = NodeKind::terminal;
  return FullTopology(std::move(adjacency), std::move(kinds), 0);
}

int heap_height(std::int64_t i) {
  if (i < 1) throw Error("heap_height: index must be >= 1");
  return std::bit_width(static_cast<std::uint64_t>(i)) - 1;
}

std::vector<int> heap_turn_exponents(std::int64_t i) {
  int h = heap_height(i);
  std::vector<int> a(h + 1);
  a[0] = 0;
  for (int j = 1; j <= h; ++j) {
    bool digit = (i >> (h - j)) & 1;
    a[j] = a[j - 1] + (digit ? 1 : -1);
  }
  return a;
}

}  // namespace steiner
