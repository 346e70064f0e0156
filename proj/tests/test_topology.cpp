#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "steiner/instance_gen.hpp"
#include "steiner/topology.hpp"

using namespace steiner;

TEST_CASE("complete binary topology, k = 1") {
  auto topo = complete_binary_topology(1);
  CHECK(topo.node_count() == 4);
  CHECK(topo.n_terminals() == 3);
  CHECK(topo.n_steiner() == 1);
  CHECK(topo.edge_count() == 3);
  CHECK(topo.is_terminal(0));
  CHECK(!topo.is_terminal(1));
  CHECK(topo.is_terminal(2));
  CHECK(topo.is_terminal(3));
  CHECK(topo.root_terminal() == 0);
}

TEST_CASE("complete binary topology, k = 3") {
  auto topo = complete_binary_topology(3);
  CHECK(topo.n_terminals() == 9);
  CHECK(topo.n_steiner() == 7);
  CHECK(topo.edge_count() == 15);
  // e_i = (i, floor(i/2))
  for (int i = 1; i < 16; ++i) {
    const auto& nbrs = topo.neighbors(i);
    CHECK(std::count(nbrs.begin(), nbrs.end(), i / 2) == 1);
  }
}

TEST_CASE("complete binary topology rejects bad k") {
  CHECK_THROWS_AS(complete_binary_topology(0), InvalidTopology);
  CHECK_THROWS_AS(complete_binary_topology(21), KTooLarge);
}

TEST_CASE("binary topologies validate for k <= 14") {
  for (int k = 1; k <= 14; ++k) {
    auto topo = complete_binary_topology(k);
    CHECK_NOTHROW(topo.validate());
    CHECK(topo.n_terminals() == (1 << k) + 1);
  }
}

TEST_CASE("cherries of the binary family") {
  // k = 1: the single Steiner point sees three terminals; the Melzak listing
  // returns the root-free pair.
  auto one = cherries(complete_binary_topology(1));
  REQUIRE(one.size() == 1);
  CHECK(one[0].steiner == 1);
  CHECK(one[0].terminals[0] == 2);
  CHECK(one[0].terminals[1] == 3);
  // All-pairs listing: three cherries through the same Steiner point.
  CHECK(cherries(complete_binary_topology(1), CherryListing::all_pairs).size() == 3);

  auto two = cherries(complete_binary_topology(2));
  REQUIRE(two.size() == 2);
  CHECK(two[0].steiner == 2);
  CHECK(two[0].terminals == std::array<int, 2>{4, 5});
  CHECK(two[1].steiner == 3);
  CHECK(two[1].terminals == std::array<int, 2>{6, 7});
}

TEST_CASE("cherries of a path-shaped topology on four terminals") {
  // t0 - s4 - s5 shape: s4 sees t0, t1; s5 sees t2, t3.
  std::vector<std::pair<int, int>> edges{{0, 4}, {1, 4}, {4, 5}, {2, 5}, {3, 5}};
  std::vector<NodeKind> kinds{NodeKind::terminal, NodeKind::terminal, NodeKind::terminal,
                              NodeKind::terminal, NodeKind::steiner, NodeKind::steiner};
  auto topo = FullTopology::from_edges(6, edges, kinds, 0);
  auto list = cherries(topo);
  CHECK(list.size() == 2);
}

TEST_CASE("cherries nonempty and valid on random topologies") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 3 + static_cast<int>(uniform01(rng) * 12);
    auto topo = random_full_topology(n, rng);
    CHECK_NOTHROW(topo.validate());
    auto melzak_list = cherries(topo);
    CHECK(!melzak_list.empty());
    for (const auto& cherry : melzak_list) {
      CHECK(!topo.is_terminal(cherry.steiner));
      for (int t : cherry.terminals) {
        CHECK(topo.is_terminal(t));
        const auto& nbrs = topo.neighbors(t);
        CHECK(std::count(nbrs.begin(), nbrs.end(), cherry.steiner) == 1);
      }
    }
    // Counted as terminal pairs, there are always at least two.
    CHECK(cherries(topo, CherryListing::all_pairs).size() >= 2);
  }
}

TEST_CASE("heap turn exponents") {
  CHECK(heap_turn_exponents(1) == std::vector<int>{0});
  // 5 = 101b: digits below the leading bit are 0 then 1.
  CHECK(heap_turn_exponents(5) == std::vector<int>{0, -1, 0});
  for (int m = 1; m <= 6; ++m) {
    auto a = heap_turn_exponents(std::int64_t{1} << m);
    REQUIRE(static_cast<int>(a.size()) == m + 1);
    for (int j = 0; j <= m; ++j) CHECK(a[j] == -j);
  }
}

TEST_CASE("heap exponent recurrences hold exactly") {
  for (int k = 1; k <= 14; ++k) {
    std::int64_t n_nodes = std::int64_t{1} << (k + 1);
    for (std::int64_t i = 1; 2 * i + 1 < n_nodes; ++i) {
      auto ai = heap_turn_exponents(i);
      auto a2i = heap_turn_exponents(2 * i);
      auto a2i1 = heap_turn_exponents(2 * i + 1);
      int h = heap_height(i);
      CHECK(heap_height(2 * i) == h + 1);
      for (int j = 0; j <= h; ++j) {
        CHECK(a2i[j] == ai[j]);
        CHECK(a2i1[j] == ai[j]);
      }
      CHECK(ai[h] == a2i[h + 1] + 1);
      CHECK(ai[h] == a2i1[h + 1] - 1);
    }
  }
}

TEST_CASE("rooted view structure") {
  auto topo = complete_binary_topology(3);
  auto rooted = root_topology(topo);
  CHECK(rooted.top == 1);
  CHECK(rooted.parent[0] == -1);
  for (int i = 1; i < topo.node_count(); ++i) CHECK(rooted.parent[i] == i / 2);
  for (int i = 1; i < 8; ++i) {
    CHECK(rooted.children[i] == std::array<int, 2>{2 * i, 2 * i + 1});
  }
  // Postorder: children precede parents.
  std::vector<int> order_of(topo.node_count());
  for (size_t pos = 0; pos < rooted.postorder.size(); ++pos) order_of[rooted.postorder[pos]] = pos;
  for (int i = 1; i < 8; ++i) {
    CHECK(order_of[2 * i] < order_of[i]);
    CHECK(order_of[2 * i + 1] < order_of[i]);
  }
}

TEST_CASE("validation rejects broken topologies") {
  // Steiner point of degree 2.
  std::vector<std::pair<int, int>> edges{{0, 1}, {1, 2}};
  std::vector<NodeKind> kinds{NodeKind::terminal, NodeKind::steiner, NodeKind::terminal};
  CHECK_THROWS_AS(FullTopology::from_edges(3, edges, kinds, 0), InvalidTopology);

  // Root is not a terminal.
  auto topo_edges = std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {1, 3}};
  std::vector<NodeKind> star_kinds{NodeKind::terminal, NodeKind::steiner, NodeKind::terminal,
                                   NodeKind::terminal};
  CHECK_THROWS_AS(FullTopology::from_edges(4, topo_edges, star_kinds, 1), InvalidTopology);
  CHECK_NOTHROW(FullTopology::from_edges(4, topo_edges, star_kinds, 0));

  // Disconnected graph with a cycle.
  std::vector<std::pair<int, int>> cyc{{0, 1}, {1, 2}, {2, 0}};
  std::vector<NodeKind> cyc_kinds{NodeKind::terminal, NodeKind::terminal, NodeKind::terminal,
                                  NodeKind::terminal, NodeKind::terminal};
  CHECK_THROWS_AS(FullTopology::from_edges(5, cyc, cyc_kinds, 0), InvalidTopology);
}
