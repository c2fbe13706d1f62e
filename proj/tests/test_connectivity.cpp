#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "dwc/connectivity.hpp"
#include "dwc/oracle.hpp"
#include "test_util.hpp"

using namespace dwc;
using namespace dwc::testutil;

namespace {

std::int64_t cut_value(const Graph& g, const VertexSet& side) {
  std::int64_t value = 0;
  for (auto [u, v] : g.edges()) value += side.contains(u) != side.contains(v);
  return value;
}

// inclusion-maximal subsets of size >= 2 inducing k-edge-connected subgraphs,
// by exhaustive enumeration (independent route for decompose_kecc)
std::vector<std::vector<int>> brute_force_kecc(const Graph& g, int k) {
  int n = g.num_vertices();
  std::vector<std::uint32_t> feasible;
  for (std::uint32_t s = 1; s < (1u << n); ++s) {
    if (std::popcount(s) < 2) continue;
    std::vector<int> members;
    for (int v = 0; v < n; ++v)
      if (s >> v & 1) members.push_back(v);
    InducedSubgraph sub = induced_subgraph(g, VertexSet(n, members));
    bool ok = is_connected(sub.graph);
    if (ok) {
      // check every bipartition of the subset
      int sn = sub.graph.num_vertices();
      for (std::uint32_t a = 1; ok && a < (1u << (sn - 1)); ++a) {
        int crossing = 0;
        for (auto [u, v] : sub.graph.edges())
          crossing += ((a >> u) & 1) != ((a >> v) & 1);
        if (crossing < k) ok = false;
      }
    }
    if (ok) feasible.push_back(s);
  }
  std::vector<std::vector<int>> maximal;
  for (std::uint32_t s : feasible) {
    bool dominated = false;
    for (std::uint32_t t : feasible)
      if (t != s && (s & t) == s) dominated = true;
    if (dominated) continue;
    std::vector<int> members;
    for (int v = 0; v < n; ++v)
      if (s >> v & 1) members.push_back(v);
    maximal.push_back(members);
  }
  std::sort(maximal.begin(), maximal.end());
  return maximal;
}

}  // namespace

TEST_CASE("global_min_cut examples") {
  CHECK(global_min_cut(cycle(5)).value == 2);
  CHECK(global_min_cut(complete(4)).value == 3);

  CutResult r = global_min_cut(two_k4_bridge());
  CHECK(r.value == 1);
  CHECK((r.side.size() == 4));
  // one side is exactly one of the K4s
  bool low = r.side.contains(0);
  for (int v = 0; v < 8; ++v) CHECK(r.side.contains(v) == (low ? v < 4 : v >= 4));
  CHECK(cut_value(two_k4_bridge(), r.side) == 1);

  CHECK_THROWS_AS(global_min_cut(Graph(1)), std::invalid_argument);
  CHECK_THROWS_AS(global_min_cut(Graph::from_edges(4, {{0, 1}, {2, 3}})),
                  std::invalid_argument);
}

TEST_CASE("global_min_cut matches brute force on random connected graphs") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 3 + static_cast<int>(rng() % 8);
    Graph g = random_connected_gnp(n, 0.45, rng);
    CutResult r = global_min_cut(g);
    CHECK(r.value == brute_force_min_cut(g));
    CHECK(cut_value(g, r.side) == r.value);
    CHECK(r.side.size() >= 1);
    CHECK(r.side.size() < n);
  }
}

TEST_CASE("edge_connectivity_at_least") {
  CHECK(edge_connectivity_at_least(cycle(5), 2));
  CHECK(!edge_connectivity_at_least(cycle(5), 3));
  CHECK(edge_connectivity_at_least(Graph(1), 7));  // singleton convention
  Graph k4_minus = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
  CHECK(edge_connectivity_at_least(k4_minus, 2));
  CHECK(!edge_connectivity_at_least(k4_minus, 3));
  CHECK(!edge_connectivity_at_least(Graph(2), 1));  // disconnected
}

TEST_CASE("max_flow") {
  CHECK(max_flow(complete(4), 0, 2) == 3);
  CHECK(max_flow(path(3), 0, 2) == 1);
  CHECK(max_flow(two_k4_bridge(), 1, 6) == 1);
  CHECK_THROWS_AS(max_flow(path(3), 1, 1), std::invalid_argument);

  // weighted: capacities follow g.edges() order (0,1),(0,2),(1,3),(2,3)
  Graph g = Graph::from_edges(4, {{0, 1}, {1, 3}, {0, 2}, {2, 3}});
  std::vector<std::int64_t> caps{2, 1, 2, 1};
  CHECK(max_flow(g, 0, 3, caps) == 3);
}

TEST_CASE("unit max_flow equals brute-force s-t cut on random graphs") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 3 + static_cast<int>(rng() % 8);
    Graph g = random_gnp(n, 0.4, rng);
    int s = 0, t = n - 1;
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (std::uint32_t a = 0; a < (1u << n); ++a) {
      if (!((a >> s) & 1) || ((a >> t) & 1)) continue;
      std::int64_t crossing = 0;
      for (auto [u, v] : g.edges()) crossing += ((a >> u) & 1) != ((a >> v) & 1);
      best = std::min(best, crossing);
    }
    CHECK(max_flow(g, s, t) == best);
  }
}

TEST_CASE("decompose_kecc examples") {
  SUBCASE("two disjoint triangles, k=2") {
    Graph g = Graph::from_edges(
        6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    Decomposition d = decompose_kecc(g, 2);
    REQUIRE(d.components.size() == 2);
    CHECK(d.components[0].members() == std::vector<int>{0, 1, 2});
    CHECK(d.components[1].members() == std::vector<int>{3, 4, 5});
    CHECK(d.leftovers.empty());
  }
  SUBCASE("two triangles joined by a bridge, k=2") {
    Graph g = Graph::from_edges(
        6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}});
    Decomposition d = decompose_kecc(g, 2);
    REQUIRE(d.components.size() == 2);
    CHECK(d.components[0].members() == std::vector<int>{0, 1, 2});
    CHECK(d.components[1].members() == std::vector<int>{3, 4, 5});
  }
  SUBCASE("K4 at k=4 yields only leftovers") {
    Decomposition d = decompose_kecc(complete(4), 4);
    CHECK(d.components.empty());
    CHECK(d.leftovers.size() == 4);
  }
  SUBCASE("k=1 gives connected components of size >= 2") {
    Graph g = Graph::from_edges(5, {{0, 1}, {2, 3}});
    Decomposition d = decompose_kecc(g, 1);
    REQUIRE(d.components.size() == 2);
    CHECK(d.leftovers.members() == std::vector<int>{4});
  }
}

TEST_CASE("decompose_kecc matches exhaustive maximal sets and nests in k") {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 4 + static_cast<int>(rng() % 6);
    Graph g = random_gnp(n, 0.5, rng);
    std::vector<Decomposition> by_k;
    for (int k = 2; k <= 3; ++k) {
      Decomposition d = decompose_kecc(g, k);
      std::vector<std::vector<int>> got;
      for (const auto& c : d.components) {
        got.push_back(c.members());
        InducedSubgraph sub = induced_subgraph(g, c);
        CHECK(edge_connectivity_at_least(sub.graph, k));
      }
      std::sort(got.begin(), got.end());
      CHECK(got == brute_force_kecc(g, k));
      by_k.push_back(std::move(d));
    }
    // every k=3 component is inside some k=2 component
    for (const auto& c3 : by_k[1].components) {
      bool nested = false;
      for (const auto& c2 : by_k[0].components) {
        bool inside = true;
        for (int v : c3.members()) inside &= c2.contains(v);
        nested |= inside;
      }
      CHECK(nested);
    }
  }
}
