#include <doctest.h>

#include <bit>
#include <random>

#include "dwc/oracle.hpp"
#include "dwc/peeling.hpp"
#include "test_util.hpp"

using namespace dwc;
using namespace dwc::testutil;

namespace {

// union of all subsets of s with min internal degree >= c (exhaustive kcore)
std::vector<int> brute_force_core(const Graph& g, const VertexSet& s, int c) {
  int n = g.num_vertices();
  std::uint32_t best = 0;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    bool inside = true;
    for (int v = 0; v < n && inside; ++v)
      if (mask >> v & 1) inside = s.contains(v);
    if (!inside) continue;
    bool ok = true;
    for (int v = 0; v < n && ok; ++v) {
      if (!(mask >> v & 1)) continue;
      int d = 0;
      for (int w : g.neighbors(v)) d += mask >> w & 1;
      ok = d >= c;
    }
    if (ok) best |= mask;
  }
  std::vector<int> members;
  for (int v = 0; v < n; ++v)
    if (best >> v & 1) members.push_back(v);
  return members;
}

}  // namespace

TEST_CASE("kcore examples") {
  CHECK(kcore(cycle(5), VertexSet::full(5), 2) == VertexSet::full(5));
  CHECK(kcore(star(5), VertexSet::full(6), 2).empty());
  Graph k4_pendant = Graph::from_edges(
      5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}});
  CHECK(kcore(k4_pendant, VertexSet::full(5), 3).members() ==
        std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("kcore equals the exhaustive maximal core on random graphs") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 4 + static_cast<int>(rng() % 6);
    Graph g = random_gnp(n, 0.45, rng);
    std::vector<int> members;
    for (int v = 0; v < n; ++v)
      if (rng() % 4) members.push_back(v);
    VertexSet s(n, members);
    int c = 1 + static_cast<int>(rng() % 3);
    VertexSet core = kcore(g, s, c);
    CHECK(core.members() == brute_force_core(g, s, c));
    if (!core.empty()) CHECK(min_degree(g, core).first >= c);
  }
}

TEST_CASE("min_degree_vertex_multi") {
  using Pick = std::tuple<int, int, int>;
  CHECK(min_degree_vertex_multi({complete(4)}, VertexSet::full(4)) ==
        Pick{0, 0, 3});
  CHECK(min_degree_vertex_multi({complete(4), star(3)}, VertexSet::full(4)) ==
        Pick{1, 1, 1});
  CHECK(min_degree_vertex_multi({cycle(4), cycle(4)}, VertexSet::full(4)) ==
        Pick{0, 0, 2});
}

TEST_CASE("bff_mm_peel examples") {
  SUBCASE("two K4 layers keep everything") {
    auto [nodes, obj] = bff_mm_peel({complete(4), complete(4)});
    CHECK(obj == 3);
    CHECK(nodes == VertexSet::full(4));
  }
  SUBCASE("pendant vertex is dropped") {
    Graph k4_pendant = Graph::from_edges(
        5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}});
    auto [nodes, obj] = bff_mm_peel({k4_pendant, complete(5)});
    CHECK(obj == 3);
    CHECK(nodes.members() == std::vector<int>{0, 1, 2, 3});
  }
  SUBCASE("zero objective keeps the largest (full) prefix") {
    Graph tri_iso = Graph::from_edges(4, {{0, 1}, {1, 2}, {0, 2}});
    Graph star3 = Graph::from_edges(4, {{3, 0}, {3, 1}, {3, 2}});
    auto [nodes, obj] = bff_mm_peel({tri_iso, star3});
    CHECK(obj == 0);
    CHECK(nodes == VertexSet::full(4));
  }
}

TEST_CASE("bff_mm_peel matches the exhaustive optimum") {
  std::mt19937_64 rng(123);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 3 + static_cast<int>(rng() % 8);
    std::vector<Graph> layers;
    int t_count = 1 + static_cast<int>(rng() % 2);
    for (int t = 0; t < t_count; ++t) layers.push_back(random_gnp(n, 0.5, rng));
    auto [nodes, obj] = bff_mm_peel(layers);
    CHECK(obj == brute_force_bff_mm(layers));
    CHECK(multi_min_degree(layers, nodes) == obj);
  }
}

TEST_CASE("peeling trace is a permutation and reproduces the objective") {
  std::mt19937_64 rng(321);
  Graph g = random_gnp(9, 0.5, rng);
  Graph h = random_gnp(9, 0.5, rng);
  PeelingTrace trace;
  bff_mm_peel({g, h}, trace);
  REQUIRE(trace.removals.size() == 9);
  std::vector<char> seen(9, 0);
  for (auto [v, d] : trace.removals) {
    CHECK(!seen[v]);
    seen[v] = 1;
  }
  // prefix objectives recomputable from the removal order
  std::vector<int> remaining(9);
  std::iota(remaining.begin(), remaining.end(), 0);
  for (std::size_t i = 0; i < trace.removals.size(); ++i) {
    CHECK(trace.prefix_objectives[i] ==
          multi_min_degree({g, h}, VertexSet(9, remaining)));
    std::erase(remaining, trace.removals[i].first);
  }
}
