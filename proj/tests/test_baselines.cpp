#include <doctest.h>

#include <random>

#include "dwc/baselines.hpp"
#include "dwc/connectivity.hpp"
#include "dwc/oracle.hpp"
#include "test_util.hpp"

using namespace dwc;
using namespace dwc::testutil;

TEST_CASE("bff_mm examples") {
  BaselineResult r = bff_mm(complete(4), complete(4));
  CHECK(r.objective_num == 3);
  CHECK(r.objective_den == 1);
  CHECK(r.nodes == VertexSet::full(4));

  Graph k4_pendant = Graph::from_edges(
      5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}});
  BaselineResult r2 = bff_mm(k4_pendant, complete(5));
  CHECK(r2.objective_num == 3);
  CHECK(r2.nodes.members() == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("bff_aa examples") {
  BaselineResult r = bff_aa(complete(4), complete(4));
  CHECK(r.objective() == doctest::Approx(6.0));
  CHECK(r.nodes.size() == 4);

  // the K4 beats the K4-plus-pendant in average degree
  Graph k4_pendant = Graph::from_edges(
      5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}});
  BaselineResult r2 = bff_aa(k4_pendant, k4_pendant);
  CHECK(r2.objective() == doctest::Approx(6.0));
  CHECK(r2.nodes.members() == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("bff_mm matches the exhaustive optimum on random pairs") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 120; ++trial) {
    int n = 3 + static_cast<int>(rng() % 9);
    Graph g = random_gnp(n, 0.5, rng);
    Graph h = random_gnp(n, 0.5, rng);
    BaselineResult r = bff_mm(g, h);
    CHECK(r.objective_num == brute_force_bff_mm({g, h}));
  }
}

TEST_CASE("bff_aa matches the exhaustive optimum on random pairs") {
  std::mt19937_64 rng(18);
  for (int trial = 0; trial < 120; ++trial) {
    int n = 3 + static_cast<int>(rng() % 8);
    Graph g = random_gnp(n, 0.5, rng);
    Graph h = random_gnp(n, 0.5, rng);
    if (g.num_edges() + h.num_edges() == 0) continue;
    BaselineResult r = bff_aa(g, h);
    auto [num, den] = brute_force_bff_aa(g, h);
    // compare the fractions exactly: r.num/r.den == num/den
    CHECK(r.objective_num * den == num * r.objective_den);
    // the returned set realizes its claimed value
    VertexSet s = r.nodes;
    std::int64_t e_in = 0;
    for (auto [u, v] : g.edges()) e_in += s.contains(u) && s.contains(v);
    for (auto [u, v] : h.edges()) e_in += s.contains(u) && s.contains(v);
    CHECK(r.objective_num == 2 * e_in);
    CHECK(r.objective_den == s.size());
  }
}

TEST_CASE("kcco examples") {
  SUBCASE("K4 in both layers is its own fixed point") {
    auto r = kcco(complete(4), complete(4), 3);
    REQUIRE(r.has_value());
    CHECK(r->nodes == VertexSet::full(4));
  }
  SUBCASE("no 3-core anywhere") {
    CHECK(!kcco(cycle(5), cycle(5), 3).has_value());
  }
  SUBCASE("bridged K4s at k=3: every vertex already has degree >= 3") {
    auto r = kcco(two_k4_bridge(), complete(8), 3);
    REQUIRE(r.has_value());
    CHECK(r->nodes == VertexSet::full(8));
  }
  SUBCASE("bridged K4s at k=4 keep nothing") {
    CHECK(!kcco(two_k4_bridge(), complete(8), 4).has_value());
  }
}

TEST_CASE("kcco results satisfy their invariants") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 80; ++trial) {
    int n = 4 + static_cast<int>(rng() % 8);
    Graph g = random_gnp(n, 0.5, rng);
    Graph h = random_gnp(n, 0.5, rng);
    int k = 1 + static_cast<int>(rng() % 3);
    auto r = kcco(g, h, k);
    if (!r) continue;
    const VertexSet& s = r->nodes;
    CHECK(min_degree(g, s).first >= k);
    InducedSubgraph gs = induced_subgraph(g, s);
    InducedSubgraph hs = induced_subgraph(h, s);
    CHECK(is_connected(gs.graph));
    CHECK(is_connected(hs.graph));
  }
}

TEST_CASE("connectivity_profile") {
  std::vector<BaselineResult> results;
  results.push_back({"a", VertexSet(8, {0, 1, 2, 3}), 0, 1});
  results.push_back({"b", VertexSet(8, {0, 7}), 0, 1});
  results.push_back({"c", VertexSet(8, {0}), 0, 1});
  auto profile = connectivity_profile(results, two_k4_bridge());
  REQUIRE(profile.size() == 3);
  CHECK(profile[0] == std::pair{std::string("a"), 3});
  CHECK(profile[1] == std::pair{std::string("b"), 0});  // disconnected
  CHECK(profile[2] == std::pair{std::string("c"), 0});  // singleton
}
