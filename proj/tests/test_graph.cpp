#include <doctest.h>

#include <numeric>
#include <random>
#include <stdexcept>

#include "dwc/graph.hpp"
#include "test_util.hpp"

using namespace dwc;
using namespace dwc::testutil;

TEST_CASE("from_edges dedups and rejects self-loops") {
  Graph g = Graph::from_edges(3, {{0, 1}, {1, 0}, {1, 2}});
  CHECK(g.num_edges() == 2);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(2, 1));
  CHECK(!g.has_edge(0, 2));
  CHECK_THROWS_AS(Graph::from_edges(2, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges(2, {{0, 5}}), std::invalid_argument);
}

TEST_CASE("induced_subgraph") {
  SUBCASE("K4 restricted to a triple is K3") {
    auto [sub, map] = induced_subgraph(complete(4), VertexSet(4, {0, 1, 2}));
    CHECK(sub.num_vertices() == 3);
    CHECK(sub.num_edges() == 3);
    CHECK(map == std::vector<int>{0, 1, 2});
  }
  SUBCASE("empty set yields the empty graph") {
    auto [sub, map] = induced_subgraph(complete(4), VertexSet(4, {}));
    CHECK(sub.num_vertices() == 0);
    CHECK(sub.num_edges() == 0);
  }
  SUBCASE("C5 on {0,1,3} keeps only the adjacent pair") {
    auto [sub, map] = induced_subgraph(cycle(5), VertexSet(5, {0, 1, 3}));
    CHECK(sub.num_edges() == 1);
    CHECK(sub.has_edge(0, 1));  // remapped {0,1}
  }
}

TEST_CASE("min_degree") {
  CHECK(min_degree(complete(4), VertexSet::full(4)) == std::pair{3, 0});
  CHECK(min_degree(star(5), VertexSet::full(6)) == std::pair{1, 1});
  CHECK(min_degree(cycle(5), VertexSet(5, {0, 1, 3})) == std::pair{0, 3});
  CHECK_THROWS_AS(min_degree(complete(3), VertexSet(3, {})), std::invalid_argument);
}

TEST_CASE("degree_sequence") {
  CHECK(degree_sequence(complete(3), VertexSet::full(3)) == std::vector<int>{2, 2, 2});
  CHECK(degree_sequence(path(3), VertexSet::full(3)) == std::vector<int>{1, 2, 1});
  CHECK(degree_sequence(path(3), VertexSet(3, {0, 2})) == std::vector<int>{0, 0});
}

TEST_CASE("induced degree sum equals twice the induced edge count") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = random_gnp(10, 0.4, rng);
    std::vector<int> members;
    for (int v = 0; v < 10; ++v)
      if (rng() % 2) members.push_back(v);
    VertexSet s(10, members);
    auto degs = degree_sequence(g, s);
    auto sum = std::accumulate(degs.begin(), degs.end(), std::int64_t{0});
    CHECK(sum == 2 * induced_subgraph(g, s).graph.num_edges());
    if (!s.empty())
      CHECK(min_degree(g, s).first ==
            *std::min_element(degs.begin(), degs.end()));
  }
}

TEST_CASE("inducing on the full vertex set is the identity") {
  std::mt19937_64 rng(8);
  Graph g = random_gnp(12, 0.3, rng);
  auto [sub, map] = induced_subgraph(g, VertexSet::full(12));
  CHECK(sub.edges() == g.edges());
}
