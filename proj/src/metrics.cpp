#include "dwc/metrics.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

#include "dwc/connectivity.hpp"

namespace dwc {

namespace {

// common neighbors of each edge's endpoints above the higher endpoint,
// on a graph with sorted adjacency
std::int64_t triangles_of(const Graph& g) {
  std::int64_t count = 0;
  for (auto [u, v] : g.edges()) {
    auto nu = g.neighbors(u);
    auto nv = g.neighbors(v);
    auto iu = std::upper_bound(nu.begin(), nu.end(), v);
    auto iv = std::upper_bound(nv.begin(), nv.end(), v);
    while (iu != nu.end() && iv != nv.end()) {
      if (*iu < *iv) {
        ++iu;
      } else if (*iv < *iu) {
        ++iv;
      } else {
        ++count;
        ++iu;
        ++iv;
      }
    }
  }
  return count;
}

}  // namespace

SubgraphStats stats(const Graph& g, const VertexSet& s) {
  if (s.empty()) throw std::invalid_argument("stats: empty vertex set");
  InducedSubgraph sub = induced_subgraph(g, s);
  const Graph& h = sub.graph;
  int n = h.num_vertices();

  SubgraphStats out;
  out.nodes = n;
  out.edges = h.num_edges();
  out.min_deg = h.degree(0);
  out.max_deg = h.degree(0);
  for (int v = 1; v < n; ++v) {
    out.min_deg = std::min(out.min_deg, h.degree(v));
    out.max_deg = std::max(out.max_deg, h.degree(v));
  }
  out.triangles = triangles_of(h);

  auto comps = connected_components(h);
  out.connected = comps.size() == 1;
  const std::vector<int>* largest = &comps[0];
  for (const auto& c : comps)
    if (c.size() > largest->size()) largest = &c;
  out.largest_component = static_cast<int>(largest->size());

  // BFS from every vertex of the largest component
  std::vector<int> dist(n);
  for (int src : *largest) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[src] = 0;
    std::queue<int> q;
    q.push(src);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : h.neighbors(v)) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          q.push(w);
        }
      }
    }
    for (int v : *largest) {
      if (v > src) {  // unordered pairs once
        out.dist_sum += dist[v];
        ++out.dist_pairs;
        out.diameter = std::max(out.diameter, dist[v]);
      }
    }
  }
  return out;
}

std::int64_t triangle_count(const Graph& g, const VertexSet& s) {
  return triangles_of(induced_subgraph(g, s).graph);
}

}  // namespace dwc
