#include "dwc/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace dwc {

Graph Graph::from_edges(int n, std::vector<std::pair<int, int>> edges) {
  for (auto& [u, v] : edges) {
    if (u == v) throw std::invalid_argument("self-loop in edge list");
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::invalid_argument("vertex id out of range");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  Graph g(n);
  g.edges_ = std::move(edges);
  std::vector<int> deg(n, 0);
  for (auto [u, v] : g.edges_) {
    ++deg[u];
    ++deg[v];
  }
  for (int v = 0; v < n; ++v) g.adj_ptr_[v + 1] = g.adj_ptr_[v] + deg[v];
  g.adj_list_.resize(g.adj_ptr_[n]);
  std::vector<int> pos(g.adj_ptr_.begin(), g.adj_ptr_.end() - 1);
  for (auto [u, v] : g.edges_) {
    g.adj_list_[pos[u]++] = v;
    g.adj_list_[pos[v]++] = u;
  }
  for (int v = 0; v < n; ++v) {
    auto nb = g.adj_list_.begin();
    std::sort(nb + g.adj_ptr_[v], nb + g.adj_ptr_[v + 1]);
  }
  return g;
}

bool Graph::has_edge(int u, int v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

VertexSet::VertexSet(int universe, std::vector<int> members)
    : universe_(universe), members_(std::move(members)), mask_(universe, 0) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (int v : members_) {
    if (v < 0 || v >= universe_)
      throw std::invalid_argument("vertex id outside universe");
    mask_[v] = 1;
  }
}

VertexSet VertexSet::full(int universe) {
  std::vector<int> all(universe);
  for (int v = 0; v < universe; ++v) all[v] = v;
  return VertexSet(universe, std::move(all));
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  std::vector<int> to_new(g.num_vertices(), -1);
  const auto& mem = s.members();
  for (int i = 0; i < s.size(); ++i) to_new[mem[i]] = i;

  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < s.size(); ++i) {
    for (int w : g.neighbors(mem[i])) {
      if (w > mem[i] && to_new[w] >= 0) edges.emplace_back(i, to_new[w]);
    }
  }
  return {Graph::from_edges(s.size(), std::move(edges)), mem};
}

std::pair<int, int> min_degree(const Graph& g, const VertexSet& s) {
  if (s.empty()) throw std::invalid_argument("min_degree on empty set");
  int best = -1, arg = -1;
  for (int v : s.members()) {
    int d = 0;
    for (int w : g.neighbors(v)) d += s.contains(w);
    if (best < 0 || d < best) {
      best = d;
      arg = v;
    }
  }
  return {best, arg};
}

std::vector<int> degree_sequence(const Graph& g, const VertexSet& s) {
  std::vector<int> out;
  out.reserve(s.size());
  for (int v : s.members()) {
    int d = 0;
    for (int w : g.neighbors(v)) d += s.contains(w);
    out.push_back(d);
  }
  return out;
}

}  // namespace dwc
