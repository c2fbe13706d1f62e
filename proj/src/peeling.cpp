#include "dwc/peeling.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace dwc {

VertexSet kcore(const Graph& g, const VertexSet& s, int c) {
  return kcore_multi({g}, s, c);
}

VertexSet kcore_multi(const std::vector<Graph>& layers, const VertexSet& s, int c) {
  if (layers.empty()) throw std::invalid_argument("kcore_multi: no layers");
  int n = s.universe();
  int t_count = static_cast<int>(layers.size());
  std::vector<char> alive(n, 0);
  for (int v : s.members()) alive[v] = 1;

  // deg[t][v]: induced degree of v in layer t
  std::vector<std::vector<int>> deg(t_count, std::vector<int>(n, 0));
  std::vector<int> kill;
  for (int t = 0; t < t_count; ++t) {
    for (int v : s.members()) {
      int d = 0;
      for (int w : layers[t].neighbors(v)) d += alive[w];
      deg[t][v] = d;
    }
  }
  for (int v : s.members()) {
    for (int t = 0; t < t_count; ++t) {
      if (deg[t][v] < c) {
        kill.push_back(v);
        break;
      }
    }
  }
  while (!kill.empty()) {
    int v = kill.back();
    kill.pop_back();
    if (!alive[v]) continue;
    alive[v] = 0;
    for (int t = 0; t < t_count; ++t) {
      for (int w : layers[t].neighbors(v)) {
        if (alive[w] && --deg[t][w] == c - 1) kill.push_back(w);
      }
    }
  }
  std::vector<int> out;
  for (int v : s.members())
    if (alive[v]) out.push_back(v);
  return VertexSet(n, std::move(out));
}

std::tuple<int, int, int> min_degree_vertex_multi(const std::vector<Graph>& layers,
                                                  const VertexSet& s) {
  if (s.empty()) throw std::invalid_argument("min_degree_vertex_multi: empty set");
  // ties broken lexicographically on (degree, layer, vertex)
  int best_v = -1, best_t = -1, best_d = std::numeric_limits<int>::max();
  for (int t = 0; t < static_cast<int>(layers.size()); ++t) {
    for (int v : s.members()) {
      int d = 0;
      for (int w : layers[t].neighbors(v)) d += s.contains(w);
      if (d < best_d) {
        best_d = d;
        best_t = t;
        best_v = v;
      }
    }
  }
  return {best_v, best_t, best_d};
}

int multi_min_degree(const std::vector<Graph>& layers, const VertexSet& s) {
  return std::get<2>(min_degree_vertex_multi(layers, s));
}

std::pair<VertexSet, int> bff_mm_peel(const std::vector<Graph>& layers,
                                      PeelingTrace& trace) {
  if (layers.empty()) throw std::invalid_argument("bff_mm_peel: no layers");
  int n = layers.front().num_vertices();
  if (n == 0) throw std::invalid_argument("bff_mm_peel: empty graph");
  int t_count = static_cast<int>(layers.size());

  std::vector<char> alive(n, 1);
  std::vector<std::vector<int>> deg(t_count, std::vector<int>(n, 0));
  for (int t = 0; t < t_count; ++t)
    for (int v = 0; v < n; ++v) deg[t][v] = layers[t].degree(v);

  trace.removals.clear();
  trace.prefix_objectives.clear();
  std::vector<std::pair<int, int>> order;  // removal order mirrors trace

  for (int step = 0; step < n; ++step) {
    // same (degree, layer, vertex) tie rule as min_degree_vertex_multi
    int best_v = -1, best_d = std::numeric_limits<int>::max();
    for (int t = 0; t < t_count; ++t) {
      for (int v = 0; v < n; ++v) {
        if (alive[v] && deg[t][v] < best_d) {
          best_d = deg[t][v];
          best_v = v;
        }
      }
    }
    trace.prefix_objectives.push_back(best_d);  // objective of the current set
    trace.removals.emplace_back(best_v, best_d);
    alive[best_v] = 0;
    for (int t = 0; t < t_count; ++t)
      for (int w : layers[t].neighbors(best_v))
        if (alive[w]) --deg[t][w];
  }

  // largest prefix attaining the maximum objective
  int best_step = 0;
  for (int i = 1; i < n; ++i)
    if (trace.prefix_objectives[i] > trace.prefix_objectives[best_step])
      best_step = i;

  std::vector<char> member(n, 1);
  for (int i = 0; i < best_step; ++i) member[trace.removals[i].first] = 0;
  std::vector<int> nodes;
  for (int v = 0; v < n; ++v)
    if (member[v]) nodes.push_back(v);
  return {VertexSet(n, std::move(nodes)), trace.prefix_objectives[best_step]};
}

std::pair<VertexSet, int> bff_mm_peel(const std::vector<Graph>& layers) {
  PeelingTrace trace;
  return bff_mm_peel(layers, trace);
}

}  // namespace dwc
