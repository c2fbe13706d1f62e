#ifndef DWC_PEELING_HPP
#define DWC_PEELING_HPP

#include <tuple>
#include <utility>
#include <vector>

#include "dwc/graph.hpp"

namespace dwc {

// Full minimum-degree peeling record: removals[i] is the vertex deleted at
// step i together with its cross-layer minimum degree at that moment, and
// prefix_objectives[i] is the objective (min over layers of the induced
// minimum degree) of the set still present before step i.
struct PeelingTrace {
  std::vector<std::pair<int, int>> removals;
  std::vector<int> prefix_objectives;
};

// The c-core of g restricted to s: the unique maximal T subseteq s where every
// vertex has at least c neighbors inside T. May be empty.
VertexSet kcore(const Graph& g, const VertexSet& s, int c);

// Multi-layer core: every vertex keeps degree >= c inside T in every layer.
VertexSet kcore_multi(const std::vector<Graph>& layers, const VertexSet& s, int c);

// The vertex minimizing min_t deg_{H_t[s]}(v); ties broken by smallest layer
// index, then smallest vertex id. Returns (vertex, layer index, degree).
std::tuple<int, int, int> min_degree_vertex_multi(const std::vector<Graph>& layers,
                                                  const VertexSet& s);

// min over layers of the induced minimum degree of s (s nonempty).
int multi_min_degree(const std::vector<Graph>& layers, const VertexSet& s);

// Exact BFF-MM: greedy peeling by min_degree_vertex_multi, returning the
// prefix that maximizes min_t delta_{H_t}(S). Ties favor the largest prefix.
std::pair<VertexSet, int> bff_mm_peel(const std::vector<Graph>& layers);

// Same, also exposing the full trace.
std::pair<VertexSet, int> bff_mm_peel(const std::vector<Graph>& layers,
                                      PeelingTrace& trace);

}  // namespace dwc

#endif  // DWC_PEELING_HPP
