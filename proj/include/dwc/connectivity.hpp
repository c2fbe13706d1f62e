#ifndef DWC_CONNECTIVITY_HPP
#define DWC_CONNECTIVITY_HPP

#include <cstdint>
#include <vector>

#include "dwc/graph.hpp"

namespace dwc {

// A global cut: number of crossing edges and one proper side of the
// bipartition.
struct CutResult {
  std::int64_t value = 0;
  VertexSet side;
};

// Maximal k-edge-connected components (size >= 2) plus the vertices that
// belong to none of them.
struct Decomposition {
  std::vector<VertexSet> components;
  VertexSet leftovers;
};

// Exact global minimum edge cut of a connected graph with n >= 2.
// Deterministic: Stoer-Wagner contraction order with ascending-id
// tie-breaking, after a sparse-certificate contraction pass.
CutResult global_min_cut(const Graph& g);

// True iff g is k-edge-connected. By convention a single-vertex graph is
// k-edge-connected for every k.
bool edge_connectivity_at_least(const Graph& g, int k);

bool is_connected(const Graph& g);

// Connected components as sorted vertex lists, ordered by smallest member.
std::vector<std::vector<int>> connected_components(const Graph& g);

// Maximum s-t flow with per-edge capacities aligned to g.edges().
// Equals the minimum s-t cut capacity; integral for integral capacities.
std::int64_t max_flow(const Graph& g, int source, int sink,
                      const std::vector<std::int64_t>& capacities);

// Unit-capacity overload: the number of edge-disjoint s-t paths.
std::int64_t max_flow(const Graph& g, int source, int sink);

// Recursive min-cut decomposition into maximal k-edge-connected components.
// Singletons are reported as leftovers, never as components.
Decomposition decompose_kecc(const Graph& g, int k);

// Directed flow network for callers that need a custom construction
// (e.g. the densest-subgraph reduction).
class FlowNetwork {
 public:
  explicit FlowNetwork(int n) : head_(n, -1), n_(n) {}

  void add_edge(int u, int v, std::int64_t cap, std::int64_t rev_cap = 0);
  std::int64_t max_flow(int s, int t);
  // After max_flow: true iff v is reachable from s in the residual network,
  // i.e. v lies on the source side of a minimum cut.
  std::vector<char> source_side(int s) const;

 private:
  struct Arc {
    int to;
    int next;
    std::int64_t cap;
  };
  bool bfs_levels(int s, int t);
  std::int64_t dfs_push(int v, int t, std::int64_t limit);

  std::vector<Arc> arcs_;
  std::vector<int> head_;
  std::vector<int> level_;
  std::vector<int> iter_;
  int n_;
};

namespace detail {

// Minimum cut bounded by `bound`: the result is exact whenever its value is
// < bound; a value >= bound only certifies that lambda(g) >= bound.
// Contracts edges outside a `bound`-forest sparse certificate first (such
// edges cross no cut of value < bound), then runs Stoer-Wagner on the
// contracted multigraph.
CutResult min_cut_bounded(const Graph& g, std::int64_t bound);

}  // namespace detail

}  // namespace dwc

#endif  // DWC_CONNECTIVITY_HPP
