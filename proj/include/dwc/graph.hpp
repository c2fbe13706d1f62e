#ifndef DWC_GRAPH_HPP
#define DWC_GRAPH_HPP

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace dwc {

// Simple, unweighted, undirected graph over dense vertex ids [0, n).
// Immutable after construction; adjacency is CSR with sorted neighbor lists.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : n_(n), adj_ptr_(n + 1, 0) {}

  // Builds a graph from an edge list. Duplicate edges are collapsed.
  // Self-loops are rejected (throws std::invalid_argument).
  static Graph from_edges(int n, std::vector<std::pair<int, int>> edges);

  int num_vertices() const { return n_; }
  std::int64_t num_edges() const { return static_cast<std::int64_t>(edges_.size()); }

  std::span<const int> neighbors(int v) const {
    return {adj_list_.data() + adj_ptr_[v], adj_list_.data() + adj_ptr_[v + 1]};
  }
  int degree(int v) const { return adj_ptr_[v + 1] - adj_ptr_[v]; }
  bool has_edge(int u, int v) const;

  // Edges as unordered pairs (u < v), sorted lexicographically.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

 private:
  int n_ = 0;
  std::vector<int> adj_ptr_{0};
  std::vector<int> adj_list_;
  std::vector<std::pair<int, int>> edges_;
};

// Subset of the vertices of a host graph with O(1) membership tests.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(int universe, std::vector<int> members);
  static VertexSet full(int universe);

  int universe() const { return universe_; }
  int size() const { return static_cast<int>(members_.size()); }
  bool empty() const { return members_.empty(); }
  bool contains(int v) const { return mask_[v] != 0; }

  // Members in ascending order.
  const std::vector<int>& members() const { return members_; }

  bool operator==(const VertexSet& other) const {
    return universe_ == other.universe_ && members_ == other.members_;
  }

 private:
  int universe_ = 0;
  std::vector<int> members_;
  std::vector<char> mask_;
};

// A pair (G, H) or (G, [H_1..H_T]) over a shared vertex universe.
// labels[v] is the external name of vertex v in every layer.
struct DualInstance {
  Graph g;
  std::vector<Graph> layers;  // nonempty; layers[0] = H in the two-graph case
  std::vector<std::string> labels;

  const Graph& h() const { return layers.front(); }
  int num_vertices() const { return g.num_vertices(); }
};

struct InducedSubgraph {
  Graph graph;
  std::vector<int> to_original;  // new id i -> original id to_original[i]
};

// G[S] with vertices remapped to [0, |S|); to_original[i] = i-th member of s.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

// Minimum induced degree over s and the smallest-id vertex achieving it.
// s must be nonempty.
std::pair<int, int> min_degree(const Graph& g, const VertexSet& s);

// Induced degree |adj(v) ∩ s| for every v in s, in member order.
std::vector<int> degree_sequence(const Graph& g, const VertexSet& s);

}  // namespace dwc

#endif  // DWC_GRAPH_HPP
