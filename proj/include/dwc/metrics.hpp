#ifndef DWC_METRICS_HPP
#define DWC_METRICS_HPP

#include <cstdint>

#include "dwc/graph.hpp"

namespace dwc {

// Degree/distance/triangle bundle for an induced subgraph. Path statistics
// (diameter, avg shortest path) are over the largest connected component when
// the subgraph is disconnected; averages keep their exact integer sums.
struct SubgraphStats {
  int nodes = 0;
  int min_deg = 0;
  int max_deg = 0;
  std::int64_t edges = 0;
  int diameter = 0;
  std::int64_t triangles = 0;
  std::int64_t dist_sum = 0;    // over unordered pairs in the largest component
  std::int64_t dist_pairs = 0;
  bool connected = false;
  int largest_component = 0;

  double avg_degree() const {
    return nodes == 0 ? 0.0 : 2.0 * static_cast<double>(edges) / nodes;
  }
  double avg_shortest_path() const {
    return dist_pairs == 0 ? 0.0
                           : static_cast<double>(dist_sum) / static_cast<double>(dist_pairs);
  }
};

// Full statistic bundle for G[s]; s must be nonempty.
SubgraphStats stats(const Graph& g, const VertexSet& s);

// Number of vertex triples inducing 3 edges inside s, counted once each.
std::int64_t triangle_count(const Graph& g, const VertexSet& s);

}  // namespace dwc

#endif  // DWC_METRICS_HPP
