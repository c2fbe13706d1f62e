#ifndef DWC_BASELINES_HPP
#define DWC_BASELINES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dwc/graph.hpp"

namespace dwc {

struct BaselineResult {
  std::string method;
  VertexSet nodes;
  // objective as an exact fraction; den == 1 for the integer objectives
  std::int64_t objective_num = 0;
  std::int64_t objective_den = 1;

  double objective() const {
    return static_cast<double>(objective_num) / static_cast<double>(objective_den);
  }
};

// BFF-MM via exact greedy peeling over the two layers.
BaselineResult bff_mm(const Graph& g, const Graph& h);

// Exact maximizer of d_G(S)+d_H(S): maximum-density subgraph of the
// multigraph union via max-flow with binary search over candidate densities.
// Requires at least one edge in the union.
BaselineResult bff_aa(const Graph& g, const Graph& h);

// Best-effort k-CCO: a maximal S with G[S] a connected k-core and H[S]
// connected, by fixed-point refinement. Largest such S; ties by smallest
// lexicographic vertex set. Empty optional when the fixed point is empty.
std::optional<BaselineResult> kcco(const Graph& g, const Graph& h, int k);

// Exact edge connectivity of G restricted to each result's node set
// (0 if disconnected or singleton).
std::vector<std::pair<std::string, int>> connectivity_profile(
    const std::vector<BaselineResult>& results, const Graph& g);

}  // namespace dwc

#endif  // DWC_BASELINES_HPP
