#ifndef DWC_SOLVER_HPP
#define DWC_SOLVER_HPP

#include <optional>
#include <string>
#include <vector>

#include "dwc/graph.hpp"

namespace dwc {

struct SolveStats {
  std::int64_t peel_steps = 0;
  std::int64_t decompositions = 0;
  int max_depth = 0;
};

struct Solution {
  VertexSet nodes;              // in the instance's id space
  int objective = 0;            // min over layers of min-deg in H_t[S]
  int achieved_connectivity = 0;  // exact lambda(G[S]); 0 for a singleton
  int k = 0;
  std::string algorithm;
  SolveStats stats;
};

// Empty optional means NO SOLUTION: no k-edge-connected vertex set of
// size >= 2 exists (and the input had >= 2 vertices).
using SolveOutcome = std::optional<Solution>;

// Literal form of the recursive max-min-degree algorithm: decompose G into
// maximal k-edge-connected components, peel the minimum-H-degree vertex one
// at a time inside each, keep the best. Exact. Requires a single layer.
SolveOutcome dual_dwc_naive(const DualInstance& instance, int k);

// Fast form: after removing the minimum-degree vertex of degree d, restricts
// to the (d+1)-core across all layers before re-testing connectivity.
// Same optimal objective as the naive form; supports T >= 1 layers.
SolveOutcome dual_dwc_fast(const DualInstance& instance, int k);

// One solve per k over the already-loaded instance, in input order.
std::vector<std::pair<int, SolveOutcome>> sweep(const DualInstance& instance,
                                                const std::vector<int>& k_values,
                                                bool fast = true);

}  // namespace dwc

#endif  // DWC_SOLVER_HPP
