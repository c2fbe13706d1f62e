#ifndef DWC_ORACLE_HPP
#define DWC_ORACLE_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "dwc/graph.hpp"

namespace dwc {

// Enumeration limits: the brute-force routines refuse anything larger.
struct OracleBudget {
  int max_subset_vertices = 15;
  int max_cut_vertices = 12;
};

struct BruteForceOutcome {
  bool has_solution = false;
  int objective = -1;
  std::vector<int> nodes;
};

// Exhaustive optimum of the dual problem: maximize min_t min-deg_{H_t}(S)
// over subsets S (|S| >= 2) with G[S] k-edge-connected. Connectivity is
// certified by enumerating every bipartition of S, independent of the
// connectivity module. A single-vertex input returns that vertex.
BruteForceOutcome brute_force_dual_dwc(const Graph& g,
                                       const std::vector<Graph>& layers, int k,
                                       const OracleBudget& budget = {});

// Minimum over all 2^(n-1)-1 bipartitions of the crossing-edge count.
std::int64_t brute_force_min_cut(const Graph& g, const OracleBudget& budget = {});

// Exhaustive BFF-MM optimum: max over nonempty S of min_t min-deg_{H_t}(S).
int brute_force_bff_mm(const std::vector<Graph>& layers,
                       const OracleBudget& budget = {});

// Exhaustive BFF-AA optimum of d_G(S)+d_H(S), returned as the unreduced
// fraction (2*(e_G(S)+e_H(S)), |S|) of a maximizer.
std::pair<std::int64_t, std::int64_t> brute_force_bff_aa(
    const Graph& g, const Graph& h, const OracleBudget& budget = {});

}  // namespace dwc

#endif  // DWC_ORACLE_HPP
