#ifndef DWC_GENERATORS_HPP
#define DWC_GENERATORS_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "dwc/graph.hpp"

namespace dwc {

// Stochastic block model: block_sizes[b] vertices per block, intra_probs[b]
// for pairs inside block b, inter_prob across blocks. Same seed, same graph,
// on every platform (counter-based hashing per vertex pair).
struct SbmSpec {
  std::vector<int> block_sizes;
  std::vector<double> intra_probs;
  double inter_prob = 0.0;
  std::uint64_t seed = 0;
};

std::pair<Graph, std::vector<int>> gen_sbm(const SbmSpec& spec);

// The synthetic ranging-connectivity instance: 5 blocks of 50 nodes;
// G intra-block density 0.1*i with sparse 2e-4 cross edges, H intra-block
// density 0.1+0.1*(5-i) with 0.1 cross edges.
struct PaperSbmPair {
  DualInstance instance;
  std::vector<int> blocks;  // block index per vertex, 0-based
};

PaperSbmPair gen_paper_sbm_pair(std::uint64_t seed);

// Erdos-Renyi G(n, p), seed-deterministic.
Graph gen_gnp(int n, double p, std::uint64_t seed);

}  // namespace dwc

#endif  // DWC_GENERATORS_HPP
