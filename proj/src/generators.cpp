#include "dwc/generators.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace dwc {

namespace {

std::uint64_t mix64(std::uint64_t x) {
  // splitmix64 finalizer
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

std::uint64_t pair_hash(std::uint64_t seed, std::uint64_t stream,
                        std::uint64_t i, std::uint64_t j) {
  std::uint64_t h = mix64(seed ^ mix64(stream));
  h = mix64(h ^ (i * 0x9e3779b97f4a7c15ull));
  return mix64(h ^ j);
}

// edge present iff the top 53 hash bits fall below p on a 2^53 grid
bool pair_coin(double p, std::uint64_t seed, std::uint64_t stream, int i, int j) {
  if (p <= 0.0) return false;
  if (p >= 1.0) return true;
  auto threshold = static_cast<std::uint64_t>(std::llround(std::ldexp(p, 53)));
  return (pair_hash(seed, stream, i, j) >> 11) < threshold;
}

}  // namespace

std::pair<Graph, std::vector<int>> gen_sbm(const SbmSpec& spec) {
  if (spec.block_sizes.size() != spec.intra_probs.size())
    throw std::invalid_argument("gen_sbm: block/probability count mismatch");
  for (double p : spec.intra_probs)
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("gen_sbm: bad probability");
  if (spec.inter_prob < 0.0 || spec.inter_prob > 1.0)
    throw std::invalid_argument("gen_sbm: bad probability");

  std::vector<int> block;
  for (std::size_t b = 0; b < spec.block_sizes.size(); ++b) {
    if (spec.block_sizes[b] <= 0)
      throw std::invalid_argument("gen_sbm: block sizes must be positive");
    block.insert(block.end(), spec.block_sizes[b], static_cast<int>(b));
  }
  int n = static_cast<int>(block.size());

  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      double p = block[i] == block[j] ? spec.intra_probs[block[i]]
                                      : spec.inter_prob;
      if (pair_coin(p, spec.seed, 0, i, j)) edges.emplace_back(i, j);
    }
  }
  return {Graph::from_edges(n, std::move(edges)), std::move(block)};
}

PaperSbmPair gen_paper_sbm_pair(std::uint64_t seed) {
  SbmSpec g_spec, h_spec;
  for (int i = 1; i <= 5; ++i) {
    g_spec.block_sizes.push_back(50);
    g_spec.intra_probs.push_back(0.1 * i);
    h_spec.block_sizes.push_back(50);
    h_spec.intra_probs.push_back(0.1 + 0.1 * (5 - i));
  }
  g_spec.inter_prob = 2e-4;
  h_spec.inter_prob = 0.1;
  g_spec.seed = mix64(seed ^ 0x67u);  // independent streams per layer
  h_spec.seed = mix64(seed ^ 0x68u);

  auto [g, blocks] = gen_sbm(g_spec);
  auto [h, blocks_h] = gen_sbm(h_spec);

  PaperSbmPair out;
  out.instance.g = std::move(g);
  out.instance.layers.push_back(std::move(h));
  for (int v = 0; v < 250; ++v)
    out.instance.labels.push_back(std::to_string(v));
  out.blocks = std::move(blocks);
  return out;
}

Graph gen_gnp(int n, double p, std::uint64_t seed) {
  if (n < 0) throw std::invalid_argument("gen_gnp: n must be >= 0");
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("gen_gnp: bad probability");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (pair_coin(p, seed, 1, i, j)) edges.emplace_back(i, j);
  return Graph::from_edges(n, std::move(edges));
}

}  // namespace dwc
