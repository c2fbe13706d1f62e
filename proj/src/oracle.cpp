#include "dwc/oracle.hpp"

#include <bit>
#include <limits>
#include <stdexcept>

namespace dwc {

namespace {

std::vector<std::uint32_t> adjacency_masks(const Graph& g) {
  std::vector<std::uint32_t> adj(g.num_vertices(), 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= 1u << v;
    adj[v] |= 1u << u;
  }
  return adj;
}

// edge_count[S] = number of induced edges of G[S], for all subsets
std::vector<int> subset_edge_counts(const Graph& g) {
  int n = g.num_vertices();
  auto adj = adjacency_masks(g);
  std::vector<int> e(std::size_t{1} << n, 0);
  for (std::uint32_t s = 1; s < (1u << n); ++s) {
    int v = std::countr_zero(s);
    std::uint32_t rest = s & (s - 1);
    e[s] = e[rest] + std::popcount(adj[v] & rest);
  }
  return e;
}

int min_induced_degree(const std::vector<std::uint32_t>& adj, std::uint32_t s) {
  int best = std::numeric_limits<int>::max();
  for (std::uint32_t bits = s; bits; bits &= bits - 1) {
    int v = std::countr_zero(bits);
    best = std::min(best, std::popcount(adj[v] & s));
  }
  return best;
}

}  // namespace

BruteForceOutcome brute_force_dual_dwc(const Graph& g,
                                       const std::vector<Graph>& layers, int k,
                                       const OracleBudget& budget) {
  int n = g.num_vertices();
  if (n > budget.max_subset_vertices)
    throw std::invalid_argument("brute_force_dual_dwc: over budget");
  if (k < 1) throw std::invalid_argument("brute_force_dual_dwc: k must be >= 1");
  if (layers.empty() || n == 0)
    throw std::invalid_argument("brute_force_dual_dwc: empty instance");
  if (n == 1) return {true, 0, {0}};

  auto eg = subset_edge_counts(g);
  std::vector<std::vector<std::uint32_t>> adj_layers;
  for (const Graph& h : layers) adj_layers.push_back(adjacency_masks(h));

  BruteForceOutcome best;
  for (std::uint32_t s = 1; s < (1u << n); ++s) {
    if (std::popcount(s) < 2) continue;
    // lambda(G[S]) >= k via exhaustive bipartition enumeration
    bool feasible = true;
    for (std::uint32_t a = (s - 1) & s; a; a = (a - 1) & s) {
      if (eg[s] - eg[a] - eg[s ^ a] < k) {
        feasible = false;
        break;
      }
    }
    if (!feasible) continue;
    int obj = std::numeric_limits<int>::max();
    for (const auto& adj : adj_layers)
      obj = std::min(obj, min_induced_degree(adj, s));
    if (!best.has_solution || obj > best.objective) {
      best.has_solution = true;
      best.objective = obj;
      best.nodes.clear();
      for (std::uint32_t bits = s; bits; bits &= bits - 1)
        best.nodes.push_back(std::countr_zero(bits));
    }
  }
  return best;
}

std::int64_t brute_force_min_cut(const Graph& g, const OracleBudget& budget) {
  int n = g.num_vertices();
  if (n > budget.max_cut_vertices)
    throw std::invalid_argument("brute_force_min_cut: over budget");
  if (n < 2) throw std::invalid_argument("brute_force_min_cut: need n >= 2");
  auto e = subset_edge_counts(g);
  std::uint32_t full = (1u << n) - 1;
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  // fix vertex 0 on one side to enumerate each bipartition once
  for (std::uint32_t a = 1; a < full; a += 2)
    best = std::min<std::int64_t>(best, e[full] - e[a] - e[full ^ a]);
  return best;
}

int brute_force_bff_mm(const std::vector<Graph>& layers,
                       const OracleBudget& budget) {
  if (layers.empty()) throw std::invalid_argument("brute_force_bff_mm: no layers");
  int n = layers.front().num_vertices();
  if (n > budget.max_subset_vertices)
    throw std::invalid_argument("brute_force_bff_mm: over budget");
  if (n == 0) throw std::invalid_argument("brute_force_bff_mm: empty graph");
  std::vector<std::vector<std::uint32_t>> adj_layers;
  for (const Graph& h : layers) adj_layers.push_back(adjacency_masks(h));
  int best = -1;
  for (std::uint32_t s = 1; s < (1u << n); ++s) {
    int obj = std::numeric_limits<int>::max();
    for (const auto& adj : adj_layers)
      obj = std::min(obj, min_induced_degree(adj, s));
    best = std::max(best, obj);
  }
  return best;
}

std::pair<std::int64_t, std::int64_t> brute_force_bff_aa(
    const Graph& g, const Graph& h, const OracleBudget& budget) {
  int n = g.num_vertices();
  if (n > budget.max_subset_vertices)
    throw std::invalid_argument("brute_force_bff_aa: over budget");
  if (n == 0) throw std::invalid_argument("brute_force_bff_aa: empty graph");
  auto eg = subset_edge_counts(g);
  auto eh = subset_edge_counts(h);
  std::int64_t best_num = 0, best_den = 1;
  for (std::uint32_t s = 1; s < (1u << n); ++s) {
    std::int64_t num = 2ll * (eg[s] + eh[s]);
    std::int64_t den = std::popcount(s);
    if (num * best_den > best_num * den) {
      best_num = num;
      best_den = den;
    }
  }
  return {best_num, best_den};
}

}  // namespace dwc
