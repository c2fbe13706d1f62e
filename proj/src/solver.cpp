#include "dwc/solver.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "dwc/connectivity.hpp"
#include "dwc/peeling.hpp"

namespace dwc {

namespace {

struct PartialResult {
  bool has = false;
  std::vector<int> nodes;
  int objective = -1;
};

struct Candidate {
  std::vector<int> verts;
  int min_deg;
};

struct Frame {
  std::vector<int> verts;
  std::vector<Candidate> chain;            // k-connected sets along the peel
  std::vector<std::vector<int>> comps;     // decomposition of the remainder
  std::size_t next_comp = 0;
  PartialResult child;                     // best over processed comps
  bool entered = false;
};

bool subset_k_connected(const Graph& g, const std::vector<int>& verts, int k) {
  InducedSubgraph sub = induced_subgraph(g, VertexSet(g.num_vertices(), verts));
  return edge_connectivity_at_least(sub.graph, k);
}

SolveOutcome run_dual_dwc(const DualInstance& instance, int k, bool fast,
                          const char* tag) {
  if (k < 1) throw std::invalid_argument("dual_dwc: k must be >= 1");
  if (instance.layers.empty())
    throw std::invalid_argument("dual_dwc: instance has no layers");
  int n = instance.num_vertices();
  if (n == 0) throw std::invalid_argument("dual_dwc: empty vertex set");
  for (const Graph& h : instance.layers)
    if (h.num_vertices() != n)
      throw std::invalid_argument("dual_dwc: layer vertex count mismatch");

  const Graph& g = instance.g;
  const auto& layers = instance.layers;
  SolveStats stats;

  std::vector<Frame> stack;
  {
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    stack.push_back(Frame{std::move(all)});
  }
  PartialResult pending;
  bool pending_ready = false;

  while (!stack.empty()) {
    Frame& f = stack.back();
    stats.max_depth = std::max(stats.max_depth, static_cast<int>(stack.size()));

    if (!f.entered) {
      f.entered = true;
      // peel while the current set stays k-edge-connected
      std::vector<int> s = f.verts;
      while (true) {
        if (static_cast<int>(s.size()) <= 1) {
          if (s.size() == 1) {
            f.child = {true, s, 0};  // single vertex, degree 0 in every layer
          }
          break;
        }
        if (!subset_k_connected(g, s, k)) break;
        VertexSet vs(n, s);
        auto [victim, layer, d] = min_degree_vertex_multi(layers, vs);
        (void)layer;
        f.chain.push_back({s, d});
        ++stats.peel_steps;
        std::vector<int> next;
        next.reserve(s.size() - 1);
        for (int v : s)
          if (v != victim) next.push_back(v);
        if (fast) {
          // an optimum beating d must live in the (d+1)-core of every layer
          next = kcore_multi(layers, VertexSet(n, next), d + 1).members();
        }
        s = std::move(next);
      }
      if (static_cast<int>(s.size()) >= 2) {
        InducedSubgraph sub = induced_subgraph(g, VertexSet(n, s));
        Decomposition dec = decompose_kecc(sub.graph, k);
        ++stats.decompositions;
        for (const VertexSet& c : dec.components) {
          std::vector<int> orig;
          orig.reserve(c.size());
          for (int i : c.members()) orig.push_back(sub.to_original[i]);
          f.comps.push_back(std::move(orig));
        }
      }
    } else if (pending_ready) {
      // a component subproblem just returned
      pending_ready = false;
      if (pending.has && (!f.child.has || pending.objective > f.child.objective))
        f.child = std::move(pending);
    }

    if (f.next_comp < f.comps.size()) {
      std::vector<int> comp = f.comps[f.next_comp++];
      stack.push_back(Frame{std::move(comp)});
      continue;
    }

    // fold the peel chain: a deeper result must strictly improve to win
    PartialResult result = std::move(f.child);
    for (auto it = f.chain.rbegin(); it != f.chain.rend(); ++it) {
      if (!result.has || result.objective <= it->min_deg)
        result = {true, std::move(it->verts), it->min_deg};
    }
    stack.pop_back();
    pending = std::move(result);
    pending_ready = true;
  }

  if (!pending.has) return std::nullopt;

  Solution sol;
  sol.nodes = VertexSet(n, std::move(pending.nodes));
  sol.objective = pending.objective;
  sol.k = k;
  sol.algorithm = tag;
  sol.stats = stats;
  if (sol.nodes.size() >= 2) {
    InducedSubgraph sub = induced_subgraph(g, sol.nodes);
    sol.achieved_connectivity =
        static_cast<int>(global_min_cut(sub.graph).value);
  }
  return sol;
}

}  // namespace

SolveOutcome dual_dwc_naive(const DualInstance& instance, int k) {
  if (instance.layers.size() != 1)
    throw std::invalid_argument("dual_dwc_naive: expects exactly one layer");
  return run_dual_dwc(instance, k, /*fast=*/false, "naive");
}

SolveOutcome dual_dwc_fast(const DualInstance& instance, int k) {
  return run_dual_dwc(instance, k, /*fast=*/true, "fast");
}

std::vector<std::pair<int, SolveOutcome>> sweep(const DualInstance& instance,
                                                const std::vector<int>& k_values,
                                                bool fast) {
  if (k_values.empty()) throw std::invalid_argument("sweep: no k values");
  std::vector<std::pair<int, SolveOutcome>> out;
  out.reserve(k_values.size());
  for (int k : k_values) {
    out.emplace_back(k, fast ? dual_dwc_fast(instance, k)
                             : dual_dwc_naive(instance, k));
  }
  return out;
}

}  // namespace dwc
