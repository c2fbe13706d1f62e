#include "dwc/baselines.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "dwc/connectivity.hpp"
#include "dwc/peeling.hpp"

namespace dwc {

namespace {

// union multigraph as (u, v, multiplicity) with u < v
std::vector<std::tuple<int, int, std::int64_t>> union_edges(const Graph& g,
                                                            const Graph& h) {
  std::map<std::pair<int, int>, std::int64_t> agg;
  for (auto e : g.edges()) ++agg[e];
  for (auto e : h.edges()) ++agg[e];
  std::vector<std::tuple<int, int, std::int64_t>> out;
  out.reserve(agg.size());
  for (auto [e, w] : agg) out.emplace_back(e.first, e.second, w);
  return out;
}

}  // namespace

BaselineResult bff_mm(const Graph& g, const Graph& h) {
  auto [nodes, objective] = bff_mm_peel({g, h});
  return {"bff-mm", std::move(nodes), objective, 1};
}

BaselineResult bff_aa(const Graph& g, const Graph& h) {
  int n = g.num_vertices();
  if (h.num_vertices() != n)
    throw std::invalid_argument("bff_aa: vertex count mismatch");
  auto edges = union_edges(g, h);
  std::int64_t m = g.num_edges() + h.num_edges();
  if (m == 0) throw std::invalid_argument("bff_aa: edgeless union");

  std::vector<std::int64_t> wdeg(n, 0);
  for (auto [u, v, w] : edges) {
    wdeg[u] += w;
    wdeg[v] += w;
  }

  // candidate densities e(S)/|S| have denominator <= n and are separated by
  // more than 1/D with D = n(n-1), so an integer search over p/D isolates the
  // optimum exactly
  const std::int64_t d_scale = static_cast<std::int64_t>(n) * std::max(1, n - 1);
  if (static_cast<double>(m) * n * d_scale > 4e18)
    throw std::invalid_argument("bff_aa: instance too large for exact arithmetic");

  auto min_cut_side = [&](std::int64_t p) -> std::vector<char> {
    // Goldberg construction at density guess p/D, capacities scaled by D
    FlowNetwork net(n + 2);
    int s = n, t = n + 1;
    for (int v = 0; v < n; ++v) {
      net.add_edge(s, v, m * d_scale);
      net.add_edge(v, t, m * d_scale + 2 * p - d_scale * wdeg[v]);
    }
    for (auto [u, v, w] : edges) net.add_edge(u, v, w * d_scale, w * d_scale);
    std::int64_t cut = net.max_flow(s, t);
    if (cut >= m * d_scale * n) return {};  // no S with e(S)/|S| > p/D
    return net.source_side(s);
  };

  std::int64_t lo = 0, hi = static_cast<std::int64_t>(n - 1) * d_scale + 1;
  std::vector<char> best_side = min_cut_side(0);
  if (best_side.empty())
    throw std::invalid_argument("bff_aa: edgeless union");
  while (hi - lo > 1) {
    std::int64_t mid = lo + (hi - lo) / 2;
    auto side = min_cut_side(mid);
    if (!side.empty()) {
      lo = mid;
      best_side = std::move(side);
    } else {
      hi = mid;
    }
  }

  std::vector<int> members;
  for (int v = 0; v < n; ++v)
    if (best_side[v]) members.push_back(v);
  VertexSet nodes(n, std::move(members));
  std::int64_t e_in = 0;
  for (auto [u, v, w] : edges)
    if (nodes.contains(u) && nodes.contains(v)) e_in += w;
  std::int64_t size = nodes.size();
  return {"bff-aa", std::move(nodes), 2 * e_in, size};
}

std::optional<BaselineResult> kcco(const Graph& g, const Graph& h, int k) {
  if (k < 1) throw std::invalid_argument("kcco: k must be >= 1");
  int n = g.num_vertices();
  if (h.num_vertices() != n)
    throw std::invalid_argument("kcco: vertex count mismatch");

  std::vector<std::vector<int>> stable;
  std::vector<std::vector<int>> cells;
  if (n > 0) {
    std::vector<int> all(n);
    for (int v = 0; v < n; ++v) all[v] = v;
    cells.push_back(std::move(all));
  }
  while (!cells.empty()) {
    std::vector<int> cell = std::move(cells.back());
    cells.pop_back();
    VertexSet core = kcore(g, VertexSet(n, cell), k);
    if (core.empty()) continue;

    // common refinement of G- and H-components of the core
    InducedSubgraph sub_g = induced_subgraph(g, core);
    InducedSubgraph sub_h = induced_subgraph(h, core);
    auto comps_g = connected_components(sub_g.graph);
    auto comps_h = connected_components(sub_h.graph);
    if (comps_g.size() == 1 && comps_h.size() == 1) {
      stable.push_back(core.members());  // connected k-core in G, connected in H
      continue;
    }
    std::vector<int> gid(core.size()), hid(core.size());
    for (std::size_t i = 0; i < comps_g.size(); ++i)
      for (int v : comps_g[i]) gid[v] = static_cast<int>(i);
    for (std::size_t i = 0; i < comps_h.size(); ++i)
      for (int v : comps_h[i]) hid[v] = static_cast<int>(i);
    std::map<std::pair<int, int>, std::vector<int>> refine;
    for (int v = 0; v < core.size(); ++v)
      refine[{gid[v], hid[v]}].push_back(sub_g.to_original[v]);
    for (auto& [key, verts] : refine) cells.push_back(std::move(verts));
  }

  if (stable.empty()) return std::nullopt;
  auto best = std::max_element(
      stable.begin(), stable.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return b < a;  // equal size: prefer the lexicographically smaller
      });
  VertexSet nodes(n, std::move(*best));
  auto [min_deg_g, arg] = min_degree(g, nodes);
  (void)arg;
  return BaselineResult{"kcco", std::move(nodes), min_deg_g, 1};
}

std::vector<std::pair<std::string, int>> connectivity_profile(
    const std::vector<BaselineResult>& results, const Graph& g) {
  std::vector<std::pair<std::string, int>> out;
  for (const BaselineResult& r : results) {
    int lambda = 0;
    if (r.nodes.size() >= 2) {
      InducedSubgraph sub = induced_subgraph(g, r.nodes);
      if (is_connected(sub.graph))
        lambda = static_cast<int>(global_min_cut(sub.graph).value);
    }
    out.emplace_back(r.method, lambda);
  }
  return out;
}

}  // namespace dwc
