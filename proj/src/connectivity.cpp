#include "dwc/connectivity.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <unordered_map>

namespace dwc {

bool is_connected(const Graph& g) {
  int n = g.num_vertices();
  if (n <= 1) return true;
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == n;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  int n = g.num_vertices();
  std::vector<std::vector<int>> comps;
  std::vector<char> seen(n, 0);
  for (int start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<int> comp{start};
    seen[start] = 1;
    std::vector<int> stack{start};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

// ---------------------------------------------------------------------------
// Dinic max-flow
// ---------------------------------------------------------------------------

void FlowNetwork::add_edge(int u, int v, std::int64_t cap, std::int64_t rev_cap) {
  arcs_.push_back({v, head_[u], cap});
  head_[u] = static_cast<int>(arcs_.size()) - 1;
  arcs_.push_back({u, head_[v], rev_cap});
  head_[v] = static_cast<int>(arcs_.size()) - 1;
}

bool FlowNetwork::bfs_levels(int s, int t) {
  level_.assign(n_, -1);
  std::queue<int> q;
  level_[s] = 0;
  q.push(s);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int a = head_[v]; a != -1; a = arcs_[a].next) {
      if (arcs_[a].cap > 0 && level_[arcs_[a].to] < 0) {
        level_[arcs_[a].to] = level_[v] + 1;
        q.push(arcs_[a].to);
      }
    }
  }
  return level_[t] >= 0;
}

std::int64_t FlowNetwork::dfs_push(int v, int t, std::int64_t limit) {
  if (v == t) return limit;
  std::int64_t pushed = 0;
  for (int& a = iter_[v]; a != -1; a = arcs_[a].next) {
    const Arc& arc = arcs_[a];
    if (arc.cap <= 0 || level_[arc.to] != level_[v] + 1) continue;
    std::int64_t got = dfs_push(arc.to, t, std::min(limit - pushed, arc.cap));
    if (got > 0) {
      arcs_[a].cap -= got;
      arcs_[a ^ 1].cap += got;
      pushed += got;
      if (pushed == limit) return pushed;
    }
  }
  level_[v] = -1;
  return pushed;
}

std::int64_t FlowNetwork::max_flow(int s, int t) {
  std::int64_t flow = 0;
  while (bfs_levels(s, t)) {
    iter_ = head_;
    flow += dfs_push(s, t, std::numeric_limits<std::int64_t>::max());
  }
  return flow;
}

std::vector<char> FlowNetwork::source_side(int s) const {
  std::vector<char> side(n_, 0);
  std::vector<int> stack{s};
  side[s] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int a = head_[v]; a != -1; a = arcs_[a].next) {
      if (arcs_[a].cap > 0 && !side[arcs_[a].to]) {
        side[arcs_[a].to] = 1;
        stack.push_back(arcs_[a].to);
      }
    }
  }
  return side;
}

std::int64_t max_flow(const Graph& g, int source, int sink,
                      const std::vector<std::int64_t>& capacities) {
  if (source == sink) throw std::invalid_argument("max_flow: source == sink");
  if (capacities.size() != g.edges().size())
    throw std::invalid_argument("max_flow: capacity count mismatch");
  FlowNetwork net(g.num_vertices());
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    auto [u, v] = g.edges()[i];
    if (capacities[i] < 0) throw std::invalid_argument("negative capacity");
    net.add_edge(u, v, capacities[i], capacities[i]);
  }
  return net.max_flow(source, sink);
}

std::int64_t max_flow(const Graph& g, int source, int sink) {
  return max_flow(g, source, sink,
                  std::vector<std::int64_t>(g.edges().size(), 1));
}

// ---------------------------------------------------------------------------
// Global minimum cut
// ---------------------------------------------------------------------------

namespace {

struct WeightedCut {
  std::int64_t value;
  std::vector<int> side;  // original vertex ids
};

// Stoer-Wagner on a weighted multigraph whose nodes carry groups of original
// vertices. Phases start from the smallest active id; maximum-adjacency
// ties break toward the smaller id.
WeightedCut stoer_wagner(int n,
                         const std::vector<std::tuple<int, int, std::int64_t>>& edges,
                         std::vector<std::vector<int>> groups) {
  std::vector<std::unordered_map<int, std::int64_t>> w(n);
  for (auto [u, v, wt] : edges) {
    w[u][v] += wt;
    w[v][u] += wt;
  }
  std::vector<char> active(n, 1);
  int active_count = n;
  WeightedCut best{std::numeric_limits<std::int64_t>::max(), {}};

  std::vector<std::int64_t> key(n);
  std::vector<char> done(n);
  while (active_count > 1) {
    int start = -1;
    for (int v = 0; v < n; ++v) {
      if (active[v]) {
        start = v;
        break;
      }
    }
    for (int v = 0; v < n; ++v) {
      key[v] = 0;
      done[v] = 0;
    }
    // max-heap on (key, smaller id wins ties)
    std::priority_queue<std::pair<std::int64_t, int>> pq;
    pq.emplace(0, -start);
    int added = 0, last = -1, prev = -1;
    while (added < active_count) {
      int v = -1;
      while (!pq.empty()) {
        auto [kw, nv] = pq.top();
        pq.pop();
        int cand = -nv;
        if (!done[cand] && kw == key[cand]) {
          v = cand;
          break;
        }
      }
      if (v < 0) {
        // disconnected remainder: continue from the smallest untouched id
        for (int u = 0; u < n; ++u) {
          if (active[u] && !done[u]) {
            v = u;
            break;
          }
        }
      }
      done[v] = 1;
      ++added;
      prev = last;
      last = v;
      for (auto [u, wt] : w[v]) {
        if (active[u] && !done[u]) {
          key[u] += wt;
          pq.emplace(key[u], -u);
        }
      }
    }
    if (key[last] < best.value) {
      best.value = key[last];
      best.side = groups[last];
    }
    // contract last into prev
    for (auto [u, wt] : w[last]) {
      if (u == prev) continue;
      w[prev][u] += wt;
      w[u][prev] += wt;
    }
    for (auto [u, wt] : w[last]) w[u].erase(last);
    w[prev].erase(last);
    w[last].clear();
    groups[prev].insert(groups[prev].end(), groups[last].begin(),
                        groups[last].end());
    groups[last].clear();
    active[last] = 0;
    --active_count;
  }
  std::sort(best.side.begin(), best.side.end());
  return best;
}

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent[b] = a;  // keep the smaller id as representative
    return true;
  }
};

}  // namespace

namespace detail {

CutResult min_cut_bounded(const Graph& g, std::int64_t bound) {
  int n = g.num_vertices();
  if (n < 2) throw std::invalid_argument("min_cut_bounded: need n >= 2");

  Dsu global(n);
  // current contracted multigraph over DSU representatives
  std::vector<std::tuple<int, int, std::int64_t>> cur;
  cur.reserve(g.edges().size());
  for (auto [u, v] : g.edges()) cur.emplace_back(u, v, 1);

  while (true) {
    // pack `bound` edge-disjoint maximal spanning forests; copies left over
    // (and edges of weight >= bound) cross no cut of value < bound
    std::vector<std::int64_t> used(cur.size(), 0);
    for (std::int64_t round = 0; round < bound; ++round) {
      Dsu forest(n);
      bool any = false;
      for (std::size_t i = 0; i < cur.size(); ++i) {
        auto [u, v, wt] = cur[i];
        if (used[i] < wt && forest.unite(u, v)) {
          ++used[i];
          any = true;
        }
      }
      if (!any) break;
    }
    bool contracted = false;
    for (std::size_t i = 0; i < cur.size(); ++i) {
      auto [u, v, wt] = cur[i];
      if (used[i] < wt || wt >= bound) contracted |= global.unite(u, v);
    }
    if (!contracted) break;

    std::unordered_map<std::int64_t, std::int64_t> agg;
    for (auto [u, v, wt] : cur) {
      int a = global.find(u), b = global.find(v);
      if (a == b) continue;
      if (a > b) std::swap(a, b);
      agg[static_cast<std::int64_t>(a) * n + b] += wt;
    }
    cur.clear();
    for (auto [code, wt] : agg)
      cur.emplace_back(static_cast<int>(code / n), static_cast<int>(code % n), wt);
    std::sort(cur.begin(), cur.end());
    if (cur.empty()) {
      // single supernode: no cut of value < bound exists
      return {bound, VertexSet(n, {0})};
    }
  }

  // relabel representatives densely and run Stoer-Wagner
  std::vector<int> rep_id(n, -1);
  std::vector<std::vector<int>> groups;
  for (int v = 0; v < n; ++v) {
    int r = global.find(v);
    if (rep_id[r] < 0) {
      rep_id[r] = static_cast<int>(groups.size());
      groups.emplace_back();
    }
    groups[rep_id[r]].push_back(v);
  }
  std::vector<std::tuple<int, int, std::int64_t>> edges;
  edges.reserve(cur.size());
  for (auto [u, v, wt] : cur)
    edges.emplace_back(rep_id[global.find(u)], rep_id[global.find(v)], wt);

  int num_groups = static_cast<int>(groups.size());
  WeightedCut cut = stoer_wagner(num_groups, edges, std::move(groups));
  return {cut.value, VertexSet(n, std::move(cut.side))};
}

}  // namespace detail

CutResult global_min_cut(const Graph& g) {
  int n = g.num_vertices();
  if (n < 2) throw std::invalid_argument("global_min_cut: need n >= 2");
  if (!is_connected(g)) throw std::invalid_argument("global_min_cut: disconnected input");

  std::int64_t min_deg = std::numeric_limits<std::int64_t>::max();
  int arg = -1;
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) < min_deg) {
      min_deg = g.degree(v);
      arg = v;
    }
  }
  CutResult r = detail::min_cut_bounded(g, min_deg);
  if (r.value < min_deg) return r;
  return {min_deg, VertexSet(n, {arg})};  // lambda <= delta; singleton realizes it
}

bool edge_connectivity_at_least(const Graph& g, int k) {
  int n = g.num_vertices();
  if (n == 0) return false;
  if (n == 1) return true;  // vacuous singleton convention
  if (!is_connected(g)) return false;
  if (k <= 0) return true;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) < k) return false;
  return detail::min_cut_bounded(g, k).value >= k;
}

Decomposition decompose_kecc(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("decompose_kecc: k must be >= 1");
  int n = g.num_vertices();
  std::vector<std::vector<int>> components;

  std::vector<std::vector<int>> pieces;
  if (n > 0) {
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    pieces.push_back(std::move(all));
  }
  std::vector<int> deg(n, 0);
  std::vector<char> in_piece(n, 0);

  while (!pieces.empty()) {
    std::vector<int> piece = std::move(pieces.back());
    pieces.pop_back();

    // iterated k-core restriction: vertices of induced degree < k cannot
    // belong to any k-edge-connected component inside this piece
    for (int v : piece) in_piece[v] = 1;
    for (int v : piece) {
      int d = 0;
      for (int w : g.neighbors(v)) d += in_piece[w];
      deg[v] = d;
    }
    std::vector<int> kill;
    for (int v : piece)
      if (deg[v] < k) kill.push_back(v);
    while (!kill.empty()) {
      int v = kill.back();
      kill.pop_back();
      if (!in_piece[v]) continue;
      in_piece[v] = 0;
      for (int w : g.neighbors(v)) {
        if (in_piece[w] && --deg[w] == k - 1) kill.push_back(w);
      }
    }

    // connected components of the surviving induced subgraph
    std::vector<std::vector<int>> comps;
    for (int start : piece) {
      if (!in_piece[start]) continue;
      std::vector<int> comp{start};
      in_piece[start] = 0;
      std::vector<int> stack{start};
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(v)) {
          if (in_piece[w]) {
            in_piece[w] = 0;
            comp.push_back(w);
            stack.push_back(w);
          }
        }
      }
      std::sort(comp.begin(), comp.end());
      comps.push_back(std::move(comp));
    }

    for (auto& comp : comps) {
      if (comp.size() < 2) continue;  // singleton -> leftover
      if (k == 1) {
        components.push_back(std::move(comp));
        continue;
      }
      InducedSubgraph sub = induced_subgraph(
          g, VertexSet(n, comp));
      CutResult cut = detail::min_cut_bounded(sub.graph, k);
      if (cut.value >= k) {
        components.push_back(std::move(comp));
      } else {
        std::vector<int> side, rest;
        for (int i = 0; i < sub.graph.num_vertices(); ++i) {
          (cut.side.contains(i) ? side : rest).push_back(sub.to_original[i]);
        }
        pieces.push_back(std::move(side));
        pieces.push_back(std::move(rest));
      }
    }
  }

  std::sort(components.begin(), components.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });

  std::vector<char> covered(n, 0);
  Decomposition out;
  for (auto& comp : components) {
    for (int v : comp) covered[v] = 1;
    out.components.emplace_back(n, std::move(comp));
  }
  std::vector<int> leftover;
  for (int v = 0; v < n; ++v)
    if (!covered[v]) leftover.push_back(v);
  out.leftovers = VertexSet(n, std::move(leftover));
  return out;
}

}  // namespace dwc
