#include "dwc/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace dwc {

LabeledGraph parse_edge_list(const std::string& text) {
  LabeledGraph out;
  std::unordered_map<std::string, int> id_of;
  auto intern = [&](const std::string& label) {
    auto [it, fresh] = id_of.try_emplace(label, static_cast<int>(out.labels.size()));
    if (fresh) out.labels.push_back(label);
    return it->second;
  };

  std::vector<std::pair<int, int>> edges;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string a, b, extra;
    if (!(ls >> a)) continue;          // blank line
    if (a[0] == '#') continue;         // comment
    if (!(ls >> b) || (ls >> extra))
      throw std::runtime_error("parse error at line " + std::to_string(line_no) +
                               ": expected two tokens");
    if (a == b)
      throw std::runtime_error("parse error at line " + std::to_string(line_no) +
                               ": self-loop");
    int ia = intern(a);
    int ib = intern(b);
    edges.emplace_back(ia, ib);
  }
  out.graph = Graph::from_edges(static_cast<int>(out.labels.size()), std::move(edges));
  return out;
}

std::string write_edge_list(const LabeledGraph& g) {
  std::string out;
  for (auto [u, v] : g.graph.edges()) {
    out += g.labels[u];
    out += ' ';
    out += g.labels[v];
    out += '\n';
  }
  return out;
}

InstanceBuild build_instance(const std::vector<LabeledGraph>& layers,
                             AlignmentPolicy policy) {
  if (layers.size() < 2)
    throw std::invalid_argument("build_instance: need at least two layers");

  std::unordered_set<std::string> common(layers[0].labels.begin(),
                                         layers[0].labels.end());
  for (std::size_t i = 1; i < layers.size(); ++i) {
    std::unordered_set<std::string> here(layers[i].labels.begin(),
                                         layers[i].labels.end());
    std::erase_if(common, [&](const std::string& l) { return !here.count(l); });
  }

  // deterministic universe: first-appearance order over the layer sequence
  std::vector<std::string> universe;
  std::unordered_map<std::string, int> id_of;
  for (const LabeledGraph& layer : layers) {
    for (const std::string& label : layer.labels) {
      if (policy == AlignmentPolicy::kIntersection && !common.count(label)) continue;
      if (id_of.try_emplace(label, static_cast<int>(universe.size())).second)
        universe.push_back(label);
    }
  }
  if (universe.empty())
    throw std::runtime_error("build_instance: aligned universe is empty");

  int n = static_cast<int>(universe.size());
  auto remap = [&](const LabeledGraph& layer) {
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : layer.graph.edges()) {
      auto iu = id_of.find(layer.labels[u]);
      auto iv = id_of.find(layer.labels[v]);
      if (iu != id_of.end() && iv != id_of.end())
        edges.emplace_back(iu->second, iv->second);
    }
    return Graph::from_edges(n, std::move(edges));
  };

  InstanceBuild out;
  out.common_nodes = static_cast<int>(common.size());
  out.instance.labels = std::move(universe);
  out.instance.g = remap(layers[0]);
  for (std::size_t i = 1; i < layers.size(); ++i)
    out.instance.layers.push_back(remap(layers[i]));
  return out;
}

const char* const kStatsCsvHeader =
    "nodes,min_deg,max_deg,avg_deg,diameter,triangles,avg_shortest_path";

namespace {

std::string one_decimal(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.1f", x);
  return buf;
}

nlohmann::json stats_json(const SubgraphStats& st) {
  return {{"nodes", st.nodes},
          {"min_deg", st.min_deg},
          {"max_deg", st.max_deg},
          {"avg_deg", st.avg_degree()},
          {"diameter", st.diameter},
          {"triangles", st.triangles},
          {"avg_shortest_path", st.avg_shortest_path()},
          {"connected", st.connected}};
}

}  // namespace

std::string stats_csv_row(const SubgraphStats& st) {
  std::ostringstream row;
  row << st.nodes << ',' << st.min_deg << ',' << st.max_deg << ','
      << one_decimal(st.avg_degree()) << ',' << st.diameter << ','
      << st.triangles << ',' << one_decimal(st.avg_shortest_path());
  return row.str();
}

std::string write_result(const DualInstance& instance, const SolveOutcome& outcome,
                         ResultFormat format, const std::string& pair_name, int k) {
  switch (format) {
    case ResultFormat::kJson: {
      nlohmann::json j;
      if (!outcome) {
        if (k >= 0) j["k"] = k;
        j["status"] = "no_solution";
      } else {
        const Solution& sol = *outcome;
        j["k"] = sol.k;
        j["algorithm"] = sol.algorithm;
        j["status"] = "solution";
        j["objective"] = sol.objective;
        j["lambda_g"] = sol.achieved_connectivity;
        auto& nodes = j["nodes"] = nlohmann::json::array();
        for (int v : sol.nodes.members()) nodes.push_back(instance.labels[v]);
        auto& layer_stats = j["stats"] = nlohmann::json::array();
        for (const Graph& h : instance.layers)
          layer_stats.push_back(stats_json(stats(h, sol.nodes)));
      }
      return j.dump() + "\n";
    }
    case ResultFormat::kCsv: {
      std::string out = std::string("pair,k,") + kStatsCsvHeader + "\n";
      if (outcome) {
        for (const Graph& h : instance.layers) {
          out += pair_name + ',' + std::to_string(outcome->k) + ',' +
                 stats_csv_row(stats(h, outcome->nodes)) + "\n";
        }
      } else {
        out += pair_name + ',' + (k >= 0 ? std::to_string(k) : "") +
               ",no_solution\n";
      }
      return out;
    }
    case ResultFormat::kNodes: {
      if (!outcome) return "NO SOLUTION\n";
      std::string out;
      for (int v : outcome->nodes.members()) {
        out += instance.labels[v];
        out += '\n';
      }
      return out;
    }
  }
  return {};
}

}  // namespace dwc
