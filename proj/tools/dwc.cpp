// Command-line front end: solve / sweep / decompose / baseline / gen / stats /
// verify over edge-list files. Exit status: 0 = solution found (or subcommand
// succeeded), 2 = solver ran but no feasible set exists, 1 = usage or input
// error.
#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "dwc/baselines.hpp"
#include "dwc/connectivity.hpp"
#include "dwc/generators.hpp"
#include "dwc/io.hpp"
#include "dwc/metrics.hpp"
#include "dwc/solver.hpp"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void emit(const std::string& text, const std::string& output) {
  if (output.empty() || output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(output, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + output);
  out << text;
}

dwc::AlignmentPolicy parse_align(const std::string& name) {
  if (name == "intersection") return dwc::AlignmentPolicy::kIntersection;
  if (name == "union") return dwc::AlignmentPolicy::kUnion;
  throw std::runtime_error("unknown alignment policy: " + name);
}

dwc::ResultFormat parse_format(const std::string& name) {
  if (name == "json") return dwc::ResultFormat::kJson;
  if (name == "csv") return dwc::ResultFormat::kCsv;
  if (name == "nodes") return dwc::ResultFormat::kNodes;
  throw std::runtime_error("unknown format: " + name);
}

dwc::InstanceBuild load_instance(const std::string& g_path,
                                 const std::string& h_path,
                                 const std::vector<std::string>& layer_paths,
                                 const std::string& align) {
  std::vector<dwc::LabeledGraph> layers;
  layers.push_back(dwc::parse_edge_list(slurp(g_path)));
  if (!h_path.empty()) layers.push_back(dwc::parse_edge_list(slurp(h_path)));
  for (const std::string& path : layer_paths)
    layers.push_back(dwc::parse_edge_list(slurp(path)));
  if (layers.size() < 2)
    throw std::runtime_error("need --graph-h or --layers in addition to --graph-g");
  return dwc::build_instance(layers, parse_align(align));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact dense well-connected dual-subgraph solver"};
  app.require_subcommand(1);

  // shared options, bound per subcommand
  std::string g_path, h_path, align = "intersection", format = "json";
  std::string output, pair_name;
  std::vector<std::string> layer_paths;
  int k = 1;
  std::string algorithm = "fast";

  auto add_instance_opts = [&](CLI::App* cmd, bool need_k) {
    cmd->add_option("--graph-g", g_path, "edge list of the connectivity graph G")
        ->required();
    cmd->add_option("--graph-h", h_path, "edge list of the density graph H");
    cmd->add_option("--layers", layer_paths, "extra density layers");
    cmd->add_option("--align", align, "intersection|union (default intersection)");
    if (need_k) cmd->add_option("-k,--k", k, "connectivity requirement")->required();
    cmd->add_option("--format", format, "json|csv|nodes (default json)");
    cmd->add_option("--pair-name", pair_name, "pair label for csv rows");
    cmd->add_option("-o,--output", output, "output file (default stdout)");
  };

  CLI::App* solve = app.add_subcommand("solve", "solve one instance at one k");
  add_instance_opts(solve, true);
  solve->add_option("--algorithm", algorithm, "fast|naive (default fast)");

  CLI::App* sweep_cmd = app.add_subcommand("sweep", "solve across a range of k");
  int k_min = 1, k_max = 1;
  add_instance_opts(sweep_cmd, false);
  sweep_cmd->add_option("--k-min", k_min, "smallest k")->required();
  sweep_cmd->add_option("--k-max", k_max, "largest k")->required();
  sweep_cmd->add_option("--algorithm", algorithm, "fast|naive (default fast)");

  CLI::App* decomp = app.add_subcommand(
      "decompose", "maximal k-edge-connected components of one graph");
  std::string graph_path;
  decomp->add_option("--graph", graph_path, "edge list")->required();
  decomp->add_option("-k,--k", k, "connectivity requirement")->required();
  decomp->add_option("-o,--output", output, "output file (default stdout)");

  CLI::App* baseline = app.add_subcommand("baseline", "run comparison methods");
  std::vector<std::string> methods{"bff-mm", "bff-aa", "kcco"};
  add_instance_opts(baseline, false);
  baseline->add_option("--methods", methods, "subset of bff-mm bff-aa kcco");
  baseline->add_option("-k,--k", k, "core order for kcco (default 1)");

  CLI::App* gen = app.add_subcommand("gen", "write synthetic instances");
  std::string model = "gnp", out_dir = ".";
  int gen_n = 100;
  double gen_p = 0.1;
  std::uint64_t seed = 0;
  std::vector<int> block_sizes;
  std::vector<double> intra_probs;
  double inter_prob = 0.0;
  gen->add_option("--model", model, "gnp|sbm|paper-sbm")->required();
  gen->add_option("-n,--nodes", gen_n, "vertex count (gnp)");
  gen->add_option("-p,--prob", gen_p, "edge probability (gnp)");
  gen->add_option("--block-sizes", block_sizes, "block sizes (sbm)");
  gen->add_option("--intra-probs", intra_probs, "per-block densities (sbm)");
  gen->add_option("--inter-prob", inter_prob, "cross-block density (sbm)");
  gen->add_option("--seed", seed, "generator seed");
  gen->add_option("-o,--output", output, "output file for a single graph");
  gen->add_option("--out-dir", out_dir, "directory for paired output (paper-sbm)");

  CLI::App* stats_cmd = app.add_subcommand("stats", "summary row for one graph");
  stats_cmd->add_option("--graph", graph_path, "edge list")->required();
  stats_cmd->add_option("-o,--output", output, "output file (default stdout)");

  CLI::App* verify = app.add_subcommand(
      "verify", "check a node list for feasibility and report its objective");
  std::string nodes_path;
  add_instance_opts(verify, true);
  verify->add_option("--nodes", nodes_path, "file with one node label per line")
      ->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*solve) {
      dwc::InstanceBuild built = load_instance(g_path, h_path, layer_paths, align);
      dwc::SolveOutcome out = algorithm == "naive"
                                  ? dwc::dual_dwc_naive(built.instance, k)
                                  : dwc::dual_dwc_fast(built.instance, k);
      emit(dwc::write_result(built.instance, out, parse_format(format), pair_name, k),
           output);
      return out.has_value() ? 0 : 2;
    }

    if (*sweep_cmd) {
      dwc::InstanceBuild built = load_instance(g_path, h_path, layer_paths, align);
      std::vector<int> ks;
      for (int kk = k_min; kk <= k_max; ++kk) ks.push_back(kk);
      auto results = dwc::sweep(built.instance, ks, algorithm != "naive");
      std::string text;
      bool any = false;
      for (auto& [kk, out] : results) {
        any |= out.has_value();
        text += dwc::write_result(built.instance, out, parse_format(format),
                                  pair_name, kk);
      }
      emit(text, output);
      return any ? 0 : 2;
    }

    if (*decomp) {
      dwc::LabeledGraph lg = dwc::parse_edge_list(slurp(graph_path));
      dwc::Decomposition d = dwc::decompose_kecc(lg.graph, k);
      std::string text;
      for (const dwc::VertexSet& c : d.components) {
        for (std::size_t i = 0; i < c.members().size(); ++i)
          text += (i ? " " : "") + lg.labels[c.members()[i]];
        text += '\n';
      }
      if (!d.leftovers.empty()) {
        text += "# leftovers:";
        for (int v : d.leftovers.members()) text += ' ' + lg.labels[v];
        text += '\n';
      }
      emit(text, output);
      return d.components.empty() ? 2 : 0;
    }

    if (*baseline) {
      dwc::InstanceBuild built = load_instance(g_path, h_path, layer_paths, align);
      const dwc::Graph& g = built.instance.g;
      const dwc::Graph& h = built.instance.h();
      std::vector<dwc::BaselineResult> results;
      for (const std::string& m : methods) {
        if (m == "bff-mm") results.push_back(dwc::bff_mm(g, h));
        else if (m == "bff-aa") results.push_back(dwc::bff_aa(g, h));
        else if (m == "kcco") {
          if (auto r = dwc::kcco(g, h, k)) results.push_back(*r);
        } else {
          throw std::runtime_error("unknown method: " + m);
        }
      }
      auto lambdas = dwc::connectivity_profile(results, g);
      nlohmann::json arr = nlohmann::json::array();
      for (std::size_t i = 0; i < results.size(); ++i) {
        nlohmann::json j;
        j["method"] = results[i].method;
        j["objective"] = results[i].objective();
        j["lambda_g"] = lambdas[i].second;
        auto& nodes = j["nodes"] = nlohmann::json::array();
        for (int v : results[i].nodes.members())
          nodes.push_back(built.instance.labels[v]);
        arr.push_back(std::move(j));
      }
      emit(arr.dump() + "\n", output);
      return 0;
    }

    if (*gen) {
      if (model == "gnp") {
        dwc::Graph g = dwc::gen_gnp(gen_n, gen_p, seed);
        dwc::LabeledGraph lg{g, {}};
        for (int v = 0; v < gen_n; ++v) lg.labels.push_back(std::to_string(v));
        emit(dwc::write_edge_list(lg), output);
      } else if (model == "sbm") {
        dwc::SbmSpec spec{block_sizes, intra_probs, inter_prob, seed};
        auto [g, blocks] = dwc::gen_sbm(spec);
        dwc::LabeledGraph lg{g, {}};
        for (int v = 0; v < g.num_vertices(); ++v)
          lg.labels.push_back(std::to_string(v));
        emit(dwc::write_edge_list(lg), output);
      } else if (model == "paper-sbm") {
        dwc::PaperSbmPair pair = dwc::gen_paper_sbm_pair(seed);
        dwc::LabeledGraph g{pair.instance.g, pair.instance.labels};
        dwc::LabeledGraph h{pair.instance.h(), pair.instance.labels};
        emit(dwc::write_edge_list(g), out_dir + "/g.el");
        emit(dwc::write_edge_list(h), out_dir + "/h.el");
        std::string blocks;
        for (int v = 0; v < 250; ++v)
          blocks += pair.instance.labels[v] + ' ' +
                    std::to_string(pair.blocks[v]) + '\n';
        emit(blocks, out_dir + "/blocks.txt");
      } else {
        throw std::runtime_error("unknown model: " + model);
      }
      return 0;
    }

    if (*stats_cmd) {
      dwc::LabeledGraph lg = dwc::parse_edge_list(slurp(graph_path));
      dwc::SubgraphStats st =
          dwc::stats(lg.graph, dwc::VertexSet::full(lg.graph.num_vertices()));
      emit(std::string(dwc::kStatsCsvHeader) + "\n" + dwc::stats_csv_row(st) + "\n",
           output);
      return 0;
    }

    if (*verify) {
      dwc::InstanceBuild built = load_instance(g_path, h_path, layer_paths, align);
      std::istringstream in(slurp(nodes_path));
      std::unordered_map<std::string, int> id_of;
      for (std::size_t v = 0; v < built.instance.labels.size(); ++v)
        id_of[built.instance.labels[v]] = static_cast<int>(v);
      std::vector<int> members;
      std::string label;
      while (std::getline(in, label)) {
        if (label.empty()) continue;
        auto it = id_of.find(label);
        if (it == id_of.end())
          throw std::runtime_error("unknown node label: " + label);
        members.push_back(it->second);
      }
      std::sort(members.begin(), members.end());
      members.erase(std::unique(members.begin(), members.end()), members.end());
      if (members.empty()) throw std::runtime_error("empty node list");
      dwc::VertexSet s(built.instance.num_vertices(), members);

      bool feasible = true;
      if (s.size() >= 2) {
        dwc::InducedSubgraph sub = dwc::induced_subgraph(built.instance.g, s);
        feasible = dwc::edge_connectivity_at_least(sub.graph, k);
      }
      int objective = built.instance.num_vertices();
      for (const dwc::Graph& layer : built.instance.layers)
        objective = std::min(objective, dwc::min_degree(layer, s).first);

      nlohmann::json j;
      j["k"] = k;
      j["feasible"] = feasible;
      j["objective"] = objective;
      j["nodes"] = s.size();
      emit(j.dump() + "\n", output);
      return feasible ? 0 : 2;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
