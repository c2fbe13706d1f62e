#ifndef DWC_IO_HPP
#define DWC_IO_HPP

#include <string>
#include <vector>

#include "dwc/graph.hpp"
#include "dwc/metrics.hpp"
#include "dwc/solver.hpp"

namespace dwc {

struct LabeledGraph {
  Graph graph;
  std::vector<std::string> labels;  // label of vertex v
};

// Edge-list text: two whitespace-separated labels per line, '#' comments and
// blank lines ignored. Ids assigned by first appearance; duplicate edges
// collapse; a self-loop or malformed line raises std::runtime_error with the
// line number.
LabeledGraph parse_edge_list(const std::string& text);

std::string write_edge_list(const LabeledGraph& g);

enum class AlignmentPolicy { kIntersection, kUnion };

struct InstanceBuild {
  DualInstance instance;  // instance.g = layers[0] of the input
  int common_nodes = 0;   // |labels(G) ∩ labels(H_1) ∩ ...|
};

// Aligns >= 2 layer files onto a shared universe. Intersection keeps labels
// present in every layer; union keeps all, absentees becoming isolated.
InstanceBuild build_instance(const std::vector<LabeledGraph>& layers,
                             AlignmentPolicy policy);

enum class ResultFormat { kJson, kCsv, kNodes };

// Serializes a solve outcome. json keys: k, algorithm, status, objective,
// lambda_g, nodes, stats. csv: Table-style row per layer prefixed by
// (pair name, k). nodes: one label per line.
// `k` is echoed for NO SOLUTION outcomes, which carry no Solution record.
std::string write_result(const DualInstance& instance, const SolveOutcome& outcome,
                         ResultFormat format, const std::string& pair_name = "",
                         int k = -1);

// "nodes,min_deg,max_deg,avg_deg,diameter,triangles,avg_shortest_path"
extern const char* const kStatsCsvHeader;

// Row in the header's column order; averages printed with one fractional digit.
std::string stats_csv_row(const SubgraphStats& st);

}  // namespace dwc

#endif  // DWC_IO_HPP
