#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "genlouvain/graph.hpp"
#include "genlouvain/louvain.hpp"
#include "genlouvain/partition.hpp"

namespace genlouvain::io {

struct LabeledGraph {
  Graph graph;
  std::vector<std::string> labels;  ///< dense id -> input label, first appearance order
};

/// Edge list: one "src dst [weight]" per line, '#' comments, blank lines
/// ignored. Missing weight means 1; repeated pairs are summed; src == dst is
/// a self-loop.
LabeledGraph read_edge_list(std::istream& in);
/// `path` "-" reads standard input.
LabeledGraph read_edge_list_file(const std::string& path);

/// One "label<TAB>community" line per node, in dense id order.
void write_partition(std::ostream& out, const Partition& p, std::span<const std::string> labels);

/// Inverse of write_partition against the graph's labels. Every node must
/// appear exactly once and community ids must be dense from 0.
Partition read_partition(std::istream& in, std::span<const std::string> labels);
Partition read_partition_file(const std::string& path, std::span<const std::string> labels);

struct LevelSummary {
  std::size_t nodes = 0;
  std::size_t links = 0;
  double quality = 0.0;
  std::size_t kappa = 0;
  std::size_t sweeps = 0;
};

struct RunSummary {
  std::string criterion;
  double alpha = 0.0;
  std::uint64_t seed = 0;
  double precision = 0.0;
  double initial_quality = 0.0;
  std::vector<LevelSummary> levels;
  double final_quality = 0.0;
  std::size_t kappa_final = 0;
  double elapsed_seconds = 0.0;
};

RunSummary summarize(const Hierarchy& h, const RunConfig& cfg);

/// JSON object; keys always appear in declaration order of RunSummary.
std::string summary_json(const RunSummary& s);
/// Aligned table for terminals.
std::string summary_text(const RunSummary& s);

}  // namespace genlouvain::io
