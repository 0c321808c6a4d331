#include "genlouvain/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "genlouvain/error.hpp"

namespace genlouvain::io {

namespace {

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
    if (pos >= line.size()) break;
    std::size_t end = pos;
    while (end < line.size() && !std::isspace(static_cast<unsigned char>(line[end]))) ++end;
    tokens.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return tokens;
}

[[noreturn]] void parse_error(std::size_t line_no, std::string_view token, std::string_view what) {
  throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": " + std::string(what) +
                                    " '" + std::string(token) + "'");
}

double parse_weight(std::string_view token, std::size_t line_no) {
  double w = 0.0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), w);
  if (ec != std::errc() || ptr != token.data() + token.size() || !std::isfinite(w)) {
    parse_error(line_no, token, "invalid weight");
  }
  if (w < 0.0) {
    throw Error(Errc::NegativeWeight,
                "line " + std::to_string(line_no) + ": negative weight '" + std::string(token) + "'");
  }
  return w;
}

bool skippable(std::string_view line) {
  for (char ch : line) {
    if (ch == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw Error(Errc::ParseError, "cannot open '" + path + "'");
  return file;
}

}  // namespace

LabeledGraph read_edge_list(std::istream& in) {
  std::unordered_map<std::string, NodeId> ids;
  std::vector<std::string> labels;
  std::vector<Edge> edges;
  auto intern = [&](std::string_view label) {
    auto [it, inserted] = ids.try_emplace(std::string(label), static_cast<NodeId>(labels.size()));
    if (inserted) labels.emplace_back(label);
    return it->second;
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (skippable(line)) continue;
    const auto tokens = split(line);
    if (tokens.size() < 2 || tokens.size() > 3) {
      parse_error(line_no, line, "expected 'src dst [weight]', got");
    }
    const double w = tokens.size() == 3 ? parse_weight(tokens[2], line_no) : 1.0;
    const NodeId u = intern(tokens[0]);
    const NodeId v = intern(tokens[1]);
    edges.push_back({u, v, w});
  }
  return {Graph::from_edges(labels.size(), edges), std::move(labels)};
}

LabeledGraph read_edge_list_file(const std::string& path) {
  if (path == "-") return read_edge_list(std::cin);
  auto file = open_or_throw(path);
  return read_edge_list(file);
}

void write_partition(std::ostream& out, const Partition& p, std::span<const std::string> labels) {
  for (std::size_t i = 0; i < p.size(); ++i) out << labels[i] << '\t' << p[i] << '\n';
}

Partition read_partition(std::istream& in, std::span<const std::string> labels) {
  std::unordered_map<std::string_view, std::size_t> index;
  for (std::size_t i = 0; i < labels.size(); ++i) index.emplace(labels[i], i);

  std::vector<CommunityId> community(labels.size(), kNoCommunity);
  std::string line;
  std::size_t line_no = 0;
  std::size_t assigned = 0;
  CommunityId max_id = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (skippable(line)) continue;
    const auto tokens = split(line);
    if (tokens.size() != 2) parse_error(line_no, line, "expected 'label community', got");
    auto it = index.find(tokens[0]);
    if (it == index.end()) {
      throw Error(Errc::UnknownLabel, "line " + std::to_string(line_no) + ": node '" +
                                          std::string(tokens[0]) + "' is not in the graph");
    }
    CommunityId c = 0;
    auto [ptr, ec] = std::from_chars(tokens[1].data(), tokens[1].data() + tokens[1].size(), c);
    if (ec != std::errc() || ptr != tokens[1].data() + tokens[1].size() || c == kNoCommunity) {
      parse_error(line_no, tokens[1], "invalid community id");
    }
    if (community[it->second] != kNoCommunity) {
      throw Error(Errc::CoverageMismatch, "line " + std::to_string(line_no) + ": node '" +
                                              std::string(tokens[0]) + "' listed twice");
    }
    community[it->second] = c;
    max_id = std::max(max_id, c);
    ++assigned;
  }
  if (assigned != labels.size()) {
    throw Error(Errc::CoverageMismatch, "partition covers " + std::to_string(assigned) + " of " +
                                            std::to_string(labels.size()) + " nodes");
  }
  Partition p(std::move(community));
  if (!p.is_compact()) {
    throw Error(Errc::ParseError, "community ids are not dense from 0 (max id " +
                                      std::to_string(max_id) + ")");
  }
  return p;
}

Partition read_partition_file(const std::string& path, std::span<const std::string> labels) {
  if (path == "-") return read_partition(std::cin, labels);
  auto file = open_or_throw(path);
  return read_partition(file, labels);
}

RunSummary summarize(const Hierarchy& h, const RunConfig& cfg) {
  RunSummary s;
  s.criterion = std::string(to_string(cfg.criterion.id));
  s.alpha = cfg.criterion.alpha;
  s.seed = cfg.seed;
  s.precision = cfg.precision;
  s.initial_quality = h.initial_quality;
  for (const Level& level : h.levels) {
    s.levels.push_back({level.graph.num_nodes(), level.graph.num_links(), level.quality,
                        level.partition.num_communities(), level.sweeps});
  }
  s.final_quality = h.final_quality();
  s.kappa_final = h.kappa_final;
  s.elapsed_seconds = h.elapsed_seconds;
  return s;
}

std::string summary_json(const RunSummary& s) {
  nlohmann::ordered_json j;
  j["criterion"] = s.criterion;
  j["alpha"] = s.alpha;
  j["seed"] = s.seed;
  j["precision"] = s.precision;
  j["initial_quality"] = s.initial_quality;
  j["levels"] = nlohmann::ordered_json::array();
  for (const LevelSummary& l : s.levels) {
    nlohmann::ordered_json level;
    level["nodes"] = l.nodes;
    level["links"] = l.links;
    level["quality"] = l.quality;
    level["kappa"] = l.kappa;
    level["sweeps"] = l.sweeps;
    j["levels"].push_back(std::move(level));
  }
  j["final_quality"] = s.final_quality;
  j["kappa_final"] = s.kappa_final;
  j["elapsed_seconds"] = s.elapsed_seconds;
  return j.dump(2);
}

std::string summary_text(const RunSummary& s) {
  std::ostringstream out;
  out << "criterion " << s.criterion;
  if (s.criterion == "oz") out << " (alpha " << s.alpha << ")";
  out << ", seed " << s.seed << ", precision " << s.precision << '\n';
  out << std::setw(6) << "level" << std::setw(10) << "nodes" << std::setw(10) << "links"
      << std::setw(8) << "kappa" << std::setw(8) << "sweeps" << std::setw(24) << "quality" << '\n';
  for (std::size_t l = 0; l < s.levels.size(); ++l) {
    const LevelSummary& level = s.levels[l];
    out << std::setw(6) << l << std::setw(10) << level.nodes << std::setw(10) << level.links
        << std::setw(8) << level.kappa << std::setw(8) << level.sweeps << std::setw(24)
        << std::setprecision(17) << level.quality << '\n';
  }
  out << "communities " << s.kappa_final << ", quality " << std::setprecision(17) << s.final_quality
      << ", " << std::setprecision(4) << s.elapsed_seconds << " s\n";
  return out.str();
}

}  // namespace genlouvain::io
