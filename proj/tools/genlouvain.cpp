// Command-line front end: detect, eval, optimum, bench.

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <sstream>

#include <CLI11.hpp>

#include "genlouvain/criteria.hpp"
#include "genlouvain/io.hpp"
#include "genlouvain/louvain.hpp"
#include "genlouvain/oracle.hpp"

namespace gl = genlouvain;

namespace {

struct Options {
  std::string graph;
  std::string partition;
  std::string criterion = "ng";
  double alpha = 0.5;
  double precision = 1e-6;
  std::uint64_t seed = 0;
  bool no_shuffle = false;
  std::size_t max_levels = 0;
  std::string output;
  std::string levels_out;
  std::string summary;
  std::size_t runs = 10;
  std::size_t cap = gl::oracle::kDefaultCap;
};

gl::io::LabeledGraph load_graph(const std::string& path) {
  auto g = gl::io::read_edge_list_file(path);
  if (g.graph.num_nodes() == 0) throw gl::Error(gl::Errc::EmptyGraph, "graph '" + path + "' has no nodes");
  return g;
}

/// Writes to `path`, or stdout when empty or "-". The file is only created
/// once the content is ready.
void emit(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path);
  if (!out) throw gl::Error(gl::Errc::ParseError, "cannot write '" + path + "'");
  out << content;
}

std::string format_double(double v) {
  std::ostringstream s;
  s << std::setprecision(17) << v;
  return s.str();
}

gl::RunConfig make_config(const Options& o, const gl::CriterionSpec& spec) {
  gl::RunConfig cfg;
  cfg.criterion = spec;
  cfg.precision = o.precision;
  cfg.seed = o.seed;
  cfg.shuffle_nodes = !o.no_shuffle;
  cfg.max_levels = o.max_levels;
  cfg.validate();
  return cfg;
}

int detect(const Options& o) {
  const auto spec = gl::parse_criterion(o.criterion, o.alpha);
  const auto cfg = make_config(o, spec);
  const auto input = load_graph(o.graph);
  const gl::Graph working = gl::pretreat(spec, input.graph);
  const gl::Hierarchy h = gl::run(working, cfg);

  std::ostringstream partition;
  gl::io::write_partition(partition, h.flat, input.labels);
  const auto summary = gl::io::summarize(h, cfg);

  emit(o.output, partition.str());
  if (!o.summary.empty()) emit(o.summary, gl::io::summary_json(summary) + "\n");
  if (!o.levels_out.empty()) {
    std::ostringstream levels;
    for (std::size_t l = 0; l < h.levels.size(); ++l) {
      const auto& p = h.levels[l].partition;
      for (std::size_t v = 0; v < p.size(); ++v) {
        levels << l << '\t' << (l == 0 ? input.labels[v] : std::to_string(v)) << '\t' << p[v] << '\n';
      }
    }
    emit(o.levels_out, levels.str());
  }
  std::cerr << gl::io::summary_text(summary);
  return 0;
}

int eval(const Options& o) {
  const auto spec = gl::parse_criterion(o.criterion, o.alpha);
  const auto input = load_graph(o.graph);
  const gl::Partition p = gl::io::read_partition_file(o.partition, input.labels);
  const gl::Graph working = gl::pretreat(spec, input.graph);
  const double relational = gl::relational_total(spec, working, p);
  const double aggregate = gl::aggregate_total(spec, working, p);
  std::cout << "relational " << format_double(relational) << '\n'
            << "aggregate " << format_double(aggregate) << '\n'
            << "communities " << p.num_communities() << '\n';
  const double scale = std::max(1.0, std::abs(relational));
  if (std::abs(relational - aggregate) > 1e-9 * scale) {
    std::cerr << "error: evaluators disagree\n";
    return 1;
  }
  return 0;
}

int optimum(const Options& o) {
  const auto spec = gl::parse_criterion(o.criterion, o.alpha);
  const auto input = load_graph(o.graph);
  const gl::Graph working = gl::pretreat(spec, input.graph);
  const auto best = gl::oracle::exact_optimum(spec, working, o.cap);
  std::ostringstream out;
  out << "# quality " << format_double(best.quality) << '\n';
  gl::io::write_partition(out, best.partition, input.labels);
  emit(o.output, out.str());
  return 0;
}

struct Stats {
  double mean = 0.0;
  double stddev = 0.0;
};

Stats stats(const std::vector<double>& xs) {
  Stats s;
  if (xs.empty()) return s;
  s.mean = std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
  double ss = 0.0;
  for (double x : xs) ss += (x - s.mean) * (x - s.mean);
  s.stddev = std::sqrt(ss / static_cast<double>(xs.size()));
  return s;
}

std::vector<std::string> bench_criteria(const std::string& list) {
  std::vector<std::string> out;
  std::stringstream in(list);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item == "all") {
      for (auto id : gl::kBenchmarkCriteria) out.emplace_back(gl::to_string(id));
    } else if (!item.empty()) {
      out.push_back(item);
    }
  }
  return out;
}

int bench(const Options& o) {
  const auto names = bench_criteria(o.criterion);
  std::vector<gl::CriterionSpec> specs;
  for (const auto& name : names) specs.push_back(gl::parse_criterion(name, o.alpha));
  if (o.runs == 0) throw gl::Error(gl::Errc::ParseError, "--runs must be at least 1");
  const auto input = load_graph(o.graph);

  std::cout << std::left << std::setw(10) << "criterion" << std::right << std::setw(6) << "runs"
            << std::setw(12) << "time_mean" << std::setw(12) << "time_sd" << std::setw(10)
            << "kappa" << std::setw(10) << "kappa_sd" << std::setw(22) << "quality_mean" << '\n';
  int status = 0;
  for (const auto& spec : specs) {
    std::cout << std::left << std::setw(10) << gl::to_string(spec.id) << std::right;
    try {
      const auto base = make_config(o, spec);
      const gl::Graph working = gl::pretreat(spec, input.graph);
      std::vector<double> times, kappas, qualities;
      for (std::size_t r = 0; r < o.runs; ++r) {
        gl::RunConfig cfg = base;
        cfg.seed = o.seed + r;
        const auto h = gl::run(working, cfg);
        times.push_back(h.elapsed_seconds);
        kappas.push_back(static_cast<double>(h.kappa_final));
        qualities.push_back(h.final_quality());
      }
      const auto t = stats(times);
      const auto k = stats(kappas);
      const auto q = stats(qualities);
      std::cout << std::setw(6) << o.runs << std::fixed << std::setprecision(6) << std::setw(12)
                << t.mean << std::setw(12) << t.stddev << std::setprecision(2) << std::setw(10)
                << k.mean << std::setw(10) << k.stddev << std::defaultfloat << std::setprecision(12)
                << std::setw(22) << q.mean << '\n';
    } catch (const gl::Error& e) {
      std::cout << "  error: " << e.what() << '\n';
      status = 1;
    }
  }
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generic Louvain community detection with pluggable quality criteria"};
  app.require_subcommand(1);
  Options o;

  auto add_criterion = [&](CLI::App* cmd, const std::string& def) {
    o.criterion = def;
    cmd->add_option("-c,--criterion", o.criterion, "ng, zc, oz, wc, bm, di, du, g, pd")->capture_default_str();
    cmd->add_option("--alpha", o.alpha, "Owsinski-Zadrozny parameter, 0 < alpha < 1")->capture_default_str();
  };

  auto* det = app.add_subcommand("detect", "Detect communities");
  det->add_option("graph", o.graph, "edge list ('-' for stdin)")->required();
  add_criterion(det, "ng");
  det->add_option("--precision", o.precision, "minimum quality gain per level")->capture_default_str();
  det->add_option("--seed", o.seed)->capture_default_str();
  det->add_flag("--no-shuffle", o.no_shuffle, "visit nodes in input order");
  det->add_option("--max-levels", o.max_levels, "0 = unbounded");
  det->add_option("-o,--output", o.output, "partition file (default stdout)");
  det->add_option("--levels-out", o.levels_out, "per-level partitions: level, node, community");
  det->add_option("--summary", o.summary, "run summary as JSON");

  auto* ev = app.add_subcommand("eval", "Evaluate a partition");
  ev->add_option("graph", o.graph)->required();
  ev->add_option("partition", o.partition)->required();
  add_criterion(ev, "ng");

  auto* opt = app.add_subcommand("optimum", "Exact optimum by exhaustive search (small graphs)");
  opt->add_option("graph", o.graph)->required();
  add_criterion(opt, "ng");
  opt->add_option("--cap", o.cap, "largest node count accepted")->capture_default_str();
  opt->add_option("-o,--output", o.output);

  auto* be = app.add_subcommand("bench", "Repeated seeded runs per criterion");
  be->add_option("graph", o.graph)->required();
  be->add_option("-c,--criterion", o.criterion, "comma-separated ids or 'all'");
  be->add_option("--alpha", o.alpha);
  be->add_option("--runs", o.runs)->capture_default_str();
  be->add_option("--precision", o.precision);
  be->add_option("--seed", o.seed);
  be->add_flag("--no-shuffle", o.no_shuffle);
  be->add_option("--max-levels", o.max_levels);

  // bench defaults: every benchmark criterion, coarse precision
  be->preparse_callback([&](std::size_t) {
    o.criterion = "all";
    o.precision = 5e-3;
  });

  CLI11_PARSE(app, argc, argv);

  try {
    if (det->parsed()) return detect(o);
    if (ev->parsed()) return eval(o);
    if (opt->parsed()) return optimum(o);
    if (be->parsed()) return bench(o);
  } catch (const gl::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
