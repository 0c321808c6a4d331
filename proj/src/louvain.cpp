#include "genlouvain/louvain.hpp"

#include <chrono>
#include <string>

namespace genlouvain {

void RunConfig::validate() const {
  if (!(precision > 0.0)) {
    throw Error(Errc::InvalidPrecision, "precision must be positive");
  }
  if (criterion.id == CriterionId::OwsinskiZadrozny && !(criterion.alpha > 0.0 && criterion.alpha < 1.0)) {
    throw Error(Errc::InvalidAlpha, "oz requires 0 < alpha < 1");
  }
}

namespace detail {

std::size_t sweep_cap(const RunConfig& cfg, std::size_t n) {
  if (cfg.max_sweeps_per_pass != 0) return cfg.max_sweeps_per_pass;
  return 10 * std::max<std::size_t>(n, 2);
}

void throw_sweep_cap(std::size_t cap) {
  throw Error(Errc::SweepCapExceeded,
              "local moving did not converge within " + std::to_string(cap) + " sweeps");
}

}  // namespace detail

namespace {

template <class P>
Hierarchy run_levels(const Graph& g0, const RunConfig& cfg, const P& policy) {
  Hierarchy h;
  std::mt19937_64 rng(cfg.seed);
  Graph current = g0;
  for (;;) {
    CriterionState<P> state(policy, current);
    const double before = state.total();
    if (h.levels.empty()) h.initial_quality = before;

    PassResult pass = one_pass(state, cfg, rng);
    const double after = state.total();
    if (pass.moves == 0) {
      if (h.levels.empty()) {
        h.levels.push_back({current, Partition::singletons(current.num_nodes()), after, pass.sweeps, 0,
                            std::move(pass.sweep_quality)});
      }
      break;
    }
    Partition p = pass.partition.compacted();
    Graph next = aggregate(current, p);
    h.levels.push_back({std::move(current), std::move(p), after, pass.sweeps, pass.moves,
                        std::move(pass.sweep_quality)});
    if (after - before <= cfg.precision) break;
    if (cfg.max_levels != 0 && h.levels.size() >= cfg.max_levels) break;
    current = std::move(next);
  }
  return h;
}

}  // namespace

Hierarchy run(const Graph& g0, const RunConfig& cfg) {
  cfg.validate();
  const auto start = std::chrono::steady_clock::now();
  Hierarchy h = std::visit([&](const auto& policy) { return run_levels(g0, cfg, policy); },
                           make_criterion(cfg.criterion, g0.globals()));
  h.flat = compose_flat(h);
  h.kappa_final = h.flat.num_communities();
  h.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return h;
}

Partition compose_flat(const Hierarchy& h) {
  if (h.levels.empty()) return {};
  Partition flat = h.levels.front().partition;
  for (std::size_t l = 1; l < h.levels.size(); ++l) flat = compose(flat, h.levels[l].partition);
  return flat.compacted();
}

}  // namespace genlouvain
