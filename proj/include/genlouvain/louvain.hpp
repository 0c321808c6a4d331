#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "genlouvain/criteria.hpp"
#include "genlouvain/graph.hpp"
#include "genlouvain/partition.hpp"

namespace genlouvain {

struct RunConfig {
  CriterionSpec criterion;
  double precision = 1e-6;  ///< minimum quality gain of a level to keep aggregating
  std::uint64_t seed = 0;
  bool shuffle_nodes = true;
  std::size_t max_levels = 0;           ///< 0: unbounded
  std::size_t max_sweeps_per_pass = 0;  ///< 0: 10 n

  /// Throws `InvalidPrecision` or `InvalidAlpha`.
  void validate() const;
};

struct PassResult {
  Partition partition;  ///< not compacted
  std::size_t sweeps = 0;
  std::size_t moves = 0;
  std::vector<double> sweep_quality;  ///< total after each sweep
};

struct Level {
  Graph graph;
  Partition partition;  ///< compact, over this level's nodes
  double quality = 0.0;
  std::size_t sweeps = 0;
  std::size_t moves = 0;
  std::vector<double> sweep_quality;
};

struct Hierarchy {
  std::vector<Level> levels;
  double initial_quality = 0.0;  ///< all-singleton quality on the input graph
  Partition flat;                ///< level-0 node -> final community
  std::size_t kappa_final = 0;
  double elapsed_seconds = 0.0;

  double final_quality() const { return levels.empty() ? initial_quality : levels.back().quality; }
};

namespace detail {

/// Candidate bookkeeping reused across the nodes of a pass.
struct MoveScratch {
  explicit MoveScratch(std::size_t n) : weight(n, 0.0), seen(n, 0) {}
  std::vector<double> weight;
  std::vector<char> seen;
  std::vector<CommunityId> candidates;
  std::vector<CommunityId> free_communities;
  std::vector<double> dw, tot, size, aux, gains;
};

std::size_t sweep_cap(const RunConfig& cfg, std::size_t n);
[[noreturn]] void throw_sweep_cap(std::size_t cap);

}  // namespace detail

/// Local greedy phase on one level: repeated sweeps over the nodes, each node
/// moved to the candidate community of largest gain (its own community, the
/// communities of its neighbors, and one empty community), until a sweep
/// makes no move. `state` must hold the singleton partition.
template <class P>
PassResult one_pass(CriterionState<P>& state, const RunConfig& cfg, std::mt19937_64& rng) {
  const Graph& g = state.graph();
  const std::size_t n = g.num_nodes();
  const CommunitySums& sums = state.sums();

  std::vector<NodeId> order(n);
  for (NodeId i = 0; i < n; ++i) order[i] = i;
  if (cfg.shuffle_nodes) std::shuffle(order.begin(), order.end(), rng);

  detail::MoveScratch scratch(n);
  auto& cand = scratch.candidates;
  const std::size_t cap = detail::sweep_cap(cfg, n);

  PassResult result;
  for (;;) {
    std::size_t moves = 0;
    for (NodeId i : order) {
      const CommunityId old = state.partition()[i];
      cand.clear();
      cand.push_back(old);
      scratch.seen[old] = 1;
      auto nbrs = g.neighbors(i);
      auto ws = g.neighbor_weights(i);
      for (std::size_t k = 0; k < nbrs.size(); ++k) {
        const CommunityId c = state.partition()[nbrs[k]];
        if (!scratch.seen[c]) {
          scratch.seen[c] = 1;
          cand.push_back(c);
        }
        scratch.weight[c] += ws[k];
      }

      state.remove(i, old, scratch.weight[old]);
      // an emptied `old` already plays the role of the empty candidate
      if (!sums.empty(old) && !scratch.free_communities.empty()) {
        const CommunityId fresh = scratch.free_communities.back();
        scratch.seen[fresh] = 1;
        cand.push_back(fresh);
      }

      std::size_t best = 0;
      const NodeTerms node = state.node(i);
      if constexpr (LinearCriterion<P>) {
        const std::size_t m = cand.size();
        scratch.dw.resize(m);
        scratch.tot.resize(m);
        scratch.size.resize(m);
        scratch.aux.resize(m);
        scratch.gains.resize(m);
        for (std::size_t k = 0; k < m; ++k) {
          const CommunityId c = cand[k];
          scratch.dw[k] = scratch.weight[c];
          scratch.tot[k] = sums.tot[c];
          scratch.size[k] = sums.size[c];
          scratch.aux[k] = sums.aux[c];
        }
        kernels::linear_gains(state.policy().gain_terms(node), scratch.dw, scratch.tot, scratch.size,
                              scratch.aux, scratch.gains);
        best = kernels::first_argmax(scratch.gains);
      } else {
        double best_gain = state.policy().gain(sums, node, cand[0], scratch.weight[cand[0]]);
        for (std::size_t k = 1; k < cand.size(); ++k) {
          const double gk = state.policy().gain(sums, node, cand[k], scratch.weight[cand[k]]);
          if (gk > best_gain) {
            best_gain = gk;
            best = k;
          }
        }
      }

      const CommunityId target = cand[best];
      state.insert(i, target, scratch.weight[target]);
      if (target != old) {
        ++moves;
        if (!scratch.free_communities.empty() && scratch.free_communities.back() == target) {
          scratch.free_communities.pop_back();
        }
        if (sums.empty(old)) scratch.free_communities.push_back(old);
      }

      for (CommunityId c : cand) {
        scratch.seen[c] = 0;
        scratch.weight[c] = 0.0;
      }
    }
    ++result.sweeps;
    result.moves += moves;
    result.sweep_quality.push_back(state.total());
    if (moves == 0) break;
    if (result.sweeps >= cap) detail::throw_sweep_cap(cap);
  }
  result.partition = state.partition();
  return result;
}

/// Hierarchical driver: local pass, aggregate, repeat while a level improves
/// the quality by more than `cfg.precision`. `g0` must already be pretreated
/// when the criterion requires it.
Hierarchy run(const Graph& g0, const RunConfig& cfg);

/// Level-0 node -> community of the last level, compacted.
Partition compose_flat(const Hierarchy& h);

}  // namespace genlouvain
