#pragma once

// Shared by the unit tests and the acceptance binary: random criterion-ready
// graphs and single-move probes against the brute-force quality change.

#include <cmath>
#include <optional>
#include <random>

#include "genlouvain/criteria.hpp"
#include "genlouvain/oracle.hpp"
#include "support/random_graphs.hpp"

namespace genlouvain::testing {

/// Random level-0 graph made ready for `spec` (pretreated when needed).
/// Redraws until the criterion accepts it (non-zero edge mass etc.); gives up
/// after a few hundred draws, e.g. balanced modularity on a single node.
inline Graph random_criterion_graph(const CriterionSpec& spec, std::size_t n, double p,
                                    bool unit_weights, std::mt19937_64& rng,
                                    double loop_probability = 0.1) {
  const bool unit = unit_weights || spec.id == CriterionId::Marcotorchino;
  for (int attempt = 0;; ++attempt) {
    Graph raw = random_graph({.n = n, .edge_probability = p, .unit_weights = unit,
                              .loop_probability = loop_probability},
                             rng);
    try {
      Graph g = needs_pretreatment(spec.id) ? pretreat(spec, raw) : raw;
      make_criterion(spec, g.globals());
      return g;
    } catch (const Error&) {
      if (attempt == 500) throw;
    }
  }
}

inline double relative_error(double a, double b) {
  return std::abs(a - b) / std::max(1.0, std::max(std::abs(a), std::abs(b)));
}

struct Probe {
  double delta_quality = 0.0;  ///< brute-force F(after) - F(before)
  double delta_gain = 0.0;     ///< gain(target) - gain(old)
  double quality_scale = 1.0;  ///< magnitude for relative tolerances
};

/// Moves node i of partition p (compact) to `target` (kNoCommunity: a fresh
/// community) and compares the fast gains with full re-evaluation.
inline Probe probe_move(const CriterionSpec& spec, const Graph& g, const Partition& p, NodeId i,
                        CommunityId target) {
  return std::visit(
      [&](const auto& policy) {
        CriterionState state(policy, g);
        state.assign(p);
        const auto weights = neighbor_community_weights(g, i, p);
        auto dw_of = [&](CommunityId c) {
          for (const auto& [d, w] : weights) {
            if (d == c) return w;
          }
          return 0.0;
        };
        const CommunityId old = p[i];
        state.remove(i, old, dw_of(old));
        CommunityId c = target;
        if (c == kNoCommunity) {
          // an emptied singleton is already the fresh community
          c = state.sums().empty(old) ? old : static_cast<CommunityId>(p.num_communities());
        }
        Probe out;
        out.delta_gain = state.gain(i, c, dw_of(c)) - state.gain(i, old, dw_of(old));
        const double before = relational_total(spec, g, p);
        out.delta_quality = oracle::delta_oracle(spec, g, p, i, target);
        out.quality_scale = std::max(1.0, std::abs(before));
        return out;
      },
      make_criterion(spec, g.globals()));
}

}  // namespace genlouvain::testing
