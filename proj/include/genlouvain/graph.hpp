#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "genlouvain/partition.hpp"

namespace genlouvain {

using NodeId = std::uint32_t;

/// Quantities fixed on the input graph and shared unchanged by every coarser
/// level. Criteria read n, 2m and the maximum weight from here, never from the
/// level they happen to be working on.
struct Level0Constants {
  std::uint64_t n0 = 0;
  double two_m = 0.0;               ///< sum of w_ij over ordered pairs, diagonal included
  double w_max = 1.0;               ///< largest level-0 weight; 1 for edgeless input
  double aux_sum = 0.0;             ///< sum of per-node auxiliaries (Marcotorchino)
  double squared_weight_sum = 0.0;  ///< sum of w_ij^2 over ordered pairs (profile difference)
  bool unit_weights = true;         ///< every stored weight, loops included, equals 1
};

struct Edge {
  NodeId u;
  NodeId v;
  double weight;
};

/// Immutable weighted undirected graph in compressed adjacency form.
///
/// Off-diagonal links are stored in both directions; a self-loop is stored
/// once per node as `loop_weight`. The weighted degree is the row sum of W,
/// so a loop counts once and the degrees add up to `globals().two_m`.
class Graph {
 public:
  Graph() = default;

  /// Level-0 constructor. Duplicate edges are summed, zero weights dropped.
  static Graph from_edges(std::size_t num_nodes, std::span<const Edge> edges);

  /// Assembles a level from already merged, symmetric adjacency lists.
  /// `globals` is shared with the level it was derived from.
  static Graph from_parts(std::vector<std::size_t> offsets, std::vector<NodeId> targets,
                          std::vector<double> weights, std::vector<double> loops,
                          std::vector<std::uint64_t> sizes, std::vector<double> aux,
                          std::shared_ptr<const Level0Constants> globals);

  std::size_t num_nodes() const noexcept { return loops_.size(); }
  /// Number of undirected off-diagonal links (loops excluded).
  std::size_t num_links() const noexcept { return targets_.size() / 2; }
  std::size_t num_loops() const noexcept;

  std::span<const NodeId> neighbors(NodeId i) const noexcept {
    return {targets_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
  }
  std::span<const double> neighbor_weights(NodeId i) const noexcept {
    return {weights_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
  }

  double loop_weight(NodeId i) const noexcept { return loops_[i]; }
  double weighted_degree(NodeId i) const noexcept { return degrees_[i]; }
  std::uint64_t node_size(NodeId i) const noexcept { return sizes_[i]; }
  double node_aux(NodeId i) const noexcept { return aux_[i]; }

  std::span<const double> loops() const noexcept { return loops_; }
  std::span<const double> degrees() const noexcept { return degrees_; }
  std::span<const std::uint64_t> sizes() const noexcept { return sizes_; }
  std::span<const double> aux() const noexcept { return aux_; }

  const Level0Constants& globals() const noexcept { return *globals_; }
  const std::shared_ptr<const Level0Constants>& shared_globals() const noexcept {
    return globals_;
  }

  /// Every link (u < v) followed by loops (u == v), in node order.
  std::vector<Edge> edges() const;

  /// Copy with node auxiliaries replaced; constants are re-frozen with the
  /// new auxiliary sum. Only meaningful on a level-0 graph.
  Graph with_aux(std::vector<double> aux) const;

 private:
  std::vector<std::size_t> offsets_{0};
  std::vector<NodeId> targets_;
  std::vector<double> weights_;
  std::vector<double> loops_;
  std::vector<double> degrees_;
  std::vector<std::uint64_t> sizes_;
  std::vector<double> aux_;
  std::shared_ptr<const Level0Constants> globals_ = std::make_shared<Level0Constants>();
};

/// d_i: off-diagonal row sum plus the loop weight.
inline double weighted_degree(const Graph& g, NodeId i) { return g.weighted_degree(i); }

/// d_w(i, C) for every community adjacent to i, excluding i's own loop. The
/// community currently holding i comes first and is always present, even
/// at weight 0; the rest follow in order of first appearance in i's
/// adjacency.
std::vector<std::pair<CommunityId, double>> neighbor_community_weights(const Graph& g, NodeId i,
                                                                       const Partition& p);

/// Meta-graph with one node per community of the compact partition `p`.
/// A meta-node's loop weight is the ordered-pair internal weight of its
/// community; sizes and auxiliaries are summed; constants are carried over.
Graph aggregate(const Graph& g, const Partition& p);

}  // namespace genlouvain
