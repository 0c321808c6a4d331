#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "genlouvain/criteria.hpp"
#include "genlouvain/graph.hpp"
#include "genlouvain/partition.hpp"

namespace genlouvain::oracle {

inline constexpr std::size_t kDefaultCap = 10;

/// Walks every set partition of {0..n-1} once, as restricted-growth strings
/// (a[0] = 0, a[k] <= 1 + max(a[0..k-1])) in lexicographic order.
class PartitionEnumerator {
 public:
  explicit PartitionEnumerator(std::size_t n, std::size_t cap = kDefaultCap);

  /// Current partition, or nullopt once exhausted.
  std::optional<Partition> next();

 private:
  std::size_t n_;
  std::vector<CommunityId> labels_;
  std::vector<CommunityId> prefix_max_;
  bool started_ = false;
  bool done_ = false;
};

/// All set partitions of n nodes; Bell(n) of them.
std::vector<Partition> enumerate_partitions(std::size_t n, std::size_t cap = kDefaultCap);

struct Optimum {
  Partition partition;
  double quality = 0.0;
};

/// Best partition by `relational_total`; the first enumerated wins ties.
Optimum exact_optimum(const CriterionSpec& spec, const Graph& g0, std::size_t cap = kDefaultCap);

/// Quality change from moving node i into community c (`kNoCommunity`
/// for a new community of its own), by full re-evaluation.
double delta_oracle(const CriterionSpec& spec, const Graph& g0, const Partition& p, NodeId i,
                    CommunityId c);

}  // namespace genlouvain::oracle
