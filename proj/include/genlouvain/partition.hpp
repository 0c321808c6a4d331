#pragma once

#include <cstdint>
#include <limits>
#include <vector>

namespace genlouvain {

using CommunityId = std::uint32_t;

inline constexpr CommunityId kNoCommunity = std::numeric_limits<CommunityId>::max();

/// Node to community map. A node holds `kNoCommunity` only while it is
/// detached in the middle of a local move.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<CommunityId> community_of)
      : community_of_(std::move(community_of)) {}

  static Partition singletons(std::size_t n);

  std::size_t size() const noexcept { return community_of_.size(); }
  CommunityId operator[](std::size_t i) const noexcept { return community_of_[i]; }
  CommunityId& operator[](std::size_t i) noexcept { return community_of_[i]; }
  const std::vector<CommunityId>& labels() const noexcept { return community_of_; }

  /// Number of distinct community ids in use (detached nodes ignored).
  std::size_t num_communities() const;

  /// Ids are exactly 0..k-1 and every node is placed.
  bool is_compact() const;

  /// Renumbers communities 0..k-1 by order of first appearance over node
  /// ids; membership is unchanged.
  Partition compacted() const;

  /// Members of each community of a compact partition.
  std::vector<std::vector<std::uint32_t>> groups() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<CommunityId> community_of_;
};

/// `outer[inner[v]]` for every v: maps level nodes through two successive
/// partitions.
Partition compose(const Partition& inner, const Partition& outer);

}  // namespace genlouvain
