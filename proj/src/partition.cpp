#include "genlouvain/partition.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace genlouvain {

Partition Partition::singletons(std::size_t n) {
  std::vector<CommunityId> labels(n);
  std::iota(labels.begin(), labels.end(), CommunityId{0});
  return Partition(std::move(labels));
}

std::size_t Partition::num_communities() const {
  std::vector<CommunityId> ids;
  ids.reserve(community_of_.size());
  for (CommunityId c : community_of_) {
    if (c != kNoCommunity) ids.push_back(c);
  }
  std::sort(ids.begin(), ids.end());
  return static_cast<std::size_t>(std::unique(ids.begin(), ids.end()) - ids.begin());
}

bool Partition::is_compact() const {
  std::vector<char> seen(community_of_.size(), 0);
  for (CommunityId c : community_of_) {
    if (c >= community_of_.size()) return false;
    seen[c] = 1;
  }
  auto used = static_cast<std::size_t>(std::count(seen.begin(), seen.end(), 1));
  return std::all_of(seen.begin(), seen.begin() + static_cast<std::ptrdiff_t>(used),
                     [](char s) { return s == 1; });
}

Partition Partition::compacted() const {
  std::vector<CommunityId> remap;
  std::vector<CommunityId> out(community_of_.size(), kNoCommunity);
  CommunityId next = 0;
  for (std::size_t i = 0; i < community_of_.size(); ++i) {
    const CommunityId c = community_of_[i];
    if (c == kNoCommunity) continue;
    if (c >= remap.size()) remap.resize(static_cast<std::size_t>(c) + 1, kNoCommunity);
    if (remap[c] == kNoCommunity) remap[c] = next++;
    out[i] = remap[c];
  }
  return Partition(std::move(out));
}

std::vector<std::vector<std::uint32_t>> Partition::groups() const {
  assert(is_compact());
  std::vector<std::vector<std::uint32_t>> out(num_communities());
  for (std::size_t i = 0; i < community_of_.size(); ++i) {
    out[community_of_[i]].push_back(static_cast<std::uint32_t>(i));
  }
  return out;
}

Partition compose(const Partition& inner, const Partition& outer) {
  std::vector<CommunityId> out(inner.size());
  for (std::size_t v = 0; v < inner.size(); ++v) {
    assert(inner[v] < outer.size());
    out[v] = outer[inner[v]];
  }
  return Partition(std::move(out));
}

}  // namespace genlouvain
