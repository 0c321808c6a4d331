#include "genlouvain/oracle.hpp"

#include <algorithm>
#include <string>

namespace genlouvain::oracle {

namespace {

void check_cap(std::size_t n, std::size_t cap) {
  if (n > cap) {
    throw Error(Errc::TooLarge, "exhaustive search is limited to " + std::to_string(cap) +
                                    " nodes, graph has " + std::to_string(n));
  }
}

}  // namespace

PartitionEnumerator::PartitionEnumerator(std::size_t n, std::size_t cap)
    : n_(n), labels_(n, 0), prefix_max_(n, 0) {
  check_cap(n, cap);
}

std::optional<Partition> PartitionEnumerator::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    return Partition(labels_);
  }
  // rightmost position that can still grow
  std::size_t k = n_;
  while (k > 1) {
    --k;
    if (labels_[k] <= prefix_max_[k - 1]) {
      ++labels_[k];
      prefix_max_[k] = std::max(prefix_max_[k - 1], labels_[k]);
      for (std::size_t j = k + 1; j < n_; ++j) {
        labels_[j] = 0;
        prefix_max_[j] = prefix_max_[k];
      }
      return Partition(labels_);
    }
  }
  done_ = true;
  return std::nullopt;
}

std::vector<Partition> enumerate_partitions(std::size_t n, std::size_t cap) {
  PartitionEnumerator it(n, cap);
  std::vector<Partition> out;
  while (auto p = it.next()) out.push_back(std::move(*p));
  return out;
}

Optimum exact_optimum(const CriterionSpec& spec, const Graph& g0, std::size_t cap) {
  PartitionEnumerator it(g0.num_nodes(), cap);
  std::optional<Optimum> best;
  while (auto p = it.next()) {
    const double q = relational_total(spec, g0, *p);
    if (!best || q > best->quality) best = Optimum{std::move(*p), q};
  }
  return *best;
}

double delta_oracle(const CriterionSpec& spec, const Graph& g0, const Partition& p, NodeId i,
                    CommunityId c) {
  Partition moved = p;
  if (c == kNoCommunity) {
    CommunityId fresh = 0;
    for (std::size_t v = 0; v < p.size(); ++v) fresh = std::max(fresh, p[v] + 1);
    moved[i] = fresh;
  } else {
    moved[i] = c;
  }
  return relational_total(spec, g0, moved) - relational_total(spec, g0, p);
}

}  // namespace genlouvain::oracle
