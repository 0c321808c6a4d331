#pragma once

#include <array>
#include <concepts>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "genlouvain/error.hpp"
#include "genlouvain/graph.hpp"
#include "genlouvain/kernels.hpp"
#include "genlouvain/partition.hpp"

namespace genlouvain {

enum class CriterionId {
  NewmanGirvan,
  ZahnCondorcet,
  OwsinskiZadrozny,
  Marcotorchino,
  BalancedModularity,
  DeviationToIndetermination,
  DeviationToUniformity,
  Goldberg,
  ProfileDifference,
};

inline constexpr std::array<CriterionId, 9> kAllCriteria{
    CriterionId::NewmanGirvan,          CriterionId::ZahnCondorcet,
    CriterionId::OwsinskiZadrozny,      CriterionId::Marcotorchino,
    CriterionId::BalancedModularity,    CriterionId::DeviationToIndetermination,
    CriterionId::DeviationToUniformity, CriterionId::Goldberg,
    CriterionId::ProfileDifference,
};

/// The seven criteria `bench all` compares, in column order.
inline constexpr std::array<CriterionId, 7> kBenchmarkCriteria{
    CriterionId::NewmanGirvan,          CriterionId::ZahnCondorcet,
    CriterionId::DeviationToIndetermination, CriterionId::DeviationToUniformity,
    CriterionId::BalancedModularity,    CriterionId::Goldberg,
    CriterionId::ProfileDifference,
};

/// Stable short id: ng, zc, oz, wc, bm, di, du, g, pd.
std::string_view to_string(CriterionId id) noexcept;

struct CriterionSpec {
  CriterionId id = CriterionId::NewmanGirvan;
  double alpha = 0.5;  ///< Owsinski-Zadrozny only
};

/// Resolves a short id. Throws `UnknownCriterion`, `InvalidAlpha`, or
/// `NotPluggable` for mg, sm and md, which cannot drive a local-move optimizer.
CriterionSpec parse_criterion(std::string_view name, double alpha = 0.5);

/// Criteria that run on transformed weights (Marcotorchino, profile difference).
bool needs_pretreatment(CriterionId id) noexcept;

/// Level-0 weight transform required by the criterion; identity for the rest.
///
/// Marcotorchino: the input must be unweighted; every node receives a unit
/// loop, then a_ij <- 2 a_ij / (d_i + d_j) and each node's auxiliary is its
/// transformed loop. Profile difference: w_ij <- 2 w_ij / (d_i + d_j) on the
/// graph as given, with the sum of squared weights frozen as a constant.
Graph pretreat(const CriterionSpec& spec, const Graph& g0);

/// Per-community accumulators, indexed by community id (0..n-1 at a level).
struct CommunitySums {
  std::vector<double> in;    ///< sum of w_ij over ordered member pairs
  std::vector<double> tot;   ///< sum of member weighted degrees
  std::vector<double> size;  ///< sum of member sizes (level-0 node count)
  std::vector<double> aux;   ///< sum of member auxiliaries
  std::vector<std::uint32_t> members;
  std::size_t kappa = 0;     ///< non-empty communities

  void reset(std::size_t n);
  bool empty(CommunityId c) const noexcept { return members[c] == 0; }
};

/// What a gain formula needs to know about the node being moved.
struct NodeTerms {
  double loop = 0.0;
  double degree = 0.0;
  double size = 1.0;
  double aux = 0.0;
};

namespace criteria {

// Each policy provides gain() and total() over CommunitySums; scale() is the
// fixed positive ratio between a true quality difference and the difference
// of the corresponding gains. Linear criteria expose their gain as affine
// coefficients so candidates can be scored in batches.

class NewmanGirvan {
 public:
  static constexpr CriterionId kId = CriterionId::NewmanGirvan;
  static constexpr bool kLinear = true;
  explicit NewmanGirvan(const Level0Constants& k);
  kernels::GainTerms gain_terms(const NodeTerms& node) const noexcept {
    return {1.0, -node.degree / two_m_, 0.0, 0.0};
  }
  double total(const CommunitySums& s) const;
  static constexpr double scale() noexcept { return 2.0; }

 private:
  double two_m_;
};

class ZahnCondorcet {
 public:
  static constexpr CriterionId kId = CriterionId::ZahnCondorcet;
  static constexpr bool kLinear = true;
  explicit ZahnCondorcet(const Level0Constants& k);
  kernels::GainTerms gain_terms(const NodeTerms& node) const noexcept {
    return {2.0, 0.0, -w_max_ * node.size, 0.0};
  }
  double total(const CommunitySums& s) const;
  static constexpr double scale() noexcept { return 2.0; }

 private:
  double w_max_;
  double constant_;  // W n^2 - 2m
};

class OwsinskiZadrozny {
 public:
  static constexpr CriterionId kId = CriterionId::OwsinskiZadrozny;
  static constexpr bool kLinear = true;
  OwsinskiZadrozny(const Level0Constants& k, double alpha);
  kernels::GainTerms gain_terms(const NodeTerms& node) const noexcept {
    return {1.0, 0.0, -alpha_w_ * node.size, 0.0};
  }
  double total(const CommunitySums& s) const;
  static constexpr double scale() noexcept { return 2.0; }
  double alpha() const noexcept { return alpha_; }

 private:
  double alpha_;
  double alpha_w_;   // alpha W
  double constant_;  // alpha (W n^2 - 2m)
};

/// Expects the pretreated graph: weights are the transformed a-hat and each
/// node's auxiliary is its transformed loop.
class Marcotorchino {
 public:
  static constexpr CriterionId kId = CriterionId::Marcotorchino;
  static constexpr bool kLinear = true;
  explicit Marcotorchino(const Level0Constants& k);
  kernels::GainTerms gain_terms(const NodeTerms& node) const noexcept {
    return {2.0, 0.0, -0.5 * node.aux, -0.5 * node.size};
  }
  double total(const CommunitySums& s) const;
  static constexpr double scale() noexcept { return 2.0; }

 private:
  double constant_;  // n * sum(aux) - 2m
};

/// Weighted graphs use W s_i s_j - w_ij as the absent-link mass and
/// W n s_i - d_i as the complementary degree; with unit weights this is the
/// usual balanced modularity.
class BalancedModularity {
 public:
  static constexpr CriterionId kId = CriterionId::BalancedModularity;
  static constexpr bool kLinear = true;
  explicit BalancedModularity(const Level0Constants& k);
  kernels::GainTerms gain_terms(const NodeTerms& node) const noexcept {
    const double complement = wn_ * node.size - node.degree;
    return {2.0, -node.degree / two_m_ - complement / complement_mass_,
            -w_max_ * node.size + complement * wn_ / complement_mass_, 0.0};
  }
  double total(const CommunitySums& s) const;
  static constexpr double scale() noexcept { return 2.0; }

 private:
  double two_m_;
  double w_max_;
  double wn_;               // W n
  double complement_mass_;  // W n^2 - 2m
};

class DeviationToIndetermination {
 public:
  static constexpr CriterionId kId = CriterionId::DeviationToIndetermination;
  static constexpr bool kLinear = true;
  explicit DeviationToIndetermination(const Level0Constants& k);
  kernels::GainTerms gain_terms(const NodeTerms& node) const noexcept {
    return {1.0, -node.size / n_, -node.degree / n_ + density_ * node.size, 0.0};
  }
  double total(const CommunitySums& s) const;
  static constexpr double scale() noexcept { return 2.0; }

 private:
  double n_;
  double density_;  // 2m / n^2
};

class DeviationToUniformity {
 public:
  static constexpr CriterionId kId = CriterionId::DeviationToUniformity;
  static constexpr bool kLinear = true;
  explicit DeviationToUniformity(const Level0Constants& k);
  kernels::GainTerms gain_terms(const NodeTerms& node) const noexcept {
    return {1.0, 0.0, -density_ * node.size, 0.0};
  }
  double total(const CommunitySums& s) const;
  static constexpr double scale() noexcept { return 2.0; }

 private:
  double density_;  // 2m / n^2
};

/// Sum over communities of in[C] / s[C].
class Goldberg {
 public:
  static constexpr CriterionId kId = CriterionId::Goldberg;
  static constexpr bool kLinear = false;
  explicit Goldberg(const Level0Constants&) {}
  double gain(const CommunitySums& s, const NodeTerms& node, CommunityId c, double dw) const noexcept {
    const double mass = 2.0 * dw + node.loop;
    if (s.empty(c)) return mass / node.size;
    return (s.in[c] + mass) / (s.size[c] + node.size) - s.in[c] / s.size[c];
  }
  double total(const CommunitySums& s) const;
  static constexpr double scale() noexcept { return 1.0; }
};

/// Runs on the pretreated graph. The insertion mass is 2 d_w(i,C) + w_ii, and
/// opening a new community costs one unit of kappa, hence the -1/2 branch.
class ProfileDifference {
 public:
  static constexpr CriterionId kId = CriterionId::ProfileDifference;
  static constexpr bool kLinear = false;
  explicit ProfileDifference(const Level0Constants& k);
  double gain(const CommunitySums& s, const NodeTerms& node, CommunityId c, double dw) const noexcept {
    const double mass = 2.0 * dw + node.loop;
    if (s.empty(c)) return mass / node.size - 0.5;
    return (s.in[c] + mass) / (s.size[c] + node.size) - s.in[c] / s.size[c];
  }
  double total(const CommunitySums& s) const;
  static constexpr double scale() noexcept { return 2.0; }

 private:
  double squared_sum_;
};

}  // namespace criteria

using Criterion =
    std::variant<criteria::NewmanGirvan, criteria::ZahnCondorcet, criteria::OwsinskiZadrozny,
                 criteria::Marcotorchino, criteria::BalancedModularity,
                 criteria::DeviationToIndetermination, criteria::DeviationToUniformity,
                 criteria::Goldberg, criteria::ProfileDifference>;

/// Validates the criterion against the graph constants (zero edge mass,
/// alpha range) and freezes them into the policy.
Criterion make_criterion(const CriterionSpec& spec, const Level0Constants& k);

template <class P>
concept LinearCriterion = P::kLinear && requires(const P& p, const NodeTerms& n) {
  { p.gain_terms(n) } -> std::same_as<kernels::GainTerms>;
};

/// Gain of inserting the detached node described by `node` into community
/// `c`, given d_w(i, c) = `dw`.
template <class P>
double criterion_gain(const P& policy, const CommunitySums& s, const NodeTerms& node, CommunityId c,
                      double dw) {
  if constexpr (LinearCriterion<P>) {
    return kernels::linear_gain(policy.gain_terms(node), dw, s.tot[c], s.size[c], s.aux[c]);
  } else {
    return policy.gain(s, node, c, dw);
  }
}

/// Criterion bookkeeping for one level: the partition plus the per-community
/// sums, updated through remove/insert exactly as the local-move loop needs.
template <class P>
class CriterionState {
 public:
  /// INIT for every node: singleton partition.
  CriterionState(P policy, const Graph& g) : policy_(std::move(policy)), graph_(&g) {
    assign(Partition::singletons(g.num_nodes()));
  }

  const P& policy() const noexcept { return policy_; }
  const Graph& graph() const noexcept { return *graph_; }
  const Partition& partition() const noexcept { return partition_; }
  const CommunitySums& sums() const noexcept { return sums_; }

  NodeTerms node(NodeId i) const noexcept {
    return {graph_->loop_weight(i), graph_->weighted_degree(i),
            static_cast<double>(graph_->node_size(i)), graph_->node_aux(i)};
  }

  void remove(NodeId i, CommunityId c, double dw) {
    if (partition_[i] != c) {
      throw Error(Errc::NodeNotInCommunity,
                  "node " + std::to_string(i) + " is not in community " + std::to_string(c));
    }
    const NodeTerms n = node(i);
    sums_.in[c] -= 2.0 * dw + n.loop;
    sums_.tot[c] -= n.degree;
    sums_.size[c] -= n.size;
    sums_.aux[c] -= n.aux;
    if (--sums_.members[c] == 0) --sums_.kappa;
    partition_[i] = kNoCommunity;
  }

  void insert(NodeId i, CommunityId c, double dw) {
    if (partition_[i] != kNoCommunity) {
      throw Error(Errc::NodeAlreadyPlaced, "node " + std::to_string(i) + " is already placed");
    }
    check_community(c);
    const NodeTerms n = node(i);
    sums_.in[c] += 2.0 * dw + n.loop;
    sums_.tot[c] += n.degree;
    sums_.size[c] += n.size;
    sums_.aux[c] += n.aux;
    if (sums_.members[c]++ == 0) ++sums_.kappa;
    partition_[i] = c;
  }

  double gain(NodeId i, CommunityId c, double dw) const {
    check_community(c);
    return criterion_gain(policy_, sums_, node(i), c, dw);
  }

  /// Exact quality of the current partition (not scaled).
  double total() const { return policy_.total(sums_); }

  /// Rebuilds every accumulator from scratch for partition `p`.
  void assign(const Partition& p) {
    const Graph& g = *graph_;
    const std::size_t n = g.num_nodes();
    sums_.reset(n);
    partition_ = p;
    for (NodeId i = 0; i < n; ++i) {
      const CommunityId c = p[i];
      check_community(c);
      const NodeTerms t = node(i);
      sums_.in[c] += t.loop;
      sums_.tot[c] += t.degree;
      sums_.size[c] += t.size;
      sums_.aux[c] += t.aux;
      if (sums_.members[c]++ == 0) ++sums_.kappa;
      auto nbrs = g.neighbors(i);
      auto ws = g.neighbor_weights(i);
      for (std::size_t k = 0; k < nbrs.size(); ++k) {
        if (p[nbrs[k]] == c) sums_.in[c] += ws[k];
      }
    }
  }

 private:
  void check_community(CommunityId c) const {
    if (c >= sums_.in.size()) {
      throw Error(Errc::UnknownCommunity, "community id " + std::to_string(c) + " out of range");
    }
  }

  P policy_;
  const Graph* graph_;
  Partition partition_;
  CommunitySums sums_;
};

/// Quality of `p` on `g` computed from community aggregates (the optimizer's
/// own bookkeeping path).
double aggregate_total(const CriterionSpec& spec, const Graph& g, const Partition& p);

/// Quality of `flat` on the level-0 graph `g0` by the literal double sum over
/// ordered node pairs. Independent of CommunitySums; used as an oracle.
double relational_total(const CriterionSpec& spec, const Graph& g0, const Partition& flat);

/// Positive ratio between quality differences and gain differences.
double gain_scale(CriterionId id) noexcept;

}  // namespace genlouvain
