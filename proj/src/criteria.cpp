#include "genlouvain/criteria.hpp"

#include <algorithm>
#include <cmath>

namespace genlouvain {

namespace {

struct NameEntry {
  std::string_view name;
  CriterionId id;
};

constexpr std::array<NameEntry, 9> kNames{{
    {"ng", CriterionId::NewmanGirvan},
    {"zc", CriterionId::ZahnCondorcet},
    {"oz", CriterionId::OwsinskiZadrozny},
    {"wc", CriterionId::Marcotorchino},
    {"bm", CriterionId::BalancedModularity},
    {"di", CriterionId::DeviationToIndetermination},
    {"du", CriterionId::DeviationToUniformity},
    {"g", CriterionId::Goldberg},
    {"pd", CriterionId::ProfileDifference},
}};

void require_edge_mass(const Level0Constants& k, std::string_view who) {
  if (!(k.two_m > 0.0)) {
    throw Error(Errc::ZeroEdgeMass,
                std::string(who) + " is undefined on a graph with zero total edge weight");
  }
}

template <class F>
double sum_live(const CommunitySums& s, F&& term) {
  double acc = 0.0;
  for (std::size_t c = 0; c < s.members.size(); ++c) {
    if (s.members[c] != 0) acc += term(c);
  }
  return acc;
}

}  // namespace

std::string_view to_string(CriterionId id) noexcept {
  for (const auto& e : kNames) {
    if (e.id == id) return e.name;
  }
  return "?";
}

CriterionSpec parse_criterion(std::string_view name, double alpha) {
  if (name == "mg") {
    throw Error(Errc::NotPluggable,
                "Mancoridis-Gansner (mg) is not pluggable: its inter-community term cannot be "
                "evaluated community by community, so a single move may change every community");
  }
  if (name == "sm") {
    throw Error(Errc::NotPluggable,
                "Shi-Malik (sm) is not pluggable: without a fixed number of communities its "
                "optimum is trivial (all nodes in one community)");
  }
  if (name == "md") {
    throw Error(Errc::NotPluggable,
                "Michalski-Decaestecker (md) is not pluggable: it needs the number of communities "
                "fixed in advance, otherwise every node ends up isolated");
  }
  for (const auto& e : kNames) {
    if (e.name != name) continue;
    if (e.id == CriterionId::OwsinskiZadrozny && !(alpha > 0.0 && alpha < 1.0)) {
      throw Error(Errc::InvalidAlpha, "oz requires 0 < alpha < 1, got " + std::to_string(alpha));
    }
    return {e.id, alpha};
  }
  throw Error(Errc::UnknownCriterion, "unknown criterion '" + std::string(name) +
                                          "' (expected ng, zc, oz, wc, bm, di, du, g or pd)");
}

bool needs_pretreatment(CriterionId id) noexcept {
  return id == CriterionId::Marcotorchino || id == CriterionId::ProfileDifference;
}

Graph pretreat(const CriterionSpec& spec, const Graph& g0) {
  const std::size_t n = g0.num_nodes();
  if (spec.id == CriterionId::Marcotorchino) {
    if (!g0.globals().unit_weights) {
      throw Error(Errc::WeightedInputNotSupported,
                  "wc (Marcotorchino) is limited to non-weighted graphs");
    }
    // unit loop on every node, then a-hat
    std::vector<double> degree(n);
    for (NodeId i = 0; i < n; ++i) degree[i] = static_cast<double>(g0.neighbors(i).size()) + 1.0;
    std::vector<Edge> edges;
    std::vector<double> aux(n);
    for (NodeId i = 0; i < n; ++i) {
      for (NodeId j : g0.neighbors(i)) {
        if (i < j) edges.push_back({i, j, 2.0 / (degree[i] + degree[j])});
      }
      aux[i] = 1.0 / degree[i];
      edges.push_back({i, i, aux[i]});
    }
    return Graph::from_edges(n, edges).with_aux(std::move(aux));
  }
  if (spec.id == CriterionId::ProfileDifference) {
    std::vector<Edge> edges;
    for (const Edge& e : g0.edges()) {
      // zero-degree endpoints cannot carry a positive weight, so the
      // denominator is positive for every stored link
      const double denom = g0.weighted_degree(e.u) + g0.weighted_degree(e.v);
      edges.push_back({e.u, e.v, 2.0 * e.weight / denom});
    }
    return Graph::from_edges(n, edges);
  }
  return g0;
}

void CommunitySums::reset(std::size_t n) {
  in.assign(n, 0.0);
  tot.assign(n, 0.0);
  size.assign(n, 0.0);
  aux.assign(n, 0.0);
  members.assign(n, 0);
  kappa = 0;
}

namespace criteria {

NewmanGirvan::NewmanGirvan(const Level0Constants& k) : two_m_(k.two_m) {
  require_edge_mass(k, "ng");
}

double NewmanGirvan::total(const CommunitySums& s) const {
  return sum_live(s, [&](std::size_t c) { return s.in[c] - s.tot[c] * s.tot[c] / two_m_; });
}

ZahnCondorcet::ZahnCondorcet(const Level0Constants& k)
    : w_max_(k.w_max),
      constant_(k.w_max * static_cast<double>(k.n0) * static_cast<double>(k.n0) - k.two_m) {}

double ZahnCondorcet::total(const CommunitySums& s) const {
  return sum_live(s, [&](std::size_t c) { return 2.0 * s.in[c] - w_max_ * s.size[c] * s.size[c]; }) +
         constant_;
}

OwsinskiZadrozny::OwsinskiZadrozny(const Level0Constants& k, double alpha)
    : alpha_(alpha),
      alpha_w_(alpha * k.w_max),
      constant_(alpha * (k.w_max * static_cast<double>(k.n0) * static_cast<double>(k.n0) - k.two_m)) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw Error(Errc::InvalidAlpha, "oz requires 0 < alpha < 1, got " + std::to_string(alpha));
  }
}

double OwsinskiZadrozny::total(const CommunitySums& s) const {
  return sum_live(s, [&](std::size_t c) { return s.in[c] - alpha_w_ * s.size[c] * s.size[c]; }) +
         constant_;
}

Marcotorchino::Marcotorchino(const Level0Constants& k)
    : constant_(static_cast<double>(k.n0) * k.aux_sum - k.two_m) {
  require_edge_mass(k, "wc");
}

double Marcotorchino::total(const CommunitySums& s) const {
  return sum_live(s, [&](std::size_t c) { return 2.0 * s.in[c] - s.size[c] * s.aux[c]; }) + constant_;
}

BalancedModularity::BalancedModularity(const Level0Constants& k)
    : two_m_(k.two_m),
      w_max_(k.w_max),
      wn_(k.w_max * static_cast<double>(k.n0)),
      complement_mass_(k.w_max * static_cast<double>(k.n0) * static_cast<double>(k.n0) - k.two_m) {
  require_edge_mass(k, "bm");
  if (!(complement_mass_ > 0.0)) {
    throw Error(Errc::DegenerateComplement,
                "bm is undefined when every node pair carries the maximum weight");
  }
}

double BalancedModularity::total(const CommunitySums& s) const {
  return sum_live(s, [&](std::size_t c) {
    const double complement = wn_ * s.size[c] - s.tot[c];
    return 2.0 * s.in[c] - s.tot[c] * s.tot[c] / two_m_ - w_max_ * s.size[c] * s.size[c] +
           complement * complement / complement_mass_;
  });
}

DeviationToIndetermination::DeviationToIndetermination(const Level0Constants& k)
    : n_(static_cast<double>(k.n0)),
      density_(k.two_m / (static_cast<double>(k.n0) * static_cast<double>(k.n0))) {
  require_edge_mass(k, "di");
}

double DeviationToIndetermination::total(const CommunitySums& s) const {
  return sum_live(s, [&](std::size_t c) {
    return s.in[c] - 2.0 * s.size[c] * s.tot[c] / n_ + density_ * s.size[c] * s.size[c];
  });
}

DeviationToUniformity::DeviationToUniformity(const Level0Constants& k)
    : density_(k.two_m / (static_cast<double>(k.n0) * static_cast<double>(k.n0))) {
  require_edge_mass(k, "du");
}

double DeviationToUniformity::total(const CommunitySums& s) const {
  return sum_live(s, [&](std::size_t c) { return s.in[c] - density_ * s.size[c] * s.size[c]; });
}

double Goldberg::total(const CommunitySums& s) const {
  return sum_live(s, [&](std::size_t c) { return s.in[c] / s.size[c]; });
}

ProfileDifference::ProfileDifference(const Level0Constants& k) : squared_sum_(k.squared_weight_sum) {
  require_edge_mass(k, "pd");
}

double ProfileDifference::total(const CommunitySums& s) const {
  return 2.0 * sum_live(s, [&](std::size_t c) { return s.in[c] / s.size[c]; }) -
         static_cast<double>(s.kappa) - squared_sum_;
}

}  // namespace criteria

Criterion make_criterion(const CriterionSpec& spec, const Level0Constants& k) {
  using namespace criteria;
  switch (spec.id) {
    case CriterionId::NewmanGirvan: return NewmanGirvan(k);
    case CriterionId::ZahnCondorcet: return ZahnCondorcet(k);
    case CriterionId::OwsinskiZadrozny: return OwsinskiZadrozny(k, spec.alpha);
    case CriterionId::Marcotorchino: return Marcotorchino(k);
    case CriterionId::BalancedModularity: return BalancedModularity(k);
    case CriterionId::DeviationToIndetermination: return DeviationToIndetermination(k);
    case CriterionId::DeviationToUniformity: return DeviationToUniformity(k);
    case CriterionId::Goldberg: return Goldberg(k);
    case CriterionId::ProfileDifference: return ProfileDifference(k);
  }
  throw Error(Errc::UnknownCriterion, "unknown criterion id");
}

double aggregate_total(const CriterionSpec& spec, const Graph& g, const Partition& p) {
  return std::visit(
      [&](const auto& policy) {
        CriterionState state(policy, g);
        state.assign(p);
        return state.total();
      },
      make_criterion(spec, g.globals()));
}

double gain_scale(CriterionId id) noexcept {
  return id == CriterionId::Goldberg ? 1.0 : 2.0;
}

}  // namespace genlouvain
