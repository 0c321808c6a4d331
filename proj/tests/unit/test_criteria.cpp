#include <gtest/gtest.h>

#include <numeric>

#include "genlouvain/criteria.hpp"
#include "genlouvain/io.hpp"
#include "genlouvain/oracle.hpp"
#include "support/probes.hpp"

namespace genlouvain {
namespace {

using testing::graph_from_pairs;
using testing::random_criterion_graph;
using testing::random_partition;
using testing::relative_error;

template <class P>
CriterionState<P> state_for(const Graph& g) {  // g must outlive the state
  return CriterionState<P>(P(g.globals()), g);
}

template <class F>
void expect_errc(Errc code, F&& f) {
  try {
    f();
    ADD_FAILURE() << "expected " << to_string(code);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

// -- contract examples -------------------------------------------------------

TEST(CriterionInit, KarateNewmanGirvan) {
  const auto karate = io::read_edge_list_file(GENLOUVAIN_TEST_DATA "/karate.txt");
  auto st = state_for<criteria::NewmanGirvan>(karate.graph);
  const auto& s = st.sums();
  EXPECT_EQ(std::accumulate(s.tot.begin(), s.tot.end(), 0.0), 156.0);
  for (double in : s.in) EXPECT_EQ(in, 0.0);
  EXPECT_EQ(s.kappa, 34u);
}

TEST(CriterionInit, LoopIsInternalWeight) {
  const Graph g = Graph::from_edges(1, std::vector<Edge>{{0, 0, 3.0}});
  auto st = state_for<criteria::ZahnCondorcet>(g);
  EXPECT_EQ(st.sums().in[0], 3.0);
  EXPECT_EQ(st.sums().size[0], 1.0);
}

TEST(CriterionInit, ZeroEdgeMassRejected) {
  const Graph g = Graph::from_edges(3, std::vector<Edge>{});
  for (CriterionId id : {CriterionId::NewmanGirvan, CriterionId::BalancedModularity,
                         CriterionId::DeviationToIndetermination,
                         CriterionId::DeviationToUniformity, CriterionId::ProfileDifference,
                         CriterionId::Marcotorchino}) {
    expect_errc(Errc::ZeroEdgeMass, [&] { make_criterion({id}, g.globals()); });
  }
  EXPECT_NO_THROW(make_criterion({CriterionId::ZahnCondorcet}, g.globals()));
  EXPECT_NO_THROW(make_criterion({CriterionId::Goldberg}, g.globals()));
}

TEST(CriterionInit, BalancedModularityNeedsAbsentLinks) {
  // every ordered pair, diagonal included, at full weight: no complement mass
  const Graph g = Graph::from_edges(
      2, std::vector<Edge>{{0, 1, 1.0}, {0, 0, 1.0}, {1, 1, 1.0}});
  expect_errc(Errc::DegenerateComplement,
              [&] { make_criterion({CriterionId::BalancedModularity}, g.globals()); });
}

TEST(Pretreat, ProfileDifferenceOnTriangle) {
  const Graph g = pretreat({CriterionId::ProfileDifference}, testing::triangle());
  for (NodeId i = 0; i < 3; ++i) {
    for (double w : g.neighbor_weights(i)) EXPECT_DOUBLE_EQ(w, 0.5);
    EXPECT_EQ(g.loop_weight(i), 0.0);
  }
  EXPECT_DOUBLE_EQ(g.globals().squared_weight_sum, 1.5);
}

TEST(Pretreat, MarcotorchinoOnTriangle) {
  const Graph g = pretreat({CriterionId::Marcotorchino}, testing::triangle());
  for (NodeId i = 0; i < 3; ++i) {
    for (double w : g.neighbor_weights(i)) EXPECT_DOUBLE_EQ(w, 1.0 / 3.0);
    EXPECT_DOUBLE_EQ(g.loop_weight(i), 1.0 / 3.0);
    EXPECT_DOUBLE_EQ(g.node_aux(i), 1.0 / 3.0);
  }
}

TEST(Pretreat, MarcotorchinoRejectsWeightedInput) {
  const Graph g = graph_from_pairs(2, {{0, 1}}, 2.0);
  expect_errc(Errc::WeightedInputNotSupported,
              [&] { pretreat({CriterionId::Marcotorchino}, g); });
}

TEST(Pretreat, OthersAreIdentity) {
  const Graph raw = testing::two_triangles();
  const Graph g = pretreat({CriterionId::NewmanGirvan}, raw);
  EXPECT_EQ(g.edges().size(), raw.edges().size());
  EXPECT_EQ(g.globals().two_m, raw.globals().two_m);
}

TEST(CriterionRemove, SoleMemberLeavesEmptyCommunity) {
  const Graph g = testing::triangle();
  auto st = state_for<criteria::ZahnCondorcet>(g);
  st.remove(1, 1, 0.0);
  EXPECT_EQ(st.sums().in[1], 0.0);
  EXPECT_EQ(st.sums().size[1], 0.0);
  EXPECT_EQ(st.partition()[1], kNoCommunity);
}

TEST(CriterionRemove, PairLosesBothOrientations) {
  const Graph g = graph_from_pairs(2, {{0, 1}}, 2.0);
  auto st = state_for<criteria::ZahnCondorcet>(g);
  st.assign(Partition(std::vector<CommunityId>{0, 0}));
  EXPECT_EQ(st.sums().in[0], 4.0);
  st.remove(0, 0, 2.0);
  EXPECT_EQ(st.sums().in[0], 0.0);
}

TEST(CriterionRemove, KappaDropsWhenCommunityEmpties) {
  const Graph g = pretreat({CriterionId::ProfileDifference}, testing::triangle());
  auto st = state_for<criteria::ProfileDifference>(g);
  EXPECT_EQ(st.sums().kappa, 3u);
  st.remove(0, 0, 0.0);
  EXPECT_EQ(st.sums().kappa, 2u);
  st.insert(0, 1, 0.5);
  EXPECT_EQ(st.sums().kappa, 2u);
}

TEST(CriterionRemove, WrongCommunityIsAnError) {
  const Graph g = testing::triangle();
  auto st = state_for<criteria::NewmanGirvan>(g);
  expect_errc(Errc::NodeNotInCommunity, [&] { st.remove(0, 1, 0.0); });
}

TEST(CriterionInsert, IntoEmptyCommunity) {
  const Graph g = Graph::from_edges(2, std::vector<Edge>{{0, 0, 2.0}, {0, 1, 1.0}});
  auto st = state_for<criteria::ZahnCondorcet>(g);
  st.remove(0, 0, 0.0);
  st.insert(0, 0, 0.0);
  EXPECT_EQ(st.sums().in[0], 2.0);
  EXPECT_EQ(st.sums().size[0], 1.0);
}

TEST(CriterionInsert, TotalDegreeAccumulates) {
  // node 0 has degree 4; community {1,2,3,4} has total degree 10
  const Graph g = graph_from_pairs(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {2, 3}, {3, 4}});
  auto st = state_for<criteria::NewmanGirvan>(g);
  st.assign(Partition(std::vector<CommunityId>{0, 1, 1, 1, 1}));
  EXPECT_EQ(st.sums().tot[1], 10.0);
  st.remove(0, 0, 0.0);
  st.insert(0, 1, 4.0);
  EXPECT_EQ(st.sums().tot[1], 14.0);
}

TEST(CriterionInsert, PlacedNodeIsAnError) {
  const Graph g = testing::triangle();
  auto st = state_for<criteria::NewmanGirvan>(g);
  expect_errc(Errc::NodeAlreadyPlaced, [&] { st.insert(0, 1, 1.0); });
}

TEST(CriterionInsert, OutOfRangeCommunityIsAnError) {
  const Graph g = testing::triangle();
  auto st = state_for<criteria::NewmanGirvan>(g);
  st.remove(0, 0, 0.0);
  expect_errc(Errc::UnknownCommunity, [&] { st.insert(0, 7, 0.0); });
  expect_errc(Errc::UnknownCommunity, [&] { (void)st.gain(0, 7, 0.0); });
}

TEST(CriterionGain, NewmanGirvanEmptyTargetIsZero) {
  const Graph g = testing::triangle();
  auto st = state_for<criteria::NewmanGirvan>(g);
  st.remove(0, 0, 0.0);
  EXPECT_EQ(st.gain(0, 0, 0.0), 0.0);
}

TEST(CriterionGain, ProfileDifferenceEmptyBranch) {
  const Graph g = Graph::from_edges(1, std::vector<Edge>{{0, 0, 1.0}});
  auto st = state_for<criteria::ProfileDifference>(g);
  st.remove(0, 0, 0.0);
  EXPECT_DOUBLE_EQ(st.gain(0, 0, 0.0), 0.5);
}

TEST(CriterionGain, ZahnCondorcetPrefersMergingAnEdge) {
  const Graph g = graph_from_pairs(2, {{0, 1}});
  auto st = state_for<criteria::ZahnCondorcet>(g);
  st.remove(0, 0, 0.0);
  EXPECT_EQ(st.gain(0, 1, 1.0), 1.0);
  EXPECT_EQ(st.gain(0, 0, 0.0), 0.0);
  EXPECT_DOUBLE_EQ(oracle::delta_oracle({CriterionId::ZahnCondorcet}, g, Partition::singletons(2), 0, 1),
                   2.0);
}

TEST(CriterionTotal, NewmanGirvanSingleCommunityIsZero) {
  const Graph g = testing::two_triangles();
  EXPECT_NEAR(aggregate_total({CriterionId::NewmanGirvan}, g, Partition(std::vector<CommunityId>(6, 0))),
              0.0, 1e-12);
}

TEST(CriterionTotal, DeviationToUniformitySingleCommunityIsZero) {
  const Graph g = testing::two_triangles();
  EXPECT_NEAR(aggregate_total({CriterionId::DeviationToUniformity}, g,
                              Partition(std::vector<CommunityId>(6, 0))),
              0.0, 1e-12);
}

TEST(CriterionTotal, ZahnCondorcetSingletons) {
  const Graph g = testing::two_triangles();  // n = 6, 2m = 12
  EXPECT_DOUBLE_EQ(aggregate_total({CriterionId::ZahnCondorcet}, g, Partition::singletons(6)),
                   36.0 - 6.0 - 12.0);
}

TEST(CriterionTotal, RelationalSingletonMatchesInit) {
  const Graph g = testing::two_triangles();
  for (CriterionId id : kAllCriteria) {
    const CriterionSpec spec{id};
    const Graph h = needs_pretreatment(id) ? pretreat(spec, g) : g;
    const double init = std::visit(
        [&](const auto& policy) { return CriterionState(policy, h).total(); },
        make_criterion(spec, h.globals()));
    EXPECT_NEAR(relational_total(spec, h, Partition::singletons(6)), init, 1e-12)
        << to_string(id);
  }
}

TEST(CriterionTotal, RelationalRejectsPartialCoverage) {
  expect_errc(Errc::CoverageMismatch, [] {
    relational_total({CriterionId::NewmanGirvan}, testing::triangle(), Partition::singletons(2));
  });
}

TEST(CriterionParse, IdsRoundTrip) {
  for (CriterionId id : kAllCriteria) EXPECT_EQ(parse_criterion(to_string(id)).id, id);
}

TEST(CriterionParse, NonPluggableCriteriaRejected) {
  for (const char* name : {"mg", "sm", "md"}) {
    try {
      parse_criterion(name);
      ADD_FAILURE() << name;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::NotPluggable);
      EXPECT_NE(std::string(e.what()).find("not pluggable"), std::string::npos);
    }
  }
}

TEST(CriterionParse, BadInputs) {
  expect_errc(Errc::UnknownCriterion, [] { parse_criterion("nope"); });
  expect_errc(Errc::InvalidAlpha, [] { parse_criterion("oz", 0.0); });
  expect_errc(Errc::InvalidAlpha, [] { parse_criterion("oz", 1.0); });
  EXPECT_EQ(parse_criterion("oz", 0.25).alpha, 0.25);
}

// -- properties over every criterion ----------------------------------------

class EveryCriterion : public ::testing::TestWithParam<CriterionId> {
 protected:
  CriterionSpec spec() const { return {GetParam(), 0.3}; }
};

TEST_P(EveryCriterion, AggregateMatchesRelational) {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + rng() % 30;
    const Graph g = random_criterion_graph(spec(), n, 0.1 + 0.4 * (trial % 5) / 4.0, trial % 2, rng);
    const Partition p = random_partition(n, 1 + rng() % n, rng);
    const double fast = aggregate_total(spec(), g, p);
    const double slow = relational_total(spec(), g, p);
    EXPECT_LE(relative_error(fast, slow), 1e-9) << fast << " vs " << slow;
  }
}

TEST_P(EveryCriterion, GainDifferencesMatchBruteForce) {
  std::mt19937_64 rng(202);
  const double lambda = gain_scale(GetParam());
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 2 + rng() % 10;
    const Graph g = random_criterion_graph(spec(), n, 0.4, trial % 2, rng);
    const Partition p = random_partition(n, 1 + rng() % n, rng);
    const auto i = static_cast<NodeId>(rng() % n);
    const std::size_t k = p.num_communities();
    const CommunityId target =
        rng() % 4 == 0 ? kNoCommunity : static_cast<CommunityId>(rng() % k);
    const auto probe = testing::probe_move(spec(), g, p, i, target);
    EXPECT_LE(std::abs(probe.delta_quality - lambda * probe.delta_gain),
              1e-9 * probe.quality_scale)
        << "dF " << probe.delta_quality << " dgain " << probe.delta_gain;
  }
}

TEST_P(EveryCriterion, MovingToOwnCommunityChangesNothing) {
  std::mt19937_64 rng(303);
  const Graph g = random_criterion_graph(spec(), 8, 0.4, true, rng);
  const Partition p = random_partition(8, 3, rng);
  for (NodeId i = 0; i < 8; ++i) {
    EXPECT_EQ(oracle::delta_oracle(spec(), g, p, i, p[i]), 0.0);
    EXPECT_EQ(testing::probe_move(spec(), g, p, i, p[i]).delta_gain, 0.0);
  }
}

TEST_P(EveryCriterion, RemoveInsertRestoresAccumulators) {
  std::mt19937_64 rng(404);
  for (int trial = 0; trial < 20; ++trial) {
    const bool unit = trial % 2 == 0;
    const Graph g = random_criterion_graph(spec(), 20, 0.3, unit, rng);
    const Partition p = random_partition(20, 5, rng);
    std::visit(
        [&](const auto& policy) {
          CriterionState st(policy, g);
          st.assign(p);
          const CommunitySums before = st.sums();
          for (NodeId i = 0; i < 20; ++i) {
            double dw = 0.0;
            for (const auto& [c, w] : neighbor_community_weights(g, i, p)) {
              if (c == p[i]) dw = w;
            }
            st.remove(i, p[i], dw);
            st.insert(i, p[i], dw);
          }
          const CommunitySums& after = st.sums();
          // exact arithmetic only for integer-valued working weights
          const bool exact = unit && !needs_pretreatment(GetParam());
          const double tol = exact ? 0.0 : 1e-12;
          for (std::size_t c = 0; c < 20; ++c) {
            EXPECT_NEAR(after.in[c], before.in[c], tol);
            EXPECT_NEAR(after.tot[c], before.tot[c], tol);
            EXPECT_EQ(after.size[c], before.size[c]);
            EXPECT_NEAR(after.aux[c], before.aux[c], tol);
            EXPECT_EQ(after.members[c], before.members[c]);
          }
          EXPECT_EQ(after.kappa, before.kappa);
          EXPECT_EQ(st.partition(), p);
        },
        make_criterion(spec(), g.globals()));
  }
}

TEST_P(EveryCriterion, RandomMovesKeepAccumulatorsFresh) {
  std::mt19937_64 rng(505);
  const Graph g = random_criterion_graph(spec(), 25, 0.3, false, rng);
  std::visit(
      [&](const auto& policy) {
        CriterionState st(policy, g);
        for (int step = 0; step < 500; ++step) {
          const Partition p = st.partition();
          const auto i = static_cast<NodeId>(rng() % 25);
          const auto target = static_cast<CommunityId>(rng() % 25);
          auto weights = neighbor_community_weights(g, i, p);
          auto dw_of = [&](CommunityId c) {
            for (const auto& [d, w] : weights) {
              if (d == c) return w;
            }
            return 0.0;
          };
          st.remove(i, p[i], dw_of(p[i]));
          st.insert(i, target, dw_of(target));
          ASSERT_EQ(st.sums().kappa, st.partition().num_communities());
        }
        CriterionState fresh(policy, g);
        fresh.assign(st.partition());
        for (std::size_t c = 0; c < 25; ++c) {
          EXPECT_NEAR(st.sums().in[c], fresh.sums().in[c], 1e-9);
          EXPECT_NEAR(st.sums().tot[c], fresh.sums().tot[c], 1e-9);
          EXPECT_EQ(st.sums().size[c], fresh.sums().size[c]);
          EXPECT_NEAR(st.sums().aux[c], fresh.sums().aux[c], 1e-9);
        }
        EXPECT_LE(relative_error(st.total(), fresh.total()), 1e-9);
      },
      make_criterion(spec(), g.globals()));
}

TEST_P(EveryCriterion, AggregatedGraphEvaluatesTheSame) {
  std::mt19937_64 rng(606);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + rng() % 48;
    const Graph g = random_criterion_graph(spec(), n, 0.2, trial % 2, rng);
    const Partition p = random_partition(n, 1 + rng() % n, rng);
    const Graph meta = aggregate(g, p);
    EXPECT_LE(relative_error(aggregate_total(spec(), meta, Partition::singletons(meta.num_nodes())),
                             relational_total(spec(), g, p)),
              1e-9);
  }
}

INSTANTIATE_TEST_SUITE_P(All, EveryCriterion, ::testing::ValuesIn(kAllCriteria),
                         [](const auto& info) { return std::string(to_string(info.param)); });

}  // namespace
}  // namespace genlouvain
