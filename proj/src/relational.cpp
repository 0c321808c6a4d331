#include <algorithm>
#include <unordered_map>

#include "genlouvain/criteria.hpp"
#include "genlouvain/kernels.hpp"

namespace genlouvain {

double relational_total(const CriterionSpec& spec, const Graph& g0, const Partition& flat) {
  const std::size_t n = g0.num_nodes();
  if (flat.size() != n) {
    throw Error(Errc::CoverageMismatch, "partition covers " + std::to_string(flat.size()) +
                                            " nodes, graph has " + std::to_string(n));
  }
  // same validation as the aggregate path
  make_criterion(spec, g0.globals());

  // Everything below is recomputed from the raw adjacency.
  std::vector<double> degree(n, 0.0);
  std::vector<double> loop(n, 0.0);
  double w_max = 0.0;
  double squares = 0.0;
  for (NodeId i = 0; i < n; ++i) {
    loop[i] = g0.loop_weight(i);
    degree[i] = loop[i];
    w_max = std::max(w_max, loop[i]);
    squares += loop[i] * loop[i];
    for (double w : g0.neighbor_weights(i)) {
      degree[i] += w;
      w_max = std::max(w_max, w);
      squares += w * w;
    }
  }
  if (w_max == 0.0) w_max = 1.0;
  double two_m = 0.0;
  for (double d : degree) two_m += d;

  std::unordered_map<CommunityId, double> community_size;
  for (std::size_t i = 0; i < n; ++i) {
    if (flat[i] == kNoCommunity) {
      throw Error(Errc::CoverageMismatch, "node " + std::to_string(i) + " has no community");
    }
    community_size[flat[i]] += 1.0;
  }

  const double nn = static_cast<double>(n);
  const double alpha = spec.alpha;
  const double complement_mass = w_max * nn * nn - two_m;
  const std::span<const double> v =
      spec.id == CriterionId::Marcotorchino ? std::span<const double>(loop) : std::span<const double>(degree);

  std::vector<double> row(n, 0.0);
  double total = 0.0;
  for (NodeId i = 0; i < n; ++i) {
    auto nbrs = g0.neighbors(i);
    auto ws = g0.neighbor_weights(i);
    for (std::size_t k = 0; k < nbrs.size(); ++k) row[nbrs[k]] = ws[k];
    row[i] = loop[i];

    const double d = degree[i];
    kernels::RowTerms t;
    switch (spec.id) {
      case CriterionId::NewmanGirvan:  // (w - d_i d_j / 2m) x
        t.same_w = 1.0;
        t.same_v = -d / two_m;
        break;
      case CriterionId::ZahnCondorcet:  // w x + (W - w)(1 - x)
        t.same_w = 1.0;
        t.other_const = w_max;
        t.other_w = -1.0;
        break;
      case CriterionId::OwsinskiZadrozny:  // (1 - a) w x + a (W - w)(1 - x)
        t.same_w = 1.0 - alpha;
        t.other_const = alpha * w_max;
        t.other_w = -alpha;
        break;
      case CriterionId::Marcotorchino:  // a x + ((a_ii + a_jj)/2 - a)(1 - x)
        t.same_w = 1.0;
        t.other_const = 0.5 * loop[i];
        t.other_w = -1.0;
        t.other_v = 0.5;
        break;
      case CriterionId::BalancedModularity: {
        // (w - d_i d_j / 2m) x + ((W - w) - (Wn - d_i)(Wn - d_j) / (Wn^2 - 2m))(1 - x)
        const double ci = w_max * nn - d;
        t.same_w = 1.0;
        t.same_v = -d / two_m;
        t.other_const = w_max - ci * w_max * nn / complement_mass;
        t.other_w = -1.0;
        t.other_v = ci / complement_mass;
        break;
      }
      case CriterionId::DeviationToIndetermination:  // (w - d_i/n - d_j/n + 2m/n^2) x
        t.same_const = -d / nn + two_m / (nn * nn);
        t.same_w = 1.0;
        t.same_v = -1.0 / nn;
        break;
      case CriterionId::DeviationToUniformity:  // (w - 2m/n^2) x
        t.same_const = -two_m / (nn * nn);
        t.same_w = 1.0;
        break;
      case CriterionId::Goldberg:  // w x / |C_i|
        t.same_w = 1.0 / community_size[flat[i]];
        break;
      case CriterionId::ProfileDifference:  // 2 w x / |C_i|
        t.same_w = 2.0 / community_size[flat[i]];
        break;
    }
    total += kernels::masked_affine_row_sum(t, row, v, flat.labels(), flat[i]);

    for (NodeId j : nbrs) row[j] = 0.0;
    row[i] = 0.0;
  }
  if (spec.id == CriterionId::ProfileDifference) {
    total -= static_cast<double>(community_size.size()) + squares;
  }
  return total;
}

}  // namespace genlouvain
