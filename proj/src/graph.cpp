#include "genlouvain/graph.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <tuple>

namespace genlouvain {

namespace {

std::vector<double> row_sums(const std::vector<std::size_t>& offsets,
                             const std::vector<double>& weights, const std::vector<double>& loops) {
  std::vector<double> degrees(loops.size());
  for (std::size_t i = 0; i < loops.size(); ++i) {
    double d = 0.0;
    for (std::size_t k = offsets[i]; k < offsets[i + 1]; ++k) d += weights[k];
    degrees[i] = d + loops[i];
  }
  return degrees;
}

}  // namespace

Graph Graph::from_edges(std::size_t num_nodes, std::span<const Edge> edges) {
  std::vector<double> loops(num_nodes, 0.0);
  std::vector<Edge> links;
  links.reserve(edges.size());
  for (const Edge& e : edges) {
    assert(e.u < num_nodes && e.v < num_nodes && e.weight >= 0.0);
    if (e.weight == 0.0) continue;
    if (e.u == e.v) {
      loops[e.u] += e.weight;
    } else {
      links.push_back({std::min(e.u, e.v), std::max(e.u, e.v), e.weight});
    }
  }
  std::sort(links.begin(), links.end(),
            [](const Edge& a, const Edge& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
  // merge parallel links
  std::vector<Edge> merged;
  merged.reserve(links.size());
  for (const Edge& e : links) {
    if (!merged.empty() && merged.back().u == e.u && merged.back().v == e.v) {
      merged.back().weight += e.weight;
    } else {
      merged.push_back(e);
    }
  }

  std::vector<std::size_t> offsets(num_nodes + 1, 0);
  for (const Edge& e : merged) {
    ++offsets[e.u + 1];
    ++offsets[e.v + 1];
  }
  std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());
  std::vector<NodeId> targets(offsets.back());
  std::vector<double> weights(offsets.back());
  std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
  // merged is sorted by (u, v): writing the lower-id side first leaves every
  // row sorted by neighbor id
  for (const Edge& e : merged) {
    targets[cursor[e.v]] = e.u;
    weights[cursor[e.v]++] = e.weight;
  }
  for (const Edge& e : merged) {
    targets[cursor[e.u]] = e.v;
    weights[cursor[e.u]++] = e.weight;
  }

  auto globals = std::make_shared<Level0Constants>();
  globals->n0 = num_nodes;
  double w_max = 0.0;
  bool unit = true;
  double squares = 0.0;
  for (double w : weights) {
    w_max = std::max(w_max, w);
    unit = unit && w == 1.0;
    squares += w * w;
  }
  for (double w : loops) {
    if (w == 0.0) continue;
    w_max = std::max(w_max, w);
    unit = unit && w == 1.0;
    squares += w * w;
  }
  globals->w_max = w_max > 0.0 ? w_max : 1.0;
  globals->unit_weights = unit;
  globals->squared_weight_sum = squares;

  Graph g;
  g.offsets_ = std::move(offsets);
  g.targets_ = std::move(targets);
  g.weights_ = std::move(weights);
  g.loops_ = std::move(loops);
  g.degrees_ = row_sums(g.offsets_, g.weights_, g.loops_);
  g.sizes_.assign(num_nodes, 1);
  g.aux_.assign(num_nodes, 0.0);
  globals->two_m = std::accumulate(g.degrees_.begin(), g.degrees_.end(), 0.0);
  g.globals_ = std::move(globals);
  return g;
}

Graph Graph::from_parts(std::vector<std::size_t> offsets, std::vector<NodeId> targets,
                        std::vector<double> weights, std::vector<double> loops,
                        std::vector<std::uint64_t> sizes, std::vector<double> aux,
                        std::shared_ptr<const Level0Constants> globals) {
  assert(offsets.size() == loops.size() + 1);
  assert(sizes.size() == loops.size() && aux.size() == loops.size());
  Graph g;
  g.degrees_ = row_sums(offsets, weights, loops);
  g.offsets_ = std::move(offsets);
  g.targets_ = std::move(targets);
  g.weights_ = std::move(weights);
  g.loops_ = std::move(loops);
  g.sizes_ = std::move(sizes);
  g.aux_ = std::move(aux);
  g.globals_ = std::move(globals);
  return g;
}

std::size_t Graph::num_loops() const noexcept {
  return static_cast<std::size_t>(std::count_if(loops_.begin(), loops_.end(), [](double w) { return w != 0.0; }));
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_links() + num_nodes());
  for (NodeId i = 0; i < num_nodes(); ++i) {
    auto nbrs = neighbors(i);
    auto ws = neighbor_weights(i);
    for (std::size_t k = 0; k < nbrs.size(); ++k) {
      if (i < nbrs[k]) out.push_back({i, nbrs[k], ws[k]});
    }
  }
  for (NodeId i = 0; i < num_nodes(); ++i) {
    if (loops_[i] != 0.0) out.push_back({i, i, loops_[i]});
  }
  return out;
}

Graph Graph::with_aux(std::vector<double> aux) const {
  assert(aux.size() == num_nodes());
  Graph g = *this;
  auto globals = std::make_shared<Level0Constants>(*globals_);
  globals->aux_sum = std::accumulate(aux.begin(), aux.end(), 0.0);
  g.aux_ = std::move(aux);
  g.globals_ = std::move(globals);
  return g;
}

std::vector<std::pair<CommunityId, double>> neighbor_community_weights(const Graph& g, NodeId i,
                                                                       const Partition& p) {
  std::vector<std::pair<CommunityId, double>> out;
  const CommunityId own = p[i];
  if (own != kNoCommunity) out.emplace_back(own, 0.0);
  auto nbrs = g.neighbors(i);
  auto ws = g.neighbor_weights(i);
  for (std::size_t k = 0; k < nbrs.size(); ++k) {
    const CommunityId c = p[nbrs[k]];
    if (c == kNoCommunity) continue;
    auto it = std::find_if(out.begin(), out.end(), [c](const auto& e) { return e.first == c; });
    if (it == out.end()) {
      out.emplace_back(c, ws[k]);
    } else {
      it->second += ws[k];
    }
  }
  return out;
}

Graph aggregate(const Graph& g, const Partition& p) {
  assert(p.size() == g.num_nodes() && p.is_compact());
  const std::size_t k = p.num_communities();
  const auto members = p.groups();

  std::vector<double> loops(k, 0.0);
  std::vector<std::uint64_t> sizes(k, 0);
  std::vector<double> aux(k, 0.0);
  std::vector<std::size_t> offsets(k + 1, 0);
  std::vector<NodeId> targets;
  std::vector<double> weights;

  std::vector<double> scratch(k, 0.0);
  std::vector<CommunityId> touched;
  for (CommunityId c = 0; c < k; ++c) {
    touched.clear();
    for (NodeId i : members[c]) {
      loops[c] += g.loop_weight(i);
      sizes[c] += g.node_size(i);
      aux[c] += g.node_aux(i);
      auto nbrs = g.neighbors(i);
      auto ws = g.neighbor_weights(i);
      for (std::size_t e = 0; e < nbrs.size(); ++e) {
        const CommunityId d = p[nbrs[e]];
        if (d == c) {
          loops[c] += ws[e];  // both orientations are visited: ordered-pair sum
        } else {
          if (scratch[d] == 0.0) touched.push_back(d);
          scratch[d] += ws[e];
        }
      }
    }
    std::sort(touched.begin(), touched.end());
    for (CommunityId d : touched) {
      targets.push_back(d);
      weights.push_back(scratch[d]);
      scratch[d] = 0.0;
    }
    offsets[c + 1] = targets.size();
  }
  return Graph::from_parts(std::move(offsets), std::move(targets), std::move(weights),
                           std::move(loops), std::move(sizes), std::move(aux), g.shared_globals());
}

}  // namespace genlouvain
