#include "elemconn/reduction.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <tuple>

#include "elemconn/errors.hpp"

namespace elemconn {

namespace {

void require_white_white(const ColoredMultigraph& g, EdgeId e) {
  const Edge& ed = g.edge(e);
  if (!g.is_white(ed.u) || !g.is_white(ed.v)) {
    throw InvalidArgument("edge " + std::to_string(e) + " does not join two whites");
  }
}

std::optional<EdgeId> first_white_white(const ColoredMultigraph& g) {
  std::optional<std::tuple<VertexId, VertexId, EdgeId>> best;
  for (const auto& [e, ed] : g.edges()) {
    if (!g.is_white(ed.u) || !g.is_white(ed.v)) continue;
    std::tuple<VertexId, VertexId, EdgeId> key{std::min(ed.u, ed.v), std::max(ed.u, ed.v), e};
    if (!best || key < *best) best = key;
  }
  if (!best) return std::nullopt;
  return std::get<2>(*best);
}

// Remembers, per pair, the edges of one maximum path system. Deleting an edge
// outside that system cannot lower the pair's value, which skips most flows.
class CachedClassifier {
 public:
  explicit CachedClassifier(const PairTable& baseline) : baseline_(baseline) {}

  Decision classify(const ColoredMultigraph& g, EdgeId e) {
    ColoredMultigraph without = delete_edge(g, e);
    for (const auto& [pair, value] : baseline_) {
      auto it = witness_.find(pair);
      if (it != witness_.end() && !it->second.count(e)) continue;
      ElementCutResult r = element_connectivity(without, pair.first, pair.second);
      if (r.value != value) return Decision::contract;
      std::set<EdgeId> used;
      for (const auto& path : r.witness_edges) used.insert(path.begin(), path.end());
      witness_[pair] = std::move(used);
    }
    return Decision::remove;
  }

  void forget() { witness_.clear(); }

 private:
  const PairTable& baseline_;
  std::map<VertexPair, std::set<EdgeId>> witness_;
};

}  // namespace

Decision classify_edge(const ColoredMultigraph& g, EdgeId e, const PairTable& baseline) {
  require_white_white(g, e);
  ColoredMultigraph without = delete_edge(g, e);
  for (const auto& [pair, value] : baseline) {
    if (element_connectivity_value(without, pair.first, pair.second, value) < value) {
      return Decision::contract;
    }
  }
  return Decision::remove;
}

ReductionResult reduce_to_bipartite(const ColoredMultigraph& g, bool verify) {
  ReductionResult res;
  auto [work, trace] = subdivide_terminal_edges(g);
  res.trace = std::move(trace);
  // The table is only needed when some edge has to be classified.
  if (verify || has_white_white_edge(work)) {
    res.baseline = all_pairs_element_connectivity(work, black_pairs(work));
  }
  CachedClassifier classifier(res.baseline);
  while (auto e = first_white_white(work)) {
    Decision d = classifier.classify(work, *e);
    if (d == Decision::remove) {
      res.trace.append(work.delete_edge_inplace(*e));
    } else {
      res.trace.append(work.contract_edge_inplace(*e));
      classifier.forget();
    }
    res.decisions.push_back({*e, d});
    if (verify) {
      PairTable now = all_pairs_element_connectivity(work, black_pairs(work));
      if (now != res.baseline) {
        throw ConsistencyError(std::string("element connectivity changed after ") +
                               (d == Decision::remove ? "deleting" : "contracting") + " edge " +
                               std::to_string(*e));
      }
    }
  }
  res.reduced = std::move(work);
  return res;
}

}  // namespace elemconn
