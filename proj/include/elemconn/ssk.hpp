#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "elemconn/graph.hpp"

namespace elemconn {

// Colors of `graph` are ignored; only costs, root and terminals matter.
struct SskInstance {
  ColoredMultigraph graph;
  VertexId root = 0;
  std::vector<VertexId> terminals;
  int k = 1;
};

struct Augmentation {
  VertexId terminal = 0;
  std::vector<std::vector<VertexId>> paths;  // terminal .. endpoint
  std::vector<std::vector<EdgeId>> path_edges;
  Cost cost{0};
};

// Cheapest k internally disjoint paths from t to `connected` plus the root,
// each terminal of `connected` ending at most one path. Edges in `bought`
// cost nothing. nullopt when no k such paths exist.
std::optional<Augmentation> min_cost_augmentation(const SskInstance& inst, VertexId t,
                                                  const std::set<VertexId>& connected,
                                                  const std::set<EdgeId>& bought = {});

// Throws ConsistencyError unless `aug` has the structure promised above.
void check_augmentation(const SskInstance& inst, const std::set<VertexId>& connected,
                        const Augmentation& aug);

struct SskResult {
  std::set<EdgeId> edges;
  Cost cost{0};
  std::vector<VertexId> order;
  std::vector<Augmentation> steps;
  std::vector<Cost> step_costs;  // price paid for new edges at each step
};

struct SskReport {
  bool pass = true;
  std::map<VertexId, int> connectivity;  // per terminal, capped at k
  std::vector<VertexId> failures;
};

SskReport verify_ssk_feasible(const std::set<EdgeId>& h, const SskInstance& inst);

// Random terminal order, then one min-cost augmentation per terminal. With
// `check_steps`, the partial solution is re-verified after every step.
// Throws Infeasible if some terminal is not k-connected to the root.
SskResult greedy_ssk(const SskInstance& inst, std::uint64_t seed, bool check_steps = false);

}  // namespace elemconn
