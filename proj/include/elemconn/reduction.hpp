#pragma once

#include <utility>
#include <vector>

#include "elemconn/connectivity.hpp"
#include "elemconn/graph.hpp"

namespace elemconn {

enum class Decision { remove, contract };

struct ReductionResult {
  ColoredMultigraph reduced;
  MinorTrace trace;
  PairTable baseline;  // kappa' of every black pair; left empty when nothing needed classifying
  std::vector<std::pair<EdgeId, Decision>> decisions;
};

// Delete when every black pair keeps its baseline value in g - e, otherwise
// contract. e must join two whites.
Decision classify_edge(const ColoredMultigraph& g, EdgeId e, const PairTable& baseline);

// Removes every white-white edge (smallest (min endpoint, max endpoint, id)
// first) and subdivides black-black edges, keeping all pairwise kappa' values.
// With `verify`, the full table is recomputed after each step and a mismatch
// throws ConsistencyError.
ReductionResult reduce_to_bipartite(const ColoredMultigraph& g, bool verify = false);

}  // namespace elemconn
