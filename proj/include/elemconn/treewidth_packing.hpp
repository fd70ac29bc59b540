#pragma once

#include <cstdint>
#include <vector>

#include "elemconn/graph.hpp"
#include "elemconn/subgraph.hpp"
#include "elemconn/tree_decomposition.hpp"

namespace elemconn {

// max(1, floor(k / (12 r^2 log2(3r)))).
int treewidth_packing_floor(int k, int r);

struct TreewidthStats {
  int r = 0;                     // width + 1 of the input decomposition
  int levels = 0;
  int max_core_iterations = 0;   // peeling rounds in the worst level
  int cores_contracted = 0;
  bool fell_back = false;        // some level had no usable core
};

// Element-disjoint Steiner trees on T in a graph of treewidth < r, where r
// is read off `td`. Small terminal sets go straight to the random-coloring
// packer; larger ones contract an internally well-connected core per level.
Packing pack_treewidth_trees(const ColoredMultigraph& g, const std::vector<VertexId>& terminals, int k,
                             const TreeDecomposition& td, std::uint64_t seed = 1,
                             TreewidthStats* stats = nullptr);

}  // namespace elemconn
