#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "elemconn/graph.hpp"
#include "elemconn/subgraph.hpp"

namespace elemconn {

using Groups = std::vector<std::vector<VertexId>>;

// Count floors promised by the packers; logs are base 2.
int tree_packing_floor(int k, std::size_t terminals);
int forest_packing_floor(int k, std::size_t terminals, std::size_t groups);

struct TreePackingStats {
  int colors_tried = 0;   // largest color count attempted
  int attempts = 0;
  int colors_used = 0;    // size of the returned packing
};

// Element-disjoint Steiner trees on T. Colors whites of the reduced graph
// with max(1, floor(k / (6 log2 |T|))) colors, re-seeding and halving on
// failure. |T| = 2 uses disjoint paths directly. Throws NoPacking when T is
// disconnected.
Packing pack_trees_random_coloring(const ColoredMultigraph& g, const std::vector<VertexId>& terminals,
                                   int k, std::uint64_t seed, TreePackingStats* stats = nullptr);

// Number of color classes (out of `colors`) that connect `connect` when
// every white gets a uniformly random color and all blacks are shared.
int connecting_color_classes(const ColoredMultigraph& g, const std::vector<VertexId>& connect,
                             int colors, std::uint64_t seed);

struct GoodSeparator {
  std::set<VertexId> cut;
  std::set<VertexId> core;
  int connectivity_floor = 0;
  int iterations = 0;
};

// g must be bipartite between blacks (exactly the group members) and whites.
GoodSeparator find_good_separator(const ColoredMultigraph& g, const Groups& groups, int k);

struct ForestPackingStats {
  int levels = 0;
  int max_separator_iterations = 0;
};

Packing pack_forests(const ColoredMultigraph& g, const Groups& groups, int k, std::uint64_t seed,
                     ForestPackingStats* stats = nullptr);

}  // namespace elemconn
