#pragma once

#include <map>
#include <optional>
#include <set>
#include <variant>
#include <vector>

#include "elemconn/graph.hpp"
#include "elemconn/steiner_packing.hpp"
#include "elemconn/subgraph.hpp"

namespace elemconn {

bool is_planar(const ColoredMultigraph& g);

// Incident edges of v in clockwise order of some planar embedding, or the
// plain attachment order when g is not planar.
std::vector<EdgeId> rotation_at(const ColoredMultigraph& g, VertexId v);

/// Bipartite graph whose degree-2 whites were folded into black-black edges.
struct ReducedPlanarInstance {
  ColoredMultigraph multigraph;
  MinorTrace lift;  // from the input graph to `multigraph`

  // Input edges that a black-black edge of `multigraph` stands for.
  std::set<EdgeId> expand(EdgeId e) const;
};

ReducedPlanarInstance build_reduced_instance(const ColoredMultigraph& g);

// Contraction threshold: ceil(k/5) - 1 (at least 1) for planar inputs, or
// ceil(k/c) when a genus constant c is given.
struct ThresholdRule {
  int genus_c = 0;
  int need(int k) const;
};

struct HeavyPair {
  VertexId t1 = 0;
  VertexId t2 = 0;
  std::vector<EdgeId> copies;  // every t1-t2 edge, ascending
  std::vector<EdgeId> chosen;  // the first need(k) of them
};

// Black pair of maximum multiplicity (ties: smallest pair). Throws
// ThresholdViolation when it has fewer than need(k) copies.
HeavyPair find_heavy_terminal_pair(const ColoredMultigraph& reduced, int k, const ThresholdRule& rule = {});

struct GridReplacement {
  VertexId terminal = 0;
  std::vector<VertexId> grid;          // row-major, d x d
  std::vector<EdgeId> attachments;     // former edges of the terminal
  std::set<EdgeId> internal;           // grid edges
};

// Swaps black t for a d x d white grid, re-attaching t's edges (in
// rotation order) to the first column.
GridReplacement replace_dead_terminal_inplace(ColoredMultigraph& g, VertexId t);
ColoredMultigraph replace_dead_terminal_with_grid(const ColoredMultigraph& g, VertexId t);

struct PlanarOptions {
  ThresholdRule rule;
  bool verify_planarity = false;  // check every intermediate graph
};

struct PlanarStats {
  int merges = 0;
  int grids = 0;
  int min_multiplicity = 0;  // smallest heavy-pair multiplicity used
  bool fell_back = false;    // k too small for the lemma; one subgraph returned
};

Packing pack_planar_trees(const ColoredMultigraph& g, const std::vector<VertexId>& terminals, int k,
                          const PlanarOptions& opts = {}, PlanarStats* stats = nullptr);

Packing pack_planar_forests(const ColoredMultigraph& g, const Groups& groups, int k,
                            const PlanarOptions& opts = {}, PlanarStats* stats = nullptr);

}  // namespace elemconn
