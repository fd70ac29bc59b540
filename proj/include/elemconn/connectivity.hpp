#pragma once

#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "elemconn/graph.hpp"

namespace elemconn {

using VertexPair = std::pair<VertexId, VertexId>;
using PairTable = std::map<VertexPair, int>;

struct ElementCutResult {
  int value = 0;
  // Vertex sequences u..v and the edge ids walked, one entry per path.
  std::vector<std::vector<VertexId>> witness_paths;
  std::vector<std::vector<EdgeId>> witness_edges;
  // Minimum separator: whites, plus black-black edges standing in for the
  // white a subdivision would have put on them. Sizes add up to `value`.
  std::set<VertexId> witness_cut;
  std::set<EdgeId> cut_edges;
};

// kappa'(u, v) with witnesses. Both endpoints must be black.
ElementCutResult element_connectivity(const ColoredMultigraph& g, VertexId u, VertexId v);

// Value only; stops counting at `limit`.
int element_connectivity_value(const ColoredMultigraph& g, VertexId u, VertexId v,
                               int limit = 1 << 30);

std::vector<VertexPair> black_pairs(const ColoredMultigraph& g);
PairTable all_pairs_element_connectivity(const ColoredMultigraph& g,
                                         const std::vector<VertexPair>& pairs);

// min over pairs of `terminals`; found from the smallest terminal alone,
// which suffices because kappa' obeys the triangle inequality.
int min_element_connectivity(const ColoredMultigraph& g, const std::vector<VertexId>& terminals,
                             int limit = 1 << 30);

struct WhiteSeparator {
  std::set<VertexId> cut;
  std::vector<std::set<VertexId>> sides;  // components of g - cut
};

// An inclusion-minimal white cut of size < threshold separating two of the
// terminals, or nullopt. g must have no black-black edge.
std::optional<WhiteSeparator> min_white_separator_below(const ColoredMultigraph& g,
                                                        const std::vector<VertexId>& terminals,
                                                        int threshold);

// Internally vertex-disjoint u-v paths, colors ignored; parallel u-v edges
// each count.
int vertex_connectivity(const ColoredMultigraph& g, VertexId u, VertexId v,
                        int limit = 1 << 30);

}  // namespace elemconn
