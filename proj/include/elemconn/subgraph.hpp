#pragma once

#include <optional>
#include <set>
#include <vector>

#include "elemconn/graph.hpp"

namespace elemconn {

/// Certificate emitted by every packer: edge sets of the input graph.
struct Packing {
  enum class Kind { trees, forests };
  Kind kind = Kind::trees;
  std::vector<std::set<EdgeId>> subgraphs;
  std::vector<std::vector<VertexId>> groups;

  std::size_t size() const { return subgraphs.size(); }
};

std::set<VertexId> vertices_of(const ColoredMultigraph& g, const std::set<EdgeId>& edges);

// Connected components of g with `removed` deleted; each sorted ascending,
// list ordered by smallest member.
std::vector<std::set<VertexId>> components(const ColoredMultigraph& g,
                                           const std::set<VertexId>& removed = {});

// Components of the graph formed by an edge set alone.
std::vector<std::set<VertexId>> edge_set_components(const ColoredMultigraph& g,
                                                    const std::set<EdgeId>& edges);

// True when every listed vertex lies in a single component of `edges`.
// One vertex is trivially connected; several need at least one edge each.
bool connects_all(const ColoredMultigraph& g, const std::set<EdgeId>& edges,
                  const std::vector<VertexId>& terminals);

// Spanning forest of the edge set, scanning edges in id order.
std::set<EdgeId> spanning_forest(const ColoredMultigraph& g, const std::set<EdgeId>& edges);

// Spanning forest with non-`keep` leaves trimmed until none remain.
std::set<EdgeId> prune_to_forest(const ColoredMultigraph& g, const std::set<EdgeId>& edges,
                                 const std::set<VertexId>& keep);

// Edge ids of a shortest a-b walk inside `edges`, neighbours scanned by
// ascending VertexId. Empty when a == b, nullopt when unreachable.
std::optional<std::vector<EdgeId>> path_in(const ColoredMultigraph& g, const std::set<EdgeId>& edges,
                                           VertexId a, VertexId b);

// A tree on vertices drawn from `allowed` that contains every terminal, or
// nullopt if the induced subgraph does not connect them.
std::optional<std::set<EdgeId>> connector(const ColoredMultigraph& g, const std::set<VertexId>& allowed,
                                          const std::vector<VertexId>& terminals);

}  // namespace elemconn
