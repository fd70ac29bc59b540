#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <variant>
#include <vector>

#include "elemconn/cost.hpp"

namespace elemconn {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;

enum class Color : std::uint8_t { black, white };

struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  Cost cost{1};

  VertexId other(VertexId w) const { return w == u ? v : u; }
};

// Trace records. Edge ids are stable across every operation, so a record
// only has to say which ids changed endpoints or disappeared.
struct DeleteEdge {
  EdgeId edge = 0;
};

struct ContractEdge {
  EdgeId edge = 0;
  VertexId survivor = 0;
  VertexId absorbed = 0;
  bool survivor_black = false;
  std::vector<EdgeId> moved;    // absorbed's edges, re-attached to survivor
  std::vector<EdgeId> kept;     // survivor's other edges at contraction time
  std::vector<EdgeId> dropped;  // parallel copies that became loops
};

struct SubdivideEdge {
  EdgeId edge = 0;
  VertexId white = 0;
  EdgeId first = 0;   // joins edge.u and white
  EdgeId second = 0;  // joins white and edge.v
};

struct MergeVertices {
  VertexId survivor = 0;
  VertexId absorbed = 0;
  std::vector<EdgeId> moved;
  std::vector<EdgeId> kept;
  std::vector<EdgeId> dropped;
};

using TraceRecord = std::variant<DeleteEdge, ContractEdge, SubdivideEdge, MergeVertices>;

/// Colored undirected multigraph with identity-stable vertex and edge ids.
///
/// Parallel edges are distinct EdgeIds; self-loops are rejected. The
/// mutating members are meant for construction and for algorithms working on
/// a private copy; the free functions below give the value-semantics API.
class ColoredMultigraph {
 public:
  struct VertexInfo {
    Color color = Color::white;
    std::optional<int> group;
    std::vector<EdgeId> incident;  // in attachment order
  };

  VertexId add_vertex(Color color, std::optional<int> group = std::nullopt);
  void add_vertex_with_id(VertexId id, Color color, std::optional<int> group = std::nullopt);
  EdgeId add_edge(VertexId u, VertexId v, Cost cost = Cost{1});
  void add_edge_with_id(EdgeId id, VertexId u, VertexId v, Cost cost = Cost{1});

  void remove_edge(EdgeId e);
  // Removes the vertex together with all incident edges.
  void remove_vertex(VertexId v);
  // Moves one endpoint of e from `from` to `to`, keeping the id.
  void reattach_edge(EdgeId e, VertexId from, VertexId to);
  void set_color(VertexId v, Color color, std::optional<int> group = std::nullopt);
  void set_cost(EdgeId e, Cost cost);

  DeleteEdge delete_edge_inplace(EdgeId e);
  // Survivor defaults to the smaller endpoint id.
  ContractEdge contract_edge_inplace(EdgeId e, std::optional<VertexId> survivor = std::nullopt);
  SubdivideEdge subdivide_edge_inplace(EdgeId e);
  SubdivideEdge subdivide_edge_inplace(EdgeId e, VertexId white, EdgeId first, EdgeId second);
  MergeVertices merge_vertices_inplace(VertexId a, VertexId b,
                                       std::optional<VertexId> survivor = std::nullopt);

  bool has_vertex(VertexId v) const { return vertices_.count(v) != 0; }
  bool has_edge(EdgeId e) const { return edges_.count(e) != 0; }
  const Edge& edge(EdgeId e) const;
  const VertexInfo& vertex(VertexId v) const;
  Color color(VertexId v) const { return vertex(v).color; }
  bool is_black(VertexId v) const { return color(v) == Color::black; }
  bool is_white(VertexId v) const { return color(v) == Color::white; }
  std::optional<int> group(VertexId v) const { return vertex(v).group; }
  const std::vector<EdgeId>& incident(VertexId v) const { return vertex(v).incident; }
  std::size_t degree(VertexId v) const { return vertex(v).incident.size(); }
  VertexId other(EdgeId e, VertexId v) const { return edge(e).other(v); }

  // Distinct neighbours, ascending.
  std::vector<VertexId> neighbors(VertexId v) const;
  // Copies of the edge {u, v}, ascending by id.
  std::vector<EdgeId> edges_between(VertexId u, VertexId v) const;

  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  std::vector<VertexId> vertex_ids() const;
  std::vector<EdgeId> edge_ids() const;
  std::vector<VertexId> blacks() const;
  std::vector<VertexId> whites() const;
  const std::map<VertexId, VertexInfo>& vertices() const { return vertices_; }
  const std::map<EdgeId, Edge>& edges() const { return edges_; }

  VertexId next_vertex_id() const { return next_vertex_; }
  EdgeId next_edge_id() const { return next_edge_; }
  // Reserves ids so that fresh ones do not collide with another graph's.
  void reserve_ids(VertexId next_vertex, EdgeId next_edge);

  bool operator==(const ColoredMultigraph& o) const;

 private:
  void detach(EdgeId e, VertexId from);

  std::map<VertexId, VertexInfo> vertices_;
  std::map<EdgeId, Edge> edges_;
  VertexId next_vertex_ = 0;
  EdgeId next_edge_ = 0;
};

/// Ordered delete/contract/subdivide/merge history plus the map from
/// original vertices to the vertex that currently represents them.
class MinorTrace {
 public:
  void append(TraceRecord record);
  void append(const MinorTrace& later);
  const std::vector<TraceRecord>& records() const { return records_; }
  bool empty() const { return records_.empty(); }

  // Original vertex -> current representative. Vertices absent from the map
  // represent themselves.
  VertexId current(VertexId original) const;
  const std::map<VertexId, VertexId>& vertex_map() const { return vertex_map_; }

  /// Maps an edge set of the current graph back to edge ids of the original
  /// graph. Contracted edges are re-inserted where both sides of the merged
  /// vertex are in use; subdivided edges are restored when both halves are
  /// used. The result may contain redundant edges; callers prune.
  std::set<EdgeId> lift_edges(const std::set<EdgeId>& current_edges) const;

 private:
  std::vector<TraceRecord> records_;
  std::map<VertexId, VertexId> vertex_map_;
};

// Lifts one record backwards; shared by every log that embeds trace records.
void lift_record(const TraceRecord& record, std::set<EdgeId>& edges);

ColoredMultigraph delete_edge(const ColoredMultigraph& g, EdgeId e);
std::pair<ColoredMultigraph, ContractEdge> contract_edge(const ColoredMultigraph& g, EdgeId e);
std::pair<ColoredMultigraph, MinorTrace> subdivide_terminal_edges(const ColoredMultigraph& g);
void apply_record(ColoredMultigraph& g, const TraceRecord& record);
ColoredMultigraph replay(const ColoredMultigraph& original, const MinorTrace& trace);

// Whites become black and vice versa so that exactly `terminals` are black.
// Group ids survive on vertices that stay black.
ColoredMultigraph with_terminals(const ColoredMultigraph& g, const std::vector<VertexId>& terminals);
ColoredMultigraph induced_subgraph(const ColoredMultigraph& g, const std::set<VertexId>& keep);
bool has_black_black_edge(const ColoredMultigraph& g);
bool has_white_white_edge(const ColoredMultigraph& g);

}  // namespace elemconn
