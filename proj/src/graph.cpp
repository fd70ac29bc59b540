#include "elemconn/graph.hpp"

#include <algorithm>
#include <charconv>
#include <string>

#include "elemconn/errors.hpp"

namespace elemconn {

namespace {

std::int64_t parse_int(std::string_view s) {
  std::int64_t out = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw InvalidArgument("bad integer '" + std::string(s) + "'");
  }
  return out;
}

void erase_one(std::vector<EdgeId>& list, EdgeId e) {
  auto it = std::find(list.begin(), list.end(), e);
  if (it != list.end()) list.erase(it);
}

}  // namespace

Cost parse_cost(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Cost{parse_int(text)};
  std::int64_t num = parse_int(text.substr(0, slash));
  std::int64_t den = parse_int(text.substr(slash + 1));
  if (den == 0) throw InvalidArgument("zero denominator in cost");
  Cost c{num, den};
  if (c < 0) throw InvalidArgument("negative cost");
  return c;
}

std::string format_cost(const Cost& c) {
  if (c.denominator() == 1) return std::to_string(c.numerator());
  return std::to_string(c.numerator()) + "/" + std::to_string(c.denominator());
}

VertexId ColoredMultigraph::add_vertex(Color color, std::optional<int> group) {
  VertexId id = next_vertex_;
  add_vertex_with_id(id, color, group);
  return id;
}

void ColoredMultigraph::add_vertex_with_id(VertexId id, Color color, std::optional<int> group) {
  if (id < 0) throw InvalidArgument("negative vertex id");
  if (has_vertex(id)) throw InvalidArgument("duplicate vertex id " + std::to_string(id));
  if (group && color != Color::black) {
    throw InvalidArgument("group id on white vertex " + std::to_string(id));
  }
  vertices_[id] = VertexInfo{color, group, {}};
  next_vertex_ = std::max(next_vertex_, id + 1);
}

EdgeId ColoredMultigraph::add_edge(VertexId u, VertexId v, Cost cost) {
  EdgeId id = next_edge_;
  add_edge_with_id(id, u, v, cost);
  return id;
}

void ColoredMultigraph::add_edge_with_id(EdgeId id, VertexId u, VertexId v, Cost cost) {
  if (id < 0) throw InvalidArgument("negative edge id");
  if (has_edge(id)) throw InvalidArgument("duplicate edge id " + std::to_string(id));
  if (!has_vertex(u) || !has_vertex(v)) {
    throw InvalidArgument("edge " + std::to_string(id) + " references unknown vertex");
  }
  if (u == v) throw InvalidArgument("self-loop at vertex " + std::to_string(u));
  if (cost < 0) throw InvalidArgument("negative edge cost");
  edges_[id] = Edge{u, v, cost};
  vertices_[u].incident.push_back(id);
  vertices_[v].incident.push_back(id);
  next_edge_ = std::max(next_edge_, id + 1);
}

const Edge& ColoredMultigraph::edge(EdgeId e) const {
  auto it = edges_.find(e);
  if (it == edges_.end()) throw InvalidArgument("unknown edge id " + std::to_string(e));
  return it->second;
}

const ColoredMultigraph::VertexInfo& ColoredMultigraph::vertex(VertexId v) const {
  auto it = vertices_.find(v);
  if (it == vertices_.end()) throw InvalidArgument("unknown vertex id " + std::to_string(v));
  return it->second;
}

void ColoredMultigraph::detach(EdgeId e, VertexId from) { erase_one(vertices_.at(from).incident, e); }

void ColoredMultigraph::remove_edge(EdgeId e) {
  const Edge ed = edge(e);
  detach(e, ed.u);
  detach(e, ed.v);
  edges_.erase(e);
}

void ColoredMultigraph::remove_vertex(VertexId v) {
  auto incident = vertex(v).incident;
  for (EdgeId e : incident) remove_edge(e);
  vertices_.erase(v);
}

void ColoredMultigraph::reattach_edge(EdgeId e, VertexId from, VertexId to) {
  Edge& ed = edges_.at(e);
  if (ed.u != from && ed.v != from) throw InvalidArgument("edge not incident to vertex");
  if (!has_vertex(to)) throw InvalidArgument("unknown vertex id " + std::to_string(to));
  VertexId keep = ed.other(from);
  if (keep == to) throw InvalidArgument("reattach would create a self-loop");
  detach(e, from);
  if (ed.u == from) {
    ed.u = to;
  } else {
    ed.v = to;
  }
  vertices_[to].incident.push_back(e);
}

void ColoredMultigraph::set_color(VertexId v, Color color, std::optional<int> group) {
  if (group && color != Color::black) throw InvalidArgument("group id on white vertex");
  auto& info = vertices_.at(v);
  info.color = color;
  info.group = group;
}

void ColoredMultigraph::set_cost(EdgeId e, Cost cost) { edges_.at(e).cost = cost; }

DeleteEdge ColoredMultigraph::delete_edge_inplace(EdgeId e) {
  remove_edge(e);
  return DeleteEdge{e};
}

ContractEdge ColoredMultigraph::contract_edge_inplace(EdgeId e, std::optional<VertexId> survivor) {
  const Edge ed = edge(e);
  VertexId keep = survivor.value_or(std::min(ed.u, ed.v));
  if (keep != ed.u && keep != ed.v) throw InvalidArgument("survivor is not an endpoint");
  VertexId gone = ed.other(keep);

  ContractEdge rec;
  rec.edge = e;
  rec.survivor = keep;
  rec.absorbed = gone;
  rec.survivor_black = is_black(keep) || is_black(gone);
  for (EdgeId f : incident(keep)) {
    if (other(f, keep) == gone) {
      rec.dropped.push_back(f);
    } else {
      rec.kept.push_back(f);
    }
  }
  for (EdgeId f : incident(gone)) {
    if (other(f, gone) != keep) rec.moved.push_back(f);
  }
  for (EdgeId f : rec.dropped) remove_edge(f);
  for (EdgeId f : rec.moved) reattach_edge(f, gone, keep);
  if (rec.survivor_black && is_white(keep)) {
    vertices_[keep].color = Color::black;
    vertices_[keep].group = vertices_[gone].group;
  }
  vertices_.erase(gone);
  return rec;
}

SubdivideEdge ColoredMultigraph::subdivide_edge_inplace(EdgeId e) {
  VertexId w = next_vertex_;
  EdgeId a = next_edge_;
  return subdivide_edge_inplace(e, w, a, a + 1);
}

SubdivideEdge ColoredMultigraph::subdivide_edge_inplace(EdgeId e, VertexId white, EdgeId first,
                                                        EdgeId second) {
  const Edge ed = edge(e);
  remove_edge(e);
  add_vertex_with_id(white, Color::white);
  add_edge_with_id(first, ed.u, white, ed.cost);
  add_edge_with_id(second, white, ed.v, Cost{0});
  return SubdivideEdge{e, white, first, second};
}

MergeVertices ColoredMultigraph::merge_vertices_inplace(VertexId a, VertexId b,
                                                         std::optional<VertexId> survivor) {
  if (a == b) throw InvalidArgument("cannot merge a vertex with itself");
  VertexId keep = survivor.value_or(std::min(a, b));
  if (keep != a && keep != b) throw InvalidArgument("survivor is not one of the merged vertices");
  VertexId gone = keep == a ? b : a;
  MergeVertices rec;
  rec.survivor = keep;
  rec.absorbed = gone;
  for (EdgeId f : incident(keep)) {
    if (other(f, keep) == gone) {
      rec.dropped.push_back(f);
    } else {
      rec.kept.push_back(f);
    }
  }
  for (EdgeId f : incident(gone)) {
    if (other(f, gone) != keep) rec.moved.push_back(f);
  }
  for (EdgeId f : rec.dropped) remove_edge(f);
  for (EdgeId f : rec.moved) reattach_edge(f, gone, keep);
  if (is_black(gone) && is_white(keep)) {
    vertices_[keep].color = Color::black;
    vertices_[keep].group = vertices_[gone].group;
  }
  vertices_.erase(gone);
  return rec;
}

std::vector<VertexId> ColoredMultigraph::neighbors(VertexId v) const {
  std::vector<VertexId> out;
  for (EdgeId e : incident(v)) out.push_back(other(e, v));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<EdgeId> ColoredMultigraph::edges_between(VertexId u, VertexId v) const {
  std::vector<EdgeId> out;
  for (EdgeId e : incident(u)) {
    if (other(e, u) == v) out.push_back(e);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexId> ColoredMultigraph::vertex_ids() const {
  std::vector<VertexId> out;
  out.reserve(vertices_.size());
  for (const auto& [id, info] : vertices_) out.push_back(id);
  return out;
}

std::vector<EdgeId> ColoredMultigraph::edge_ids() const {
  std::vector<EdgeId> out;
  out.reserve(edges_.size());
  for (const auto& [id, ed] : edges_) out.push_back(id);
  return out;
}

std::vector<VertexId> ColoredMultigraph::blacks() const {
  std::vector<VertexId> out;
  for (const auto& [id, info] : vertices_) {
    if (info.color == Color::black) out.push_back(id);
  }
  return out;
}

std::vector<VertexId> ColoredMultigraph::whites() const {
  std::vector<VertexId> out;
  for (const auto& [id, info] : vertices_) {
    if (info.color == Color::white) out.push_back(id);
  }
  return out;
}

void ColoredMultigraph::reserve_ids(VertexId next_vertex, EdgeId next_edge) {
  next_vertex_ = std::max(next_vertex_, next_vertex);
  next_edge_ = std::max(next_edge_, next_edge);
}

bool ColoredMultigraph::operator==(const ColoredMultigraph& o) const {
  if (vertices_.size() != o.vertices_.size() || edges_.size() != o.edges_.size()) return false;
  for (const auto& [id, info] : vertices_) {
    auto it = o.vertices_.find(id);
    if (it == o.vertices_.end()) return false;
    if (it->second.color != info.color || it->second.group != info.group) return false;
  }
  for (const auto& [id, ed] : edges_) {
    auto it = o.edges_.find(id);
    if (it == o.edges_.end()) return false;
    const Edge& oe = it->second;
    bool same = (oe.u == ed.u && oe.v == ed.v) || (oe.u == ed.v && oe.v == ed.u);
    if (!same || oe.cost != ed.cost) return false;
  }
  return true;
}

void MinorTrace::append(TraceRecord record) {
  std::visit(
      [this](const auto& r) {
        using R = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<R, ContractEdge> || std::is_same_v<R, MergeVertices>) {
          for (auto& [orig, cur] : vertex_map_) {
            if (cur == r.absorbed) cur = r.survivor;
          }
          if (!vertex_map_.count(r.absorbed)) vertex_map_[r.absorbed] = r.survivor;
        }
      },
      record);
  records_.push_back(std::move(record));
}

void MinorTrace::append(const MinorTrace& later) {
  for (const auto& r : later.records_) append(r);
}

VertexId MinorTrace::current(VertexId original) const {
  auto it = vertex_map_.find(original);
  return it == vertex_map_.end() ? original : it->second;
}

void lift_record(const TraceRecord& record, std::set<EdgeId>& edges) {
  auto uses_any = [&edges](const std::vector<EdgeId>& list) {
    return std::any_of(list.begin(), list.end(), [&edges](EdgeId e) { return edges.count(e) != 0; });
  };
  std::visit(
      [&](const auto& r) {
        using R = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<R, ContractEdge>) {
          if (uses_any(r.moved) && (r.survivor_black || uses_any(r.kept))) edges.insert(r.edge);
        } else if constexpr (std::is_same_v<R, SubdivideEdge>) {
          bool a = edges.erase(r.first) != 0;
          bool b = edges.erase(r.second) != 0;
          if (a && b) edges.insert(r.edge);
        }
        // Deleted edges are never in a current edge set, and merges of
        // terminals are reconnected by the caller.
      },
      record);
}

std::set<EdgeId> MinorTrace::lift_edges(const std::set<EdgeId>& current_edges) const {
  std::set<EdgeId> out = current_edges;
  for (auto it = records_.rbegin(); it != records_.rend(); ++it) lift_record(*it, out);
  return out;
}

ColoredMultigraph delete_edge(const ColoredMultigraph& g, EdgeId e) {
  ColoredMultigraph out = g;
  out.delete_edge_inplace(e);
  return out;
}

std::pair<ColoredMultigraph, ContractEdge> contract_edge(const ColoredMultigraph& g, EdgeId e) {
  ColoredMultigraph out = g;
  ContractEdge rec = out.contract_edge_inplace(e);
  return {std::move(out), std::move(rec)};
}

std::pair<ColoredMultigraph, MinorTrace> subdivide_terminal_edges(const ColoredMultigraph& g) {
  ColoredMultigraph out = g;
  MinorTrace trace;
  for (EdgeId e : g.edge_ids()) {
    const Edge& ed = g.edge(e);
    if (g.is_black(ed.u) && g.is_black(ed.v)) trace.append(out.subdivide_edge_inplace(e));
  }
  return {std::move(out), std::move(trace)};
}

void apply_record(ColoredMultigraph& g, const TraceRecord& record) {
  std::visit(
      [&g](const auto& r) {
        using R = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<R, DeleteEdge>) {
          g.delete_edge_inplace(r.edge);
        } else if constexpr (std::is_same_v<R, ContractEdge>) {
          auto got = g.contract_edge_inplace(r.edge, r.survivor);
          if (got.absorbed != r.absorbed) throw ConsistencyError("replay diverged on contraction");
        } else if constexpr (std::is_same_v<R, SubdivideEdge>) {
          g.subdivide_edge_inplace(r.edge, r.white, r.first, r.second);
        } else {
          g.merge_vertices_inplace(r.survivor, r.absorbed, r.survivor);
        }
      },
      record);
}

ColoredMultigraph replay(const ColoredMultigraph& original, const MinorTrace& trace) {
  ColoredMultigraph g = original;
  for (const auto& r : trace.records()) apply_record(g, r);
  return g;
}

ColoredMultigraph with_terminals(const ColoredMultigraph& g, const std::vector<VertexId>& terminals) {
  std::set<VertexId> tset(terminals.begin(), terminals.end());
  ColoredMultigraph out = g;
  for (VertexId t : tset) {
    if (!g.has_vertex(t)) throw InvalidArgument("unknown terminal " + std::to_string(t));
  }
  for (VertexId v : g.vertex_ids()) {
    if (tset.count(v)) {
      out.set_color(v, Color::black, g.is_black(v) ? g.group(v) : std::nullopt);
    } else {
      out.set_color(v, Color::white);
    }
  }
  return out;
}

ColoredMultigraph induced_subgraph(const ColoredMultigraph& g, const std::set<VertexId>& keep) {
  ColoredMultigraph out;
  for (VertexId v : keep) out.add_vertex_with_id(v, g.color(v), g.group(v));
  for (const auto& [id, ed] : g.edges()) {
    if (keep.count(ed.u) && keep.count(ed.v)) out.add_edge_with_id(id, ed.u, ed.v, ed.cost);
  }
  out.reserve_ids(g.next_vertex_id(), g.next_edge_id());
  return out;
}

bool has_black_black_edge(const ColoredMultigraph& g) {
  for (const auto& [id, ed] : g.edges()) {
    if (g.is_black(ed.u) && g.is_black(ed.v)) return true;
  }
  return false;
}

bool has_white_white_edge(const ColoredMultigraph& g) {
  for (const auto& [id, ed] : g.edges()) {
    if (g.is_white(ed.u) && g.is_white(ed.v)) return true;
  }
  return false;
}

}  // namespace elemconn
