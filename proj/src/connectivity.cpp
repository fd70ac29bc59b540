#include "elemconn/connectivity.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "elemconn/errors.hpp"
#include "elemconn/flow.hpp"
#include "elemconn/subgraph.hpp"

namespace elemconn {

namespace {

constexpr std::int64_t kSplitTag = -2;

// Whites are split into in/out nodes joined by a unit arc; a black-black
// edge gets a unit node of its own, which is what subdividing it would give.
// Edge arcs are uncapacitated, so every finite cut is made of unit arcs.
struct ElementGadget {
  FlowNetwork net;
  std::map<VertexId, NodeId> in;
  std::map<VertexId, NodeId> out;
  std::map<EdgeId, std::pair<NodeId, NodeId>> middle;

  explicit ElementGadget(const ColoredMultigraph& g) {
    for (const auto& [v, info] : g.vertices()) {
      NodeId a = net.add_node();
      in[v] = a;
      if (info.color == Color::white) {
        NodeId b = net.add_node();
        out[v] = b;
        net.add_arc(a, b, 1, Cost{0}, kSplitTag);
      } else {
        out[v] = a;
      }
    }
    for (const auto& [e, ed] : g.edges()) {
      if (g.is_black(ed.u) && g.is_black(ed.v)) {
        NodeId a = net.add_node();
        NodeId b = net.add_node();
        middle[e] = {a, b};
        net.add_arc(a, b, 1, Cost{0}, kSplitTag);
        net.add_arc(out[ed.u], a, kInfiniteCapacity, Cost{0}, e);
        net.add_arc(out[ed.v], a, kInfiniteCapacity, Cost{0}, e);
        net.add_arc(b, in[ed.u], kInfiniteCapacity, Cost{0}, e);
        net.add_arc(b, in[ed.v], kInfiniteCapacity, Cost{0}, e);
      } else {
        net.add_arc(out[ed.u], in[ed.v], kInfiniteCapacity, Cost{0}, e);
        net.add_arc(out[ed.v], in[ed.u], kInfiniteCapacity, Cost{0}, e);
      }
    }
  }
};

void require_black_pair(const ColoredMultigraph& g, VertexId u, VertexId v) {
  if (!g.has_vertex(u) || !g.has_vertex(v)) throw InvalidArgument("query vertex absent");
  if (u == v) throw InvalidArgument("query vertices coincide");
  if (!g.is_black(u) || !g.is_black(v)) {
    throw InvalidArgument("element connectivity is defined between black vertices only");
  }
}

bool separated(const ColoredMultigraph& g, const std::set<VertexId>& cut, VertexId a, VertexId b) {
  for (const auto& comp : components(g, cut)) {
    if (comp.count(a)) return !comp.count(b);
  }
  return true;
}

}  // namespace

ElementCutResult element_connectivity(const ColoredMultigraph& g, VertexId u, VertexId v) {
  require_black_pair(g, u, v);
  ElementGadget gad(g);
  FlowAssignment f = max_flow(gad.net, gad.in[u], gad.in[v]);
  ElementCutResult res;
  res.value = static_cast<int>(f.value);
  for (const auto& path : decompose_into_paths(gad.net, f, gad.in[u], gad.in[v])) {
    std::vector<EdgeId> edges;
    for (int a : path) {
      std::int64_t tag = gad.net.arc(a).tag;
      if (tag < 0) continue;
      if (!edges.empty() && edges.back() == tag) continue;  // both arcs of a bb edge
      edges.push_back(static_cast<EdgeId>(tag));
    }
    std::vector<VertexId> verts{u};
    for (EdgeId e : edges) verts.push_back(g.other(e, verts.back()));
    res.witness_paths.push_back(std::move(verts));
    res.witness_edges.push_back(std::move(edges));
  }
  for (const auto& [w, a] : gad.in) {
    if (g.is_white(w) && f.source_side[a] && !f.source_side[gad.out[w]]) res.witness_cut.insert(w);
  }
  for (const auto& [e, mid] : gad.middle) {
    if (f.source_side[mid.first] && !f.source_side[mid.second]) res.cut_edges.insert(e);
  }
  if (res.witness_cut.size() + res.cut_edges.size() != static_cast<std::size_t>(res.value)) {
    throw ConsistencyError("element cut size differs from the flow value");
  }
  return res;
}

int element_connectivity_value(const ColoredMultigraph& g, VertexId u, VertexId v, int limit) {
  require_black_pair(g, u, v);
  ElementGadget gad(g);
  return static_cast<int>(max_flow(gad.net, gad.in[u], gad.in[v], limit).value);
}

std::vector<VertexPair> black_pairs(const ColoredMultigraph& g) {
  auto bl = g.blacks();
  std::vector<VertexPair> out;
  for (std::size_t i = 0; i < bl.size(); ++i) {
    for (std::size_t j = i + 1; j < bl.size(); ++j) out.push_back({bl[i], bl[j]});
  }
  return out;
}

PairTable all_pairs_element_connectivity(const ColoredMultigraph& g,
                                         const std::vector<VertexPair>& pairs) {
  PairTable table;
  for (auto [a, b] : pairs) {
    VertexPair key{std::min(a, b), std::max(a, b)};
    if (!table.count(key)) table[key] = element_connectivity_value(g, key.first, key.second);
  }
  return table;
}

int min_element_connectivity(const ColoredMultigraph& g, const std::vector<VertexId>& terminals,
                             int limit) {
  std::set<VertexId> ts(terminals.begin(), terminals.end());
  if (ts.size() < 2) throw InvalidArgument("need at least two terminals");
  VertexId anchor = *ts.begin();
  int best = limit;
  for (VertexId t : ts) {
    if (t == anchor) continue;
    best = std::min(best, element_connectivity_value(g, anchor, t, best));
    if (best == 0) break;
  }
  return best;
}

std::optional<WhiteSeparator> min_white_separator_below(const ColoredMultigraph& g,
                                                        const std::vector<VertexId>& terminals,
                                                        int threshold) {
  std::set<VertexId> ts(terminals.begin(), terminals.end());
  if (ts.size() < 2) throw InvalidArgument("need at least two terminals");
  if (threshold <= 0) return std::nullopt;
  if (has_black_black_edge(g)) throw InvalidArgument("white separators need a graph without black-black edges");
  VertexId anchor = *ts.begin();
  for (VertexId t : ts) {
    if (t == anchor) continue;
    if (element_connectivity_value(g, anchor, t, threshold) >= threshold) continue;
    ElementCutResult r = element_connectivity(g, anchor, t);
    std::set<VertexId> cut = r.witness_cut;
    for (VertexId w : r.witness_cut) {
      std::set<VertexId> smaller = cut;
      smaller.erase(w);
      if (separated(g, smaller, anchor, t)) cut = std::move(smaller);
    }
    return WhiteSeparator{cut, components(g, cut)};
  }
  return std::nullopt;
}

int vertex_connectivity(const ColoredMultigraph& g, VertexId u, VertexId v, int limit) {
  if (!g.has_vertex(u) || !g.has_vertex(v)) throw InvalidArgument("query vertex absent");
  if (u == v) throw InvalidArgument("query vertices coincide");
  FlowNetwork net;
  std::map<VertexId, NodeId> in;
  std::map<VertexId, NodeId> out;
  for (VertexId x : g.vertex_ids()) {
    in[x] = net.add_node();
    if (x == u || x == v) {
      out[x] = in[x];
    } else {
      out[x] = net.add_node();
      net.add_arc(in[x], out[x], 1);
    }
  }
  for (const auto& [e, ed] : g.edges()) {
    net.add_arc(out[ed.u], in[ed.v], 1, Cost{0}, e);
    net.add_arc(out[ed.v], in[ed.u], 1, Cost{0}, e);
  }
  return static_cast<int>(max_flow(net, in[u], in[v], limit).value);
}

}  // namespace elemconn
