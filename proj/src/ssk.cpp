#include "elemconn/ssk.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "elemconn/connectivity.hpp"
#include "elemconn/errors.hpp"
#include "elemconn/flow.hpp"

namespace elemconn {

namespace {

void check_instance(const SskInstance& inst) {
  if (inst.k < 1) throw InvalidArgument("k must be positive");
  if (!inst.graph.has_vertex(inst.root)) throw InvalidArgument("root absent");
  for (VertexId t : inst.terminals) {
    if (!inst.graph.has_vertex(t)) throw InvalidArgument("terminal " + std::to_string(t) + " absent");
    if (t == inst.root) throw InvalidArgument("root listed as a terminal");
  }
}

ColoredMultigraph restrict_edges(const ColoredMultigraph& g, const std::set<EdgeId>& keep) {
  ColoredMultigraph out;
  for (const auto& [v, info] : g.vertices()) out.add_vertex_with_id(v, info.color, info.group);
  for (EdgeId e : keep) {
    const Edge& ed = g.edge(e);
    out.add_edge_with_id(e, ed.u, ed.v, ed.cost);
  }
  return out;
}

}  // namespace

std::optional<Augmentation> min_cost_augmentation(const SskInstance& inst, VertexId t,
                                                  const std::set<VertexId>& connected,
                                                  const std::set<EdgeId>& bought) {
  const ColoredMultigraph& g = inst.graph;
  if (!g.has_vertex(t) || t == inst.root) throw InvalidArgument("bad augmentation source");
  if (connected.count(t)) throw InvalidArgument("terminal already connected");

  // Every vertex other than t and the root is split with capacity one, so a
  // connected terminal is either an endpoint or an interior vertex, never both.
  FlowNetwork net;
  std::map<VertexId, NodeId> in;
  std::map<VertexId, NodeId> out;
  std::map<NodeId, VertexId> owner;
  for (VertexId v : g.vertex_ids()) {
    in[v] = net.add_node();
    owner[in[v]] = v;
    if (v == t || v == inst.root) {
      out[v] = in[v];
    } else {
      out[v] = net.add_node();
      owner[out[v]] = v;
      net.add_arc(in[v], out[v], 1);
    }
  }
  NodeId sink = net.add_node();
  net.add_arc(in[inst.root], sink, inst.k);
  for (VertexId c : connected) {
    if (c != inst.root) net.add_arc(out[c], sink, 1);
  }
  for (const auto& [e, ed] : g.edges()) {
    Cost c = bought.count(e) ? Cost{0} : ed.cost;
    // The root only absorbs flow, and nothing flows back into t.
    if (ed.u != inst.root && ed.v != t) net.add_arc(out[ed.u], in[ed.v], 1, c, e);
    if (ed.v != inst.root && ed.u != t) net.add_arc(out[ed.v], in[ed.u], 1, c, e);
  }
  auto flow = min_cost_flow_of_value(net, in[t], sink, inst.k);
  if (!flow) return std::nullopt;

  Augmentation aug;
  aug.terminal = t;
  aug.cost = flow->cost;
  for (const auto& path : decompose_into_paths(net, *flow, in[t], sink)) {
    std::vector<VertexId> verts{t};
    std::vector<EdgeId> edges;
    for (int a : path) {
      std::int64_t tag = net.arc(a).tag;
      if (tag < 0) continue;
      edges.push_back(static_cast<EdgeId>(tag));
      verts.push_back(g.other(static_cast<EdgeId>(tag), verts.back()));
    }
    aug.paths.push_back(std::move(verts));
    aug.path_edges.push_back(std::move(edges));
  }
  return aug;
}

void check_augmentation(const SskInstance& inst, const std::set<VertexId>& connected,
                        const Augmentation& aug) {
  auto fail = [&](const std::string& why) {
    throw ConsistencyError("augmentation for " + std::to_string(aug.terminal) + ": " + why);
  };
  if (static_cast<int>(aug.paths.size()) != inst.k) fail("wrong number of paths");
  std::set<VertexId> interior;
  std::set<VertexId> ends;
  for (std::size_t i = 0; i < aug.paths.size(); ++i) {
    const auto& p = aug.paths[i];
    if (p.size() < 2 || p.front() != aug.terminal) fail("path does not start at the terminal");
    VertexId end = p.back();
    if (end != inst.root && !connected.count(end)) fail("path ends outside the connected set");
    if (end != inst.root && !ends.insert(end).second) fail("terminal ends two paths");
    for (std::size_t j = 1; j + 1 < p.size(); ++j) {
      if (p[j] == inst.root || p[j] == aug.terminal) fail("path passes through an endpoint");
      if (!interior.insert(p[j]).second) fail("paths share an interior vertex");
    }
    if (aug.path_edges[i].size() + 1 != p.size()) fail("edge list length mismatch");
    for (std::size_t j = 0; j + 1 < p.size(); ++j) {
      const Edge& ed = inst.graph.edge(aug.path_edges[i][j]);
      bool ok = (ed.u == p[j] && ed.v == p[j + 1]) || (ed.v == p[j] && ed.u == p[j + 1]);
      if (!ok) fail("edge does not join consecutive path vertices");
    }
  }
  for (VertexId e : ends) {
    if (interior.count(e)) fail("endpoint also used as an interior vertex");
  }
}

SskReport verify_ssk_feasible(const std::set<EdgeId>& h, const SskInstance& inst) {
  check_instance(inst);
  for (EdgeId e : h) {
    if (!inst.graph.has_edge(e)) throw InvalidArgument("edge " + std::to_string(e) + " not in graph");
  }
  ColoredMultigraph sub = restrict_edges(inst.graph, h);
  SskReport rep;
  for (VertexId t : inst.terminals) {
    int c = vertex_connectivity(sub, t, inst.root, inst.k);
    rep.connectivity[t] = c;
    if (c < inst.k) {
      rep.pass = false;
      rep.failures.push_back(t);
    }
  }
  return rep;
}

SskResult greedy_ssk(const SskInstance& inst, std::uint64_t seed, bool check_steps) {
  check_instance(inst);
  for (VertexId t : inst.terminals) {
    if (vertex_connectivity(inst.graph, t, inst.root, inst.k) < inst.k) {
      throw Infeasible("terminal " + std::to_string(t) + " is not " + std::to_string(inst.k) +
                       "-connected to the root");
    }
  }
  SskResult res;
  res.order = inst.terminals;
  std::mt19937_64 rng(seed);
  std::shuffle(res.order.begin(), res.order.end(), rng);

  std::set<VertexId> connected;
  for (VertexId t : res.order) {
    auto aug = min_cost_augmentation(inst, t, connected, res.edges);
    if (!aug) throw Infeasible("no augmentation for terminal " + std::to_string(t));
    if (check_steps) check_augmentation(inst, connected, *aug);
    Cost paid{0};
    for (const auto& path : aug->path_edges) {
      for (EdgeId e : path) {
        if (res.edges.insert(e).second) paid += inst.graph.edge(e).cost;
      }
    }
    res.step_costs.push_back(paid);
    res.cost += paid;
    res.steps.push_back(std::move(*aug));
    connected.insert(t);
    if (check_steps) {
      SskInstance partial = inst;
      partial.terminals.assign(connected.begin(), connected.end());
      SskReport rep = verify_ssk_feasible(res.edges, partial);
      if (!rep.pass) {
        throw ConsistencyError("partial solution infeasible after adding terminal " + std::to_string(t));
      }
    }
  }
  return res;
}

}  // namespace elemconn
