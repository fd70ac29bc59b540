#include "elemconn/planar_packing.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <string>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/property_map/property_map.hpp>

#include "elemconn/connectivity.hpp"
#include "elemconn/errors.hpp"
#include "elemconn/reduction.hpp"

namespace elemconn {

namespace {

using BoostGraph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                          boost::property<boost::vertex_index_t, int>,
                          boost::property<boost::edge_index_t, int>>;
using BoostEdge = boost::graph_traits<BoostGraph>::edge_descriptor;

struct BoostView {
  BoostGraph bg;
  std::map<VertexId, int> index;
  std::vector<EdgeId> edge_of;

  explicit BoostView(const ColoredMultigraph& g) : bg(static_cast<int>(g.num_vertices())) {
    int i = 0;
    for (VertexId v : g.vertex_ids()) index[v] = i++;
    for (const auto& [e, ed] : g.edges()) {
      boost::add_edge(index[ed.u], index[ed.v], static_cast<int>(edge_of.size()), bg);
      edge_of.push_back(e);
    }
  }
};

}  // namespace

bool is_planar(const ColoredMultigraph& g) {
  BoostView view(g);
  return boost::boyer_myrvold_planarity_test(view.bg);
}

std::vector<EdgeId> rotation_at(const ColoredMultigraph& g, VertexId v) {
  BoostView view(g);
  std::vector<std::vector<BoostEdge>> embedding(boost::num_vertices(view.bg));
  bool planar = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = view.bg,
      boost::boyer_myrvold_params::embedding =
          boost::make_iterator_property_map(embedding.begin(), boost::get(boost::vertex_index, view.bg)));
  if (!planar) return g.incident(v);
  std::vector<EdgeId> out;
  auto eindex = boost::get(boost::edge_index, view.bg);
  for (const BoostEdge& e : embedding[view.index.at(v)]) out.push_back(view.edge_of[eindex[e]]);
  return out;
}

std::set<EdgeId> ReducedPlanarInstance::expand(EdgeId e) const { return lift.lift_edges({e}); }

namespace {

// Folds degree-2 whites of a bipartite graph into black-black edges, and
// discards whites that see a single black.
void fold_degree_two(ColoredMultigraph& w, const std::function<void(TraceRecord)>& log) {
  for (VertexId x : w.whites()) {
    if (!w.has_vertex(x)) continue;
    if (w.degree(x) == 0) {
      w.remove_vertex(x);
      continue;
    }
    auto nb = w.neighbors(x);
    if (nb.size() == 1) {
      log(w.contract_edge_inplace(w.incident(x).front(), nb[0]));
    } else if (nb.size() == 2) {
      // Extra copies to the same black never carry a second disjoint path.
      for (VertexId b : nb) {
        auto copies = w.edges_between(x, b);
        for (std::size_t i = 1; i < copies.size(); ++i) log(w.delete_edge_inplace(copies[i]));
      }
      log(w.contract_edge_inplace(w.edges_between(x, nb[0]).front(), nb[0]));
    }
  }
}

struct MergeStep {
  MergeVertices rec;
  std::vector<EdgeId> copies;
};

using LogEntry = std::variant<TraceRecord, MergeStep, GridReplacement>;

std::vector<VertexId> sorted_unique(std::vector<VertexId> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// Groups sharing a vertex are already one group.
std::vector<std::set<VertexId>> merge_overlapping(const Groups& groups) {
  std::vector<std::set<VertexId>> out;
  for (const auto& grp : groups) {
    std::set<VertexId> cur(grp.begin(), grp.end());
    for (auto it = out.begin(); it != out.end();) {
      bool overlap = std::any_of(cur.begin(), cur.end(), [&](VertexId v) { return it->count(v) != 0; });
      if (overlap) {
        cur.insert(it->begin(), it->end());
        it = out.erase(it);
      } else {
        ++it;
      }
    }
    out.push_back(std::move(cur));
  }
  return out;
}

Packing planar_engine(const ColoredMultigraph& g, const Groups& groups_in, int k,
                      const PlanarOptions& opts, PlanarStats& stats, Packing::Kind kind) {
  if (k < 1) throw InvalidArgument("k must be positive");
  std::vector<VertexId> ts;
  for (const auto& grp : groups_in) {
    if (grp.empty()) throw InvalidArgument("empty terminal group");
    for (VertexId t : grp) {
      if (!g.has_vertex(t)) throw InvalidArgument("terminal " + std::to_string(t) + " absent");
      ts.push_back(t);
    }
  }
  ts = sorted_unique(ts);
  Packing out;
  out.kind = kind;
  out.groups = groups_in;

  ColoredMultigraph w = with_terminals(g, ts);
  auto groups = merge_overlapping(groups_in);
  std::vector<LogEntry> log;
  auto record = [&log](TraceRecord r) { log.emplace_back(std::move(r)); };
  std::vector<std::set<EdgeId>> base;
  bool have_base = false;
  int min_mult = -1;

  while (true) {
    for (auto it = groups.begin(); it != groups.end();) {
      if (it->size() > 1) {
        ++it;
        continue;
      }
      VertexId t = *it->begin();
      it = groups.erase(it);
      log.emplace_back(replace_dead_terminal_inplace(w, t));
      ++stats.grids;
    }
    if (groups.empty()) break;

    ReductionResult red = reduce_to_bipartite(w);
    for (const auto& r : red.trace.records()) record(r);
    w = std::move(red.reduced);
    fold_degree_two(w, record);
    if (opts.verify_planarity && !is_planar(w)) {
      throw InvalidArgument("intermediate graph is not planar; the input was not planar");
    }

    if (groups.size() == 1 && groups.front().size() == 2) {
      VertexId a = *groups.front().begin();
      VertexId b = *groups.front().rbegin();
      for (const auto& path : element_connectivity(w, a, b).witness_edges) {
        base.emplace_back(path.begin(), path.end());
      }
      have_base = true;
      break;
    }

    HeavyPair hp = find_heavy_terminal_pair(w, k, opts.rule);
    MergeVertices rec = w.merge_vertices_inplace(hp.t1, hp.t2, std::min(hp.t1, hp.t2));
    ++stats.merges;
    int mult = static_cast<int>(hp.copies.size());
    min_mult = min_mult < 0 ? mult : std::min(min_mult, mult);
    log.emplace_back(MergeStep{rec, hp.copies});

    std::set<VertexId> joined;
    for (auto it = groups.begin(); it != groups.end();) {
      if (it->count(rec.survivor) || it->count(rec.absorbed)) {
        joined.insert(it->begin(), it->end());
        it = groups.erase(it);
      } else {
        ++it;
      }
    }
    joined.erase(rec.absorbed);
    joined.insert(rec.survivor);
    groups.push_back(std::move(joined));
  }

  int count = 1;
  if (have_base) count = static_cast<int>(base.size());
  if (min_mult >= 0) count = have_base ? std::min(count, min_mult) : min_mult;
  if (count <= 0) throw NoPacking("terminals are disconnected");
  stats.min_multiplicity = std::max(min_mult, 0);

  std::vector<std::set<EdgeId>> subs(count);
  for (int j = 0; j < count && have_base; ++j) subs[j] = base[j];
  for (auto it = log.rbegin(); it != log.rend(); ++it) {
    if (const auto* r = std::get_if<TraceRecord>(&*it)) {
      for (auto& s : subs) lift_record(*r, s);
    } else if (const auto* m = std::get_if<MergeStep>(&*it)) {
      for (int j = 0; j < count; ++j) subs[j].insert(m->copies[j]);
    } else {
      const auto& grid = std::get<GridReplacement>(*it);
      for (auto& s : subs) {
        for (EdgeId e : grid.internal) s.erase(e);
      }
    }
  }
  std::set<VertexId> keep(ts.begin(), ts.end());
  for (auto& s : subs) out.subgraphs.push_back(prune_to_forest(g, s, keep));
  return out;
}

// A single spanning structure, for k too small for the counting lemma.
Packing single_subgraph(const ColoredMultigraph& g, const Groups& groups, Packing::Kind kind) {
  std::vector<VertexId> ts;
  for (const auto& grp : groups) ts.insert(ts.end(), grp.begin(), grp.end());
  ts = sorted_unique(ts);
  std::set<EdgeId> all;
  for (EdgeId e : g.edge_ids()) all.insert(e);
  std::set<EdgeId> forest = prune_to_forest(g, all, std::set<VertexId>(ts.begin(), ts.end()));
  for (const auto& grp : groups) {
    if (!connects_all(g, forest, grp)) throw NoPacking("a terminal group is disconnected");
  }
  Packing out;
  out.kind = kind;
  out.groups = groups;
  out.subgraphs.push_back(std::move(forest));
  return out;
}

Packing planar_with_fallback(const ColoredMultigraph& g, const Groups& groups, int k,
                             const PlanarOptions& opts, PlanarStats* stats, Packing::Kind kind) {
  PlanarStats local;
  try {
    Packing p = planar_engine(g, groups, k, opts, local, kind);
    if (stats) *stats = local;
    return p;
  } catch (const ThresholdViolation&) {
    // With need(k) = 1 and k <= 5 the counting argument says nothing, but
    // one subgraph always exists in a connected instance.
    if (opts.rule.genus_c != 0 || k > 5) throw;
  }
  Packing p = single_subgraph(g, groups, kind);
  local.fell_back = true;
  if (stats) *stats = local;
  return p;
}

}  // namespace

ReducedPlanarInstance build_reduced_instance(const ColoredMultigraph& g) {
  ReductionResult red = reduce_to_bipartite(g);
  ReducedPlanarInstance ri;
  ri.lift = std::move(red.trace);
  ri.multigraph = std::move(red.reduced);
  fold_degree_two(ri.multigraph, [&ri](TraceRecord r) { ri.lift.append(std::move(r)); });
  return ri;
}

int ThresholdRule::need(int k) const {
  if (genus_c > 0) return (k + genus_c - 1) / genus_c;
  return std::max(1, (k + 4) / 5 - 1);
}

HeavyPair find_heavy_terminal_pair(const ColoredMultigraph& reduced, int k, const ThresholdRule& rule) {
  std::map<VertexPair, std::vector<EdgeId>> copies;
  for (const auto& [e, ed] : reduced.edges()) {
    if (!reduced.is_black(ed.u) || !reduced.is_black(ed.v)) continue;
    copies[{std::min(ed.u, ed.v), std::max(ed.u, ed.v)}].push_back(e);
  }
  HeavyPair best;
  for (const auto& [pair, list] : copies) {
    if (list.size() > best.copies.size()) {
      best.t1 = pair.first;
      best.t2 = pair.second;
      best.copies = list;
    }
  }
  const int need = rule.need(k);
  if (static_cast<int>(best.copies.size()) < need) {
    throw ThresholdViolation("heaviest terminal pair has " + std::to_string(best.copies.size()) +
                                 " parallel edges, need " + std::to_string(need),
                             std::make_shared<ColoredMultigraph>(reduced));
  }
  best.chosen.assign(best.copies.begin(), best.copies.begin() + need);
  return best;
}

GridReplacement replace_dead_terminal_inplace(ColoredMultigraph& g, VertexId t) {
  if (!g.is_black(t)) throw InvalidArgument("only a black vertex can be replaced by a grid");
  GridReplacement rep;
  rep.terminal = t;
  rep.attachments = rotation_at(g, t);
  const int d = static_cast<int>(rep.attachments.size());
  for (int i = 0; i < d * d; ++i) rep.grid.push_back(g.add_vertex(Color::white));
  auto at = [&](int r, int c) { return rep.grid[static_cast<std::size_t>(r * d + c)]; };
  for (int r = 0; r < d; ++r) {
    for (int c = 0; c < d; ++c) {
      if (c + 1 < d) rep.internal.insert(g.add_edge(at(r, c), at(r, c + 1)));
      if (r + 1 < d) rep.internal.insert(g.add_edge(at(r, c), at(r + 1, c)));
    }
  }
  for (int i = 0; i < d; ++i) g.reattach_edge(rep.attachments[i], t, at(i, 0));
  g.remove_vertex(t);
  return rep;
}

ColoredMultigraph replace_dead_terminal_with_grid(const ColoredMultigraph& g, VertexId t) {
  ColoredMultigraph out = g;
  replace_dead_terminal_inplace(out, t);
  return out;
}

Packing pack_planar_trees(const ColoredMultigraph& g, const std::vector<VertexId>& terminals, int k,
                          const PlanarOptions& opts, PlanarStats* stats) {
  auto ts = sorted_unique(terminals);
  if (ts.size() < 2) throw InvalidArgument("tree packing needs at least two terminals");
  return planar_with_fallback(g, {ts}, k, opts, stats, Packing::Kind::trees);
}

Packing pack_planar_forests(const ColoredMultigraph& g, const Groups& groups, int k,
                            const PlanarOptions& opts, PlanarStats* stats) {
  return planar_with_fallback(g, groups, k, opts, stats, Packing::Kind::forests);
}

}  // namespace elemconn
