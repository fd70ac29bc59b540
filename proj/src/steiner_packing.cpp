#include "elemconn/steiner_packing.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <string>

#include "elemconn/connectivity.hpp"
#include "elemconn/errors.hpp"
#include "elemconn/reduction.hpp"

namespace elemconn {

namespace {

constexpr int kReseeds = 20;

std::uint64_t child_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::vector<VertexId> sorted_unique(std::vector<VertexId> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<VertexId> union_of(const Groups& groups) {
  std::vector<VertexId> all;
  for (const auto& grp : groups) all.insert(all.end(), grp.begin(), grp.end());
  return sorted_unique(all);
}

void require_terminals(const ColoredMultigraph& g, const std::vector<VertexId>& ts) {
  for (VertexId t : ts) {
    if (!g.has_vertex(t)) throw InvalidArgument("terminal " + std::to_string(t) + " absent");
  }
}

bool terminals_connected(const ColoredMultigraph& g, const std::vector<VertexId>& ts) {
  if (ts.size() < 2) return true;
  for (const auto& comp : components(g)) {
    if (comp.count(ts.front())) {
      return std::all_of(ts.begin(), ts.end(), [&](VertexId t) { return comp.count(t) != 0; });
    }
  }
  return false;
}

std::vector<std::set<EdgeId>> lift_all(const MinorTrace& trace, const ColoredMultigraph& host,
                                       const std::vector<std::set<EdgeId>>& subs,
                                       const std::vector<VertexId>& keep) {
  std::set<VertexId> keep_set(keep.begin(), keep.end());
  std::vector<std::set<EdgeId>> out;
  for (const auto& s : subs) out.push_back(prune_to_forest(host, trace.lift_edges(s), keep_set));
  return out;
}

}  // namespace

int tree_packing_floor(int k, std::size_t terminals) {
  double lg = std::max(1.0, std::log2(static_cast<double>(terminals)));
  return std::max(1, static_cast<int>(std::floor(k / (6.0 * lg))));
}

int forest_packing_floor(int k, std::size_t terminals, std::size_t groups) {
  double lt = std::max(1.0, std::log2(static_cast<double>(terminals)));
  double lm = std::max(1.0, std::log2(static_cast<double>(groups)));
  return std::max(1, static_cast<int>(std::floor(k / (12.0 * lt * lm))));
}

int connecting_color_classes(const ColoredMultigraph& g, const std::vector<VertexId>& connect,
                             int colors, std::uint64_t seed) {
  if (colors < 1) throw InvalidArgument("need at least one color");
  std::mt19937_64 rng(seed);
  std::vector<std::set<VertexId>> classes(colors);
  for (VertexId b : g.blacks()) {
    for (auto& c : classes) c.insert(b);
  }
  for (VertexId w : g.whites()) classes[rng() % static_cast<std::uint64_t>(colors)].insert(w);
  int good = 0;
  for (const auto& c : classes) {
    if (connector(g, c, connect)) ++good;
  }
  return good;
}

Packing pack_trees_random_coloring(const ColoredMultigraph& g, const std::vector<VertexId>& terminals,
                                   int k, std::uint64_t seed, TreePackingStats* stats) {
  std::vector<VertexId> ts = sorted_unique(terminals);
  if (ts.size() < 2) throw InvalidArgument("tree packing needs at least two terminals");
  if (k < 1) throw InvalidArgument("k must be positive");
  require_terminals(g, ts);
  ColoredMultigraph gt = with_terminals(g, ts);
  if (!terminals_connected(gt, ts)) throw NoPacking("terminals are disconnected");

  Packing out;
  out.kind = Packing::Kind::trees;
  out.groups = {ts};
  TreePackingStats local;

  if (ts.size() == 2) {
    ElementCutResult r = element_connectivity(gt, ts[0], ts[1]);
    for (const auto& path : r.witness_edges) out.subgraphs.emplace_back(path.begin(), path.end());
    local.colors_used = static_cast<int>(out.subgraphs.size());
    if (stats) *stats = local;
    return out;
  }

  ReductionResult red = reduce_to_bipartite(gt);
  const ColoredMultigraph& r = red.reduced;
  std::vector<VertexId> whites = r.whites();
  std::mt19937_64 rng(seed);
  std::vector<std::set<EdgeId>> best;
  int c = tree_packing_floor(k, ts.size());
  local.colors_tried = c;
  while (true) {
    int tries = c == 1 ? 1 : kReseeds;
    for (int attempt = 0; attempt < tries; ++attempt) {
      ++local.attempts;
      std::vector<std::set<VertexId>> classes(c, std::set<VertexId>(ts.begin(), ts.end()));
      for (VertexId w : whites) classes[rng() % static_cast<std::uint64_t>(c)].insert(w);
      std::vector<std::set<EdgeId>> found;
      for (const auto& cls : classes) {
        if (auto tree = connector(r, cls, ts)) found.push_back(std::move(*tree));
      }
      if (found.size() > best.size()) best = std::move(found);
      if (static_cast<int>(best.size()) >= c) break;
    }
    if (static_cast<int>(best.size()) >= c || c == 1) break;
    c = std::max(1, c / 2);
  }
  if (best.empty()) throw NoPacking("no color class connects the terminals");

  out.subgraphs = lift_all(red.trace, gt, best, ts);
  for (const auto& s : out.subgraphs) {
    if (!connects_all(gt, s, ts)) throw ConsistencyError("lifted tree lost a terminal");
  }
  local.colors_used = static_cast<int>(out.subgraphs.size());
  if (stats) *stats = local;
  return out;
}

GoodSeparator find_good_separator(const ColoredMultigraph& g, const Groups& groups, int k) {
  if (groups.empty()) throw InvalidArgument("no groups");
  const std::vector<VertexId> ts = union_of(groups);
  const std::set<VertexId> tset(ts.begin(), ts.end());
  const double lm = std::max(1.0, std::log2(static_cast<double>(groups.size())));
  GoodSeparator out;
  out.connectivity_floor = std::max(1, static_cast<int>(std::ceil(k / (2.0 * lm))));
  const int max_iterations = static_cast<int>(std::ceil(lm));

  std::set<VertexId> cur;
  for (VertexId v : g.vertex_ids()) cur.insert(v);
  std::set<VertexId> cut;
  while (true) {
    ColoredMultigraph sub = induced_subgraph(g, cur);
    std::vector<VertexId> here;
    for (VertexId t : ts) {
      if (cur.count(t)) here.push_back(t);
    }
    if (here.size() < 2) break;
    auto sep = min_white_separator_below(sub, here, out.connectivity_floor);
    if (!sep) break;
    if (++out.iterations > max_iterations) {
      throw ConsistencyError("good separator search exceeded " + std::to_string(max_iterations) +
                             " iterations");
    }
    // Which side holds each group; a group may never straddle the cut.
    std::vector<int> group_count(sep->sides.size(), 0);
    for (const auto& grp : groups) {
      if (!cur.count(grp.front())) continue;
      int side = -1;
      for (VertexId t : grp) {
        int s = -1;
        for (std::size_t i = 0; i < sep->sides.size(); ++i) {
          if (sep->sides[i].count(t)) s = static_cast<int>(i);
        }
        if (s < 0 || (side >= 0 && s != side)) {
          throw ConsistencyError("a small white cut splits a terminal group");
        }
        side = s;
      }
      ++group_count[side];
    }
    int pick = -1;
    for (std::size_t i = 0; i < sep->sides.size(); ++i) {
      if (group_count[i] == 0) continue;
      if (pick < 0 || group_count[i] < group_count[pick]) pick = static_cast<int>(i);
    }
    cut.insert(sep->cut.begin(), sep->cut.end());
    cur = sep->sides[pick];
  }
  if (cut.empty()) {
    out.core = cur;
    return out;
  }

  std::set<VertexId> core_terminals;
  for (VertexId t : ts) {
    if (cur.count(t)) core_terminals.insert(t);
  }
  auto core_with = [&](const std::set<VertexId>& s) {
    for (auto& comp : components(g, s)) {
      if (comp.count(*core_terminals.begin())) return comp;
    }
    return std::set<VertexId>{};
  };
  // Drop cut vertices in ascending order while the core still sees no
  // terminal from outside.
  for (VertexId v : std::set<VertexId>(cut)) {
    std::set<VertexId> smaller = cut;
    smaller.erase(v);
    auto comp = core_with(smaller);
    bool clean = std::all_of(comp.begin(), comp.end(),
                             [&](VertexId x) { return !tset.count(x) || core_terminals.count(x); });
    if (clean) cut = std::move(smaller);
  }
  out.cut = cut;
  out.core = core_with(cut);
  return out;
}

namespace {

std::vector<std::set<EdgeId>> forests_rec(const ColoredMultigraph& h, const Groups& groups, int k,
                                          std::uint64_t seed, int depth, ForestPackingStats& stats) {
  stats.levels = std::max(stats.levels, depth + 1);
  const std::vector<VertexId> ts = union_of(groups);
  if (groups.size() == 1) return pack_trees_random_coloring(h, groups.front(), k, seed).subgraphs;

  // Groups in different components never interact; pack each part alone
  // and zip the results.
  auto comps = components(h);
  std::map<std::size_t, Groups> by_comp;
  for (const auto& grp : groups) {
    for (std::size_t c = 0; c < comps.size(); ++c) {
      if (comps[c].count(grp.front())) by_comp[c].push_back(grp);
    }
  }
  if (by_comp.size() > 1) {
    std::vector<std::set<EdgeId>> out;
    bool first = true;
    for (auto& [c, part] : by_comp) {
      auto sub = forests_rec(induced_subgraph(h, comps[c]), part, k, child_seed(seed, depth + static_cast<int>(c)),
                             depth, stats);
      if (first) {
        out = std::move(sub);
        first = false;
        continue;
      }
      out.resize(std::min(out.size(), sub.size()));
      for (std::size_t j = 0; j < out.size(); ++j) out[j].insert(sub[j].begin(), sub[j].end());
    }
    return out;
  }

  ReductionResult red = reduce_to_bipartite(h);
  const ColoredMultigraph& r = red.reduced;
  GoodSeparator sep = find_good_separator(r, groups, k);
  stats.max_separator_iterations = std::max(stats.max_separator_iterations, sep.iterations);

  if (sep.cut.empty()) {
    int kk = min_element_connectivity(r, ts);
    auto trees = pack_trees_random_coloring(r, ts, std::max(1, kk), seed).subgraphs;
    return lift_all(red.trace, h, trees, ts);
  }

  std::vector<VertexId> core_ts;
  Groups outside;
  for (const auto& grp : groups) {
    if (sep.core.count(grp.front())) {
      core_ts.insert(core_ts.end(), grp.begin(), grp.end());
    } else {
      outside.push_back(grp);
    }
  }
  core_ts = sorted_unique(core_ts);
  ColoredMultigraph core = induced_subgraph(r, sep.core);
  auto trees = pack_trees_random_coloring(core, core_ts, sep.connectivity_floor, seed).subgraphs;

  // Rest of the graph plus a clique on the separator.
  ColoredMultigraph rest = r;
  for (VertexId v : sep.core) rest.remove_vertex(v);
  std::map<EdgeId, std::pair<VertexId, VertexId>> clique;
  std::vector<VertexId> s(sep.cut.begin(), sep.cut.end());
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) clique[rest.add_edge(s[i], s[j])] = {s[i], s[j]};
  }

  std::vector<std::set<EdgeId>> combined;
  if (outside.empty()) {
    combined = trees;
  } else {
    auto forests = forests_rec(rest, outside, k, child_seed(seed, depth), depth + 1, stats);
    std::size_t count = std::min(trees.size(), forests.size());
    auto anchor = [&](VertexId u) {
      for (VertexId a : r.neighbors(u)) {
        if (sep.core.count(a)) return a;
      }
      throw ConsistencyError("separator vertex " + std::to_string(u) + " has no core neighbour");
    };
    for (std::size_t j = 0; j < count; ++j) {
      std::set<EdgeId> f = trees[j];
      for (EdgeId e : forests[j]) {
        auto it = clique.find(e);
        if (it == clique.end()) {
          f.insert(e);
          continue;
        }
        // u - a, the tree path a..b, then b - v.
        auto [u, v] = it->second;
        VertexId a = anchor(u);
        VertexId b = anchor(v);
        f.insert(r.edges_between(u, a).front());
        f.insert(r.edges_between(v, b).front());
        auto path = path_in(r, trees[j], a, b);
        if (!path) throw ConsistencyError("core tree does not join two core terminals");
        f.insert(path->begin(), path->end());
      }
      combined.push_back(std::move(f));
    }
  }
  return lift_all(red.trace, h, combined, ts);
}

}  // namespace

Packing pack_forests(const ColoredMultigraph& g, const Groups& groups, int k, std::uint64_t seed,
                     ForestPackingStats* stats) {
  if (k < 1) throw InvalidArgument("k must be positive");
  Packing out;
  out.kind = Packing::Kind::forests;
  Groups live;
  for (const auto& grp : groups) {
    if (grp.empty()) throw InvalidArgument("empty terminal group");
    require_terminals(g, grp);
    out.groups.push_back(grp);
    auto u = sorted_unique(grp);
    if (u.size() >= 2) live.push_back(std::move(u));
  }
  if (live.empty()) {
    out.subgraphs.emplace_back();
    return out;
  }
  const std::vector<VertexId> ts = union_of(live);
  ColoredMultigraph h = with_terminals(g, ts);
  for (std::size_t i = 0; i < live.size(); ++i) {
    if (!terminals_connected(h, live[i])) {
      throw NoPacking("group " + std::to_string(i) + " is disconnected");
    }
    int got = min_element_connectivity(h, live[i], k);
    if (got < k) {
      throw InvalidArgument("group " + std::to_string(i) + " is only " + std::to_string(got) +
                            "-element-connected");
    }
  }
  ForestPackingStats local;
  out.subgraphs = forests_rec(h, live, k, seed, 0, local);
  if (stats) *stats = local;
  return out;
}

}  // namespace elemconn
