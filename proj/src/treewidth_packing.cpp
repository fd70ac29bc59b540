#include "elemconn/treewidth_packing.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <string>

#include "elemconn/connectivity.hpp"
#include "elemconn/errors.hpp"
#include "elemconn/reduction.hpp"
#include "elemconn/steiner_packing.hpp"

namespace elemconn {

namespace {

std::uint64_t mix(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed ^ (0x9e3779b97f4a7c15ULL * (salt + 7));
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Decomposition of g of width < r: `candidate` if it fits, else the heuristic.
TreeDecomposition fit(const ColoredMultigraph& g, const TreeDecomposition& candidate, int r) {
  if (check_tree_decomposition(g, candidate).empty() && candidate.width() <= r - 1) return candidate;
  TreeDecomposition h = min_degree_decomposition(g);
  if (check_tree_decomposition(g, h).empty() && h.width() <= r - 1) return h;
  throw ConsistencyError("lost a decomposition of width " + std::to_string(r - 1));
}

// Carries a decomposition of the pre-reduction graph over to the reduced one.
// Subdivision whites are the only vertices without a bag; each gets a leaf
// bag next to one holding both of its neighbours.
TreeDecomposition carry_over(const TreeDecomposition& td, const ColoredMultigraph& before,
                             const ReductionResult& red) {
  std::map<VertexId, VertexId> rename;
  for (VertexId v : before.vertex_ids()) {
    VertexId c = red.trace.current(v);
    if (red.reduced.has_vertex(c)) rename[v] = c;
  }
  TreeDecomposition out = project_decomposition(td, rename);
  std::set<VertexId> covered;
  for (const auto& b : out.bags) covered.insert(b.begin(), b.end());
  for (VertexId v : red.reduced.vertex_ids()) {
    if (covered.count(v)) continue;
    std::vector<VertexId> nb = red.reduced.neighbors(v);
    int host = -1;
    for (std::size_t i = 0; i < out.bags.size() && host < 0; ++i) {
      if (std::all_of(nb.begin(), nb.end(), [&](VertexId x) { return out.bags[i].count(x) != 0; })) {
        host = static_cast<int>(i);
      }
    }
    std::set<VertexId> leaf(nb.begin(), nb.end());
    leaf.insert(v);
    out.bags.push_back(leaf);
    if (host >= 0) {
      out.tree_edges.emplace_back(host, static_cast<int>(out.bags.size()) - 1);
    } else if (out.bags.size() > 1) {
      out.tree_edges.emplace_back(0, static_cast<int>(out.bags.size()) - 1);  // invalid; fit() repairs
    }
  }
  return out;
}

struct Cutset {
  std::set<VertexId> side;       // V': vertices cut off by the bag
  std::set<VertexId> side_terms;
  std::set<VertexId> bag_terms;  // C'
};

// Bag C and a union of components of G - C holding between r and 2r
// terminals. Children are scanned bottom-up so every child subtree seen
// holds fewer than r terminals below its own bag.
std::optional<Cutset> find_cutset(const TreeDecomposition& td, const std::set<VertexId>& terms, int r) {
  const int n = static_cast<int>(td.bags.size());
  if (n == 0) return std::nullopt;
  std::vector<std::vector<int>> adj(n);
  for (auto [a, b] : td.tree_edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<int> parent(n, -1), order;
  std::vector<bool> seen(n, false);
  std::deque<int> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    order.push_back(x);
    for (int y : adj[x]) {
      if (seen[y]) continue;
      seen[y] = true;
      parent[y] = x;
      queue.push_back(y);
    }
  }
  std::vector<std::vector<int>> children(n);
  for (int x : order) {
    if (parent[x] >= 0) children[parent[x]].push_back(x);
  }

  std::vector<std::set<VertexId>> tsub(n);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int x = *it;
    for (VertexId v : td.bags[x]) {
      if (terms.count(v)) tsub[x].insert(v);
    }
    for (int c : children[x]) tsub[x].insert(tsub[c].begin(), tsub[c].end());

    const auto& bag = td.bags[x];
    auto below = [&](int c) {
      std::set<VertexId> s;
      for (VertexId t : tsub[c]) {
        if (!bag.count(t)) s.insert(t);
      }
      return s;
    };
    std::vector<int> chosen;
    std::set<VertexId> acc;
    for (int c : children[x]) {
      std::set<VertexId> s = below(c);
      int sz = static_cast<int>(s.size());
      if (sz >= r && sz <= 2 * r) {
        chosen = {c};
        acc = std::move(s);
        break;
      }
      if (sz < r && sz > 0) {
        chosen.push_back(c);
        acc.insert(s.begin(), s.end());
        if (static_cast<int>(acc.size()) >= r) break;
      }
    }
    if (static_cast<int>(acc.size()) < r || static_cast<int>(acc.size()) > 2 * r) continue;

    Cutset out;
    out.side_terms = acc;
    for (VertexId v : bag) {
      if (terms.count(v)) out.bag_terms.insert(v);
    }
    // Collect every vertex of the chosen subtrees outside the bag.
    std::deque<int> q(chosen.begin(), chosen.end());
    while (!q.empty()) {
      int y = q.front();
      q.pop_front();
      for (VertexId v : td.bags[y]) {
        if (!bag.count(v)) out.side.insert(v);
      }
      for (int c : children[y]) q.push_back(c);
    }
    return out;
  }
  return std::nullopt;
}

struct Level {
  const int r;
  const int k;
  TreewidthStats& stats;

  std::vector<std::set<EdgeId>> fallback(const ColoredMultigraph& h, const std::vector<VertexId>& ts,
                                         std::uint64_t seed) {
    stats.fell_back = true;
    return pack_trees_random_coloring(h, ts, k, seed).subgraphs;
  }

  // h: blacks are exactly ts. Returns edge sets of h.
  std::vector<std::set<EdgeId>> run(const ColoredMultigraph& h, const std::vector<VertexId>& ts,
                                    const TreeDecomposition& td, std::uint64_t seed) {
    ++stats.levels;
    if (ts.size() <= (std::size_t{1} << std::min(r, 30))) {
      return pack_trees_random_coloring(h, ts, k, seed).subgraphs;
    }

    ReductionResult red = reduce_to_bipartite(h);
    const ColoredMultigraph& g = red.reduced;
    TreeDecomposition tdr = fit(g, carry_over(td, h, red), r);
    const std::set<VertexId> tset(ts.begin(), ts.end());

    auto cs = find_cutset(tdr, tset, r);
    if (!cs) return fallback(h, ts, seed);

    // Peel small white cuts off V' u C', keeping a part with a V' terminal.
    const int theta = std::max(1, static_cast<int>(std::ceil(k / (2.0 * r * r))));
    std::set<VertexId> cur = cs->side;
    cur.insert(cs->bag_terms.begin(), cs->bag_terms.end());
    int iterations = 0;
    while (true) {
      std::vector<VertexId> here;
      for (VertexId t : ts) {
        if (cur.count(t)) here.push_back(t);
      }
      if (here.size() < 2) break;
      auto sep = min_white_separator_below(induced_subgraph(g, cur), here, theta);
      if (!sep) break;
      if (++iterations > r) {
        throw ConsistencyError("core peeling exceeded " + std::to_string(r) + " iterations");
      }
      int pick = -1;
      std::size_t best_side = 0, best_all = 0;
      for (std::size_t i = 0; i < sep->sides.size(); ++i) {
        std::size_t side = 0, all = 0;
        for (VertexId t : ts) {
          if (!sep->sides[i].count(t)) continue;
          ++all;
          if (cs->side_terms.count(t)) ++side;
        }
        if (side == 0) continue;
        if (pick < 0 || all > best_all || (all == best_all && side > best_side)) {
          pick = static_cast<int>(i);
          best_side = side;
          best_all = all;
        }
      }
      if (pick < 0) break;
      cur = sep->sides[pick];
    }
    stats.max_core_iterations = std::max(stats.max_core_iterations, iterations);

    std::vector<VertexId> core_terms;
    for (VertexId t : ts) {
      if (cur.count(t)) core_terms.push_back(t);
    }
    if (core_terms.size() < 2 || core_terms.size() == ts.size()) return fallback(h, ts, seed);

    std::set<VertexId> boundary;
    for (VertexId v : cur) {
      for (VertexId x : g.neighbors(v)) {
        if (!cur.count(x)) boundary.insert(x);
      }
    }
    for (VertexId s : boundary) {
      if (g.is_black(s)) return fallback(h, ts, seed);
    }

    std::vector<std::set<EdgeId>> core_trees =
        pack_trees_random_coloring(induced_subgraph(g, cur), core_terms, theta, mix(seed, 1)).subgraphs;

    // Contract the core into one fresh terminal adjacent to the boundary.
    ColoredMultigraph next = g;
    for (VertexId v : cur) next.remove_vertex(v);
    const VertexId hub = next.add_vertex(Color::black);
    std::map<EdgeId, EdgeId> stand_in;  // hub edge -> boundary-to-core edge of g
    for (VertexId s : boundary) {
      EdgeId via = -1;
      for (EdgeId e : g.incident(s)) {
        VertexId o = g.other(e, s);
        if (cur.count(o) && g.is_black(o)) {
          via = e;
          break;
        }
      }
      if (via < 0) return fallback(h, ts, seed);
      stand_in[next.add_edge(hub, s)] = via;
    }
    std::vector<VertexId> next_ts{hub};
    for (VertexId t : ts) {
      if (!cur.count(t)) next_ts.push_back(t);
    }
    std::sort(next_ts.begin(), next_ts.end());

    std::map<VertexId, VertexId> rename;
    for (VertexId v : g.vertex_ids()) rename[v] = cur.count(v) ? hub : v;
    TreeDecomposition next_td = fit(next, project_decomposition(tdr, rename), r);
    ++stats.cores_contracted;

    std::vector<std::set<EdgeId>> rest = run(next, next_ts, next_td, mix(seed, 2));

    const std::size_t count = std::min(rest.size(), core_trees.size());
    std::vector<std::set<EdgeId>> out;
    const std::set<VertexId> keep(ts.begin(), ts.end());
    for (std::size_t j = 0; j < count; ++j) {
      std::set<EdgeId> tree = core_trees[j];
      for (EdgeId e : rest[j]) {
        auto it = stand_in.find(e);
        tree.insert(it == stand_in.end() ? e : it->second);
      }
      out.push_back(prune_to_forest(h, red.trace.lift_edges(tree), keep));
      if (!connects_all(h, out.back(), ts)) throw ConsistencyError("combined tree misses a terminal");
    }
    return out;
  }
};

}  // namespace

int treewidth_packing_floor(int k, int r) {
  double rr = std::max(1, r);
  double lg = std::max(1.0, std::log2(3.0 * rr));
  return std::max(1, static_cast<int>(std::floor(k / (12.0 * rr * rr * lg))));
}

Packing pack_treewidth_trees(const ColoredMultigraph& g, const std::vector<VertexId>& terminals, int k,
                             const TreeDecomposition& td, std::uint64_t seed, TreewidthStats* stats) {
  std::vector<VertexId> ts = terminals;
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  if (ts.size() < 2) throw InvalidArgument("tree packing needs at least two terminals");
  if (k < 1) throw InvalidArgument("k must be positive");
  for (VertexId t : ts) {
    if (!g.has_vertex(t)) throw InvalidArgument("terminal " + std::to_string(t) + " absent");
  }
  std::string why = check_tree_decomposition(g, td);
  if (!why.empty()) throw InvalidArgument("bad tree decomposition: " + why);

  TreewidthStats local;
  local.r = td.width() + 1;
  ColoredMultigraph h = with_terminals(g, ts);
  Level level{local.r, k, local};
  Packing out;
  out.kind = Packing::Kind::trees;
  out.groups = {ts};
  out.subgraphs = level.run(h, ts, td, seed);
  if (out.subgraphs.empty()) throw NoPacking("no tree connects the terminals");
  if (stats) *stats = local;
  return out;
}

}  // namespace elemconn
