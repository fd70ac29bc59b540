#include "elemconn/oracle.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <functional>
#include <map>
#include <numeric>

#include "elemconn/errors.hpp"

namespace elemconn {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

std::string str(VertexId v) { return std::to_string(v); }

// u and r connected in g with `cut` deleted and direct u-r edges ignored.
bool reachable_without(const ColoredMultigraph& g, VertexId u, VertexId r, const std::set<VertexId>& cut) {
  std::set<VertexId> seen{u};
  std::vector<VertexId> stack{u};
  while (!stack.empty()) {
    VertexId x = stack.back();
    stack.pop_back();
    for (EdgeId e : g.incident(x)) {
      VertexId y = g.other(e, x);
      if ((x == u && y == r) || (x == r && y == u)) continue;
      if (cut.count(y) || seen.count(y)) continue;
      if (y == r) return true;
      seen.insert(y);
      stack.push_back(y);
    }
  }
  return false;
}

}  // namespace

PairTable brute_all_pairs_element_connectivity(const ColoredMultigraph& g) {
  if (g.num_vertices() > kBruteMaxVertices) {
    throw InvalidArgument("brute-force connectivity is capped at " + std::to_string(kBruteMaxVertices) +
                          " vertices");
  }
  const std::vector<VertexId> ids = g.vertex_ids();
  std::map<VertexId, int> index;
  for (std::size_t i = 0; i < ids.size(); ++i) index[ids[i]] = static_cast<int>(i);
  const std::vector<VertexId> blacks = g.blacks();
  const std::vector<VertexId> whites = g.whites();
  const int n = static_cast<int>(ids.size());
  const int nw = static_cast<int>(whites.size());
  const int nb = static_cast<int>(blacks.size());

  std::vector<std::pair<int, int>> soft, hard;  // soft: has a white end; hard: black-black
  for (const auto& [id, ed] : g.edges()) {
    int a = index[ed.u], b = index[ed.v];
    if (g.is_black(ed.u) && g.is_black(ed.v)) {
      hard.emplace_back(a, b);
    } else {
      soft.emplace_back(a, b);
    }
  }

  std::vector<std::vector<int>> best(nb, std::vector<int>(nb, INT_MAX));
  std::vector<bool> removed(n, false);
  for (std::uint32_t mask = 0; mask < (1u << nw); ++mask) {
    const int size = std::popcount(mask);
    for (int i = 0; i < nw; ++i) removed[index[whites[i]]] = (mask >> i) & 1u;
    // Blobs: pieces that stay together unless a black-black edge is cut.
    UnionFind uf(n);
    for (auto [a, b] : soft) {
      if (!removed[a] && !removed[b]) uf.unite(a, b);
    }
    std::map<int, int> blob_of_root;
    std::vector<int> blob(nb);
    for (int i = 0; i < nb; ++i) {
      int root = uf.find(index[blacks[i]]);
      auto it = blob_of_root.try_emplace(root, static_cast<int>(blob_of_root.size())).first;
      blob[i] = it->second;
    }
    std::vector<int> black_pos(n, -1);
    for (int i = 0; i < nb; ++i) black_pos[index[blacks[i]]] = i;
    const int blobs = static_cast<int>(blob_of_root.size());
    if (blobs < 2) continue;
    std::vector<std::pair<int, int>> hard_blobs;
    for (auto [a, b] : hard) {
      int x = blob[black_pos[a]], y = blob[black_pos[b]];
      if (x != y) hard_blobs.emplace_back(x, y);
    }
    for (std::uint32_t side = 0; side < (1u << (blobs - 1)); ++side) {
      // Blob 0 stays on side 0; blob j > 0 reads bit j-1.
      auto on = [&](int j) { return j == 0 ? 0u : (side >> (j - 1)) & 1u; };
      int cost = size;
      for (auto [x, y] : hard_blobs) {
        if (on(x) != on(y)) ++cost;
      }
      for (int i = 0; i < nb; ++i) {
        for (int j = i + 1; j < nb; ++j) {
          if (on(blob[i]) != on(blob[j]) && cost < best[i][j]) best[i][j] = cost;
        }
      }
    }
  }

  PairTable out;
  for (int i = 0; i < nb; ++i) {
    for (int j = i + 1; j < nb; ++j) out[{blacks[i], blacks[j]}] = best[i][j];
  }
  return out;
}

int brute_element_connectivity(const ColoredMultigraph& g, VertexId u, VertexId v) {
  if (!g.has_vertex(u) || !g.has_vertex(v) || !g.is_black(u) || !g.is_black(v)) {
    throw InvalidArgument("endpoints must be black vertices");
  }
  if (u == v) throw InvalidArgument("endpoints coincide");
  PairTable t = brute_all_pairs_element_connectivity(g);
  return t.at({std::min(u, v), std::max(u, v)});
}

bool brute_vertex_connected(const ColoredMultigraph& g, VertexId t, VertexId r, int k) {
  if (g.num_vertices() > kBruteMaxVertices) throw InvalidArgument("brute-force cut search too large");
  int direct = static_cast<int>(g.edges_between(t, r).size());
  int budget = k - 1 - direct;  // largest cut that would still refute k paths
  if (budget < 0) return true;
  std::vector<VertexId> others;
  for (VertexId v : g.vertex_ids()) {
    if (v != t && v != r) others.push_back(v);
  }
  std::set<VertexId> cut;
  std::function<bool(std::size_t)> refuted = [&](std::size_t from) {
    if (!reachable_without(g, t, r, cut)) return true;
    if (static_cast<int>(cut.size()) == budget) return false;
    for (std::size_t i = from; i < others.size(); ++i) {
      cut.insert(others[i]);
      bool hit = refuted(i + 1);
      cut.erase(others[i]);
      if (hit) return true;
    }
    return false;
  };
  return !refuted(0);
}

std::string ValidationReport::summary() const {
  if (violations.empty()) return "ok";
  std::string s;
  for (const auto& v : violations) {
    if (!s.empty()) s += "; ";
    s += v.invariant;
    if (v.subgraph >= 0) s += "[" + std::to_string(v.subgraph) + "]";
    if (!v.witness.empty()) s += ": " + v.witness;
  }
  return s;
}

ValidationReport validate_packing(const ColoredMultigraph& g, const Groups& groups, const Packing& p,
                                  bool check_upper_bound) {
  ValidationReport rep;
  auto fail = [&](std::string inv, int i, std::string w) {
    rep.violations.push_back({std::move(inv), i, std::move(w)});
  };
  std::vector<VertexId> ts;
  for (const auto& grp : groups) ts.insert(ts.end(), grp.begin(), grp.end());
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  for (VertexId t : ts) {
    if (!g.has_vertex(t)) fail("terminal-exists", -1, "vertex " + str(t));
  }
  if (!rep.pass()) return rep;
  ColoredMultigraph gt = with_terminals(g, ts);

  std::map<EdgeId, int> edge_owner;
  std::map<VertexId, int> white_owner;
  for (std::size_t i = 0; i < p.subgraphs.size(); ++i) {
    const int idx = static_cast<int>(i);
    const auto& s = p.subgraphs[i];
    bool edges_ok = true;
    for (EdgeId e : s) {
      if (!g.has_edge(e)) {
        fail("edge-exists", idx, "edge " + std::to_string(e));
        edges_ok = false;
      }
    }
    if (!edges_ok) continue;

    for (EdgeId e : s) {
      auto [it, fresh] = edge_owner.try_emplace(e, idx);
      if (!fresh) fail("edge-disjoint", idx, "edge " + std::to_string(e) + " also in " + std::to_string(it->second));
    }
    for (VertexId v : vertices_of(gt, s)) {
      if (!gt.is_white(v)) continue;
      auto [it, fresh] = white_owner.try_emplace(v, idx);
      if (!fresh) fail("white-disjoint", idx, "white " + str(v) + " also in " + std::to_string(it->second));
    }

    std::map<VertexId, int> local;
    for (VertexId v : vertices_of(gt, s)) local.emplace(v, static_cast<int>(local.size()));
    UnionFind uf(static_cast<int>(local.size()));
    for (EdgeId e : s) {
      const Edge& ed = gt.edge(e);
      if (!uf.unite(local[ed.u], local[ed.v])) {
        fail("acyclic", idx, "edge " + std::to_string(e) + " closes a cycle");
        break;
      }
    }

    if (p.kind == Packing::Kind::trees) {
      if (!connects_all(gt, s, ts)) fail("connects-group", idx, "terminals not in one tree");
      if (edge_set_components(gt, s).size() > 1) fail("single-tree", idx, "edge set is disconnected");
    } else {
      for (std::size_t j = 0; j < groups.size(); ++j) {
        if (!connects_all(gt, s, groups[j])) fail("connects-group", idx, "group " + std::to_string(j));
      }
    }
  }

  if (check_upper_bound && !p.subgraphs.empty()) {
    int bound = INT_MAX;
    for (const auto& grp : groups) {
      std::set<VertexId> distinct(grp.begin(), grp.end());
      if (distinct.size() < 2) continue;
      bound = std::min(bound, min_element_connectivity(gt, {distinct.begin(), distinct.end()}));
    }
    if (bound != INT_MAX && static_cast<int>(p.subgraphs.size()) > bound) {
      fail("upper-bound", -1, std::to_string(p.subgraphs.size()) + " subgraphs but min kappa' is " +
                                  std::to_string(bound));
    }
  }
  return rep;
}

ValidationReport validate_spider_decomposition(const ColoredMultigraph& g, const std::vector<VertexId>& blacks,
                                               int k, const SpiderDecomposition& sd) {
  ValidationReport rep;
  auto fail = [&](std::string inv, int i, std::string w) {
    rep.violations.push_back({std::move(inv), i, std::move(w)});
  };
  for (VertexId b : blacks) {
    if (!g.has_vertex(b)) fail("terminal-exists", -1, "vertex " + str(b));
  }
  if (!rep.pass()) return rep;
  ColoredMultigraph gb = with_terminals(g, blacks);

  std::map<VertexId, int> feet_seen;
  std::map<VertexId, int> white_owner;
  std::map<EdgeId, int> edge_owner;
  for (std::size_t i = 0; i < sd.spiders.size(); ++i) {
    const int idx = static_cast<int>(i);
    const Spider& s = sd.spiders[i];
    if (!gb.has_vertex(s.head)) {
      fail("leg-structure", idx, "head " + str(s.head) + " not in graph");
      continue;
    }
    if (s.legs.empty() || s.legs.size() != s.leg_edges.size()) {
      fail("leg-structure", idx, "legs and edge lists disagree");
      continue;
    }
    std::set<VertexId> whites_here;
    std::set<VertexId> feet;
    bool structure_ok = true;
    for (std::size_t j = 0; j < s.legs.size() && structure_ok; ++j) {
      const auto& leg = s.legs[j];
      const auto& le = s.leg_edges[j];
      if (leg.size() < 2 || leg.front() != s.head || le.size() + 1 != leg.size()) {
        fail("leg-structure", idx, "leg " + std::to_string(j) + " is malformed");
        structure_ok = false;
        break;
      }
      for (std::size_t a = 0; a < le.size(); ++a) {
        if (!gb.has_edge(le[a])) {
          fail("edge-exists", idx, "edge " + std::to_string(le[a]));
          structure_ok = false;
          break;
        }
        const Edge& ed = gb.edge(le[a]);
        bool joins = (ed.u == leg[a] && ed.v == leg[a + 1]) || (ed.v == leg[a] && ed.u == leg[a + 1]);
        if (!joins) {
          fail("leg-structure", idx, "edge " + std::to_string(le[a]) + " does not join its leg vertices");
          structure_ok = false;
          break;
        }
        auto [it, fresh] = edge_owner.try_emplace(le[a], idx);
        if (!fresh) {
          fail("edge-disjoint", idx, "edge " + std::to_string(le[a]) + " also in " + std::to_string(it->second));
        }
      }
      for (std::size_t a = 1; a + 1 < leg.size(); ++a) {
        if (!gb.is_white(leg[a])) fail("intermediate-white", idx, "vertex " + str(leg[a]));
        if (!whites_here.insert(leg[a]).second) fail("spider-tree", idx, "white " + str(leg[a]) + " on two legs");
      }
      VertexId foot = leg.back();
      if (!gb.is_black(foot)) fail("foot-black", idx, "vertex " + str(foot));
      if (!feet.insert(foot).second) fail("feet-distinct", idx, "vertex " + str(foot));
    }
    if (!structure_ok) continue;
    if (gb.is_white(s.head)) {
      whites_here.insert(s.head);
      if (s.legs.size() < 2) fail("white-head-feet", idx, "white head " + str(s.head) + " has one foot");
    } else if (feet.count(s.head)) {
      fail("feet-distinct", idx, "black head " + str(s.head) + " is also a foot");
    }
    for (VertexId w : whites_here) {
      auto [it, fresh] = white_owner.try_emplace(w, idx);
      if (!fresh) fail("white-disjoint", idx, "white " + str(w) + " also in " + std::to_string(it->second));
    }
    for (VertexId f : feet) ++feet_seen[f];
  }
  for (VertexId b : blacks) {
    int c = feet_seen.count(b) ? feet_seen[b] : 0;
    if (c != k) fail("foot-count", -1, "black " + str(b) + " is a foot of " + std::to_string(c) + " spiders");
    auto it = sd.foot_count.find(b);
    if (it != sd.foot_count.end() && it->second != c) {
      fail("foot-count-record", -1, "black " + str(b) + " recorded " + std::to_string(it->second));
    }
  }
  return rep;
}

SskOptimum brute_ssk_opt(const SskInstance& inst) {
  const ColoredMultigraph& g = inst.graph;
  if (g.num_edges() > kBruteMaxSskEdges) {
    throw InvalidArgument("brute-force SS-k is capped at " + std::to_string(kBruteMaxSskEdges) + " edges");
  }
  auto feasible = [&](const std::set<EdgeId>& keep) {
    ColoredMultigraph sub;
    for (VertexId v : g.vertex_ids()) sub.add_vertex_with_id(v, g.color(v));
    for (EdgeId e : keep) {
      const Edge& ed = g.edge(e);
      sub.add_edge_with_id(e, ed.u, ed.v, ed.cost);
    }
    for (VertexId t : inst.terminals) {
      if (!brute_vertex_connected(sub, t, inst.root, inst.k)) return false;
    }
    return true;
  };

  std::vector<EdgeId> order = g.edge_ids();
  std::stable_sort(order.begin(), order.end(),
                   [&](EdgeId a, EdgeId b) { return g.edge(a).cost > g.edge(b).cost; });
  std::set<EdgeId> cur(order.begin(), order.end());
  if (!feasible(cur)) throw Infeasible("the full graph is not feasible");
  Cost cur_cost{0};
  for (EdgeId e : order) cur_cost += g.edge(e).cost;
  // suffix[i]: total cost of order[i..], the most that later removals can save
  std::vector<Cost> suffix(order.size() + 1, Cost{0});
  for (std::size_t i = order.size(); i-- > 0;) suffix[i] = suffix[i + 1] + g.edge(order[i]).cost;

  SskOptimum best{cur_cost, cur};
  std::function<void(std::size_t)> dfs = [&](std::size_t i) {
    if (cur_cost < best.cost) best = {cur_cost, cur};
    if (i == order.size() || cur_cost - suffix[i] >= best.cost) return;
    EdgeId e = order[i];
    cur.erase(e);
    if (feasible(cur)) {
      cur_cost -= g.edge(e).cost;
      dfs(i + 1);
      cur_cost += g.edge(e).cost;
    }
    cur.insert(e);
    dfs(i + 1);
  };
  dfs(0);
  return best;
}

}  // namespace elemconn
