#include "elemconn/subgraph.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include <boost/pending/disjoint_sets.hpp>

namespace elemconn {

namespace {

// Union-find keyed by dense indices into g's vertex-id range.
class VertexSets {
 public:
  explicit VertexSets(const ColoredMultigraph& g)
      : n_(static_cast<std::size_t>(g.next_vertex_id())), ds_(n_) {}
  bool unite(VertexId a, VertexId b) {
    auto ra = ds_.find_set(a);
    auto rb = ds_.find_set(b);
    if (ra == rb) return false;
    ds_.link(ra, rb);
    return true;
  }
  std::size_t find(VertexId a) { return ds_.find_set(a); }

 private:
  std::size_t n_;
  boost::disjoint_sets_with_storage<> ds_;
};

}  // namespace

std::set<VertexId> vertices_of(const ColoredMultigraph& g, const std::set<EdgeId>& edges) {
  std::set<VertexId> out;
  for (EdgeId e : edges) {
    const Edge& ed = g.edge(e);
    out.insert(ed.u);
    out.insert(ed.v);
  }
  return out;
}

std::vector<std::set<VertexId>> components(const ColoredMultigraph& g,
                                           const std::set<VertexId>& removed) {
  std::vector<std::set<VertexId>> out;
  std::set<VertexId> seen;
  for (VertexId s : g.vertex_ids()) {
    if (removed.count(s) || seen.count(s)) continue;
    std::set<VertexId> comp{s};
    std::deque<VertexId> queue{s};
    seen.insert(s);
    while (!queue.empty()) {
      VertexId x = queue.front();
      queue.pop_front();
      for (EdgeId e : g.incident(x)) {
        VertexId y = g.other(e, x);
        if (removed.count(y) || seen.count(y)) continue;
        seen.insert(y);
        comp.insert(y);
        queue.push_back(y);
      }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<std::set<VertexId>> edge_set_components(const ColoredMultigraph& g,
                                                    const std::set<EdgeId>& edges) {
  VertexSets ds(g);
  auto verts = vertices_of(g, edges);
  for (EdgeId e : edges) ds.unite(g.edge(e).u, g.edge(e).v);
  std::map<std::size_t, std::set<VertexId>> by_root;
  for (VertexId v : verts) by_root[ds.find(v)].insert(v);
  std::vector<std::set<VertexId>> out;
  for (auto& [root, comp] : by_root) out.push_back(std::move(comp));
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return *a.begin() < *b.begin(); });
  return out;
}

bool connects_all(const ColoredMultigraph& g, const std::set<EdgeId>& edges,
                  const std::vector<VertexId>& terminals) {
  std::set<VertexId> tset(terminals.begin(), terminals.end());
  if (tset.size() <= 1) return true;
  for (EdgeId e : edges) {
    if (!g.has_edge(e)) return false;
  }
  VertexSets ds(g);
  for (EdgeId e : edges) ds.unite(g.edge(e).u, g.edge(e).v);
  auto verts = vertices_of(g, edges);
  VertexId first = *tset.begin();
  if (!verts.count(first)) return false;
  auto root = ds.find(first);
  for (VertexId t : tset) {
    if (!verts.count(t) || ds.find(t) != root) return false;
  }
  return true;
}

std::set<EdgeId> spanning_forest(const ColoredMultigraph& g, const std::set<EdgeId>& edges) {
  VertexSets ds(g);
  std::set<EdgeId> out;
  for (EdgeId e : edges) {
    if (ds.unite(g.edge(e).u, g.edge(e).v)) out.insert(e);
  }
  return out;
}

std::set<EdgeId> prune_to_forest(const ColoredMultigraph& g, const std::set<EdgeId>& edges,
                                 const std::set<VertexId>& keep) {
  std::set<EdgeId> forest = spanning_forest(g, edges);
  std::map<VertexId, std::set<EdgeId>> inc;
  for (EdgeId e : forest) {
    inc[g.edge(e).u].insert(e);
    inc[g.edge(e).v].insert(e);
  }
  std::deque<VertexId> leaves;
  for (const auto& [v, es] : inc) {
    if (es.size() == 1 && !keep.count(v)) leaves.push_back(v);
  }
  while (!leaves.empty()) {
    VertexId v = leaves.front();
    leaves.pop_front();
    auto& es = inc[v];
    if (es.size() != 1 || keep.count(v)) continue;
    EdgeId e = *es.begin();
    VertexId w = g.other(e, v);
    forest.erase(e);
    es.clear();
    inc[w].erase(e);
    if (inc[w].size() == 1 && !keep.count(w)) leaves.push_back(w);
  }
  return forest;
}

std::optional<std::vector<EdgeId>> path_in(const ColoredMultigraph& g, const std::set<EdgeId>& edges,
                                           VertexId a, VertexId b) {
  if (a == b) return std::vector<EdgeId>{};
  std::map<VertexId, std::vector<std::pair<VertexId, EdgeId>>> adj;
  for (EdgeId e : edges) {
    const Edge& ed = g.edge(e);
    adj[ed.u].push_back({ed.v, e});
    adj[ed.v].push_back({ed.u, e});
  }
  for (auto& [v, list] : adj) std::sort(list.begin(), list.end());
  std::map<VertexId, std::pair<VertexId, EdgeId>> parent;
  parent[a] = {a, -1};
  std::deque<VertexId> queue{a};
  while (!queue.empty()) {
    VertexId x = queue.front();
    queue.pop_front();
    if (x == b) break;
    for (auto [y, e] : adj[x]) {
      if (parent.count(y)) continue;
      parent[y] = {x, e};
      queue.push_back(y);
    }
  }
  if (!parent.count(b)) return std::nullopt;
  std::vector<EdgeId> out;
  for (VertexId x = b; x != a; x = parent[x].first) out.push_back(parent[x].second);
  std::reverse(out.begin(), out.end());
  return out;
}

std::optional<std::set<EdgeId>> connector(const ColoredMultigraph& g, const std::set<VertexId>& allowed,
                                          const std::vector<VertexId>& terminals) {
  if (terminals.empty()) return std::set<EdgeId>{};
  VertexId root = terminals.front();
  if (!allowed.count(root)) return std::nullopt;
  std::set<EdgeId> tree;
  std::set<VertexId> seen{root};
  std::deque<VertexId> queue{root};
  while (!queue.empty()) {
    VertexId x = queue.front();
    queue.pop_front();
    for (EdgeId e : g.incident(x)) {
      VertexId y = g.other(e, x);
      if (!allowed.count(y) || seen.count(y)) continue;
      seen.insert(y);
      tree.insert(e);
      queue.push_back(y);
    }
  }
  for (VertexId t : terminals) {
    if (!seen.count(t)) return std::nullopt;
  }
  return prune_to_forest(g, tree, std::set<VertexId>(terminals.begin(), terminals.end()));
}

}  // namespace elemconn
