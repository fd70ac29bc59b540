#include "elemconn/tree_decomposition.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace elemconn {

int TreeDecomposition::width() const {
  int w = -1;
  for (const auto& b : bags) w = std::max(w, static_cast<int>(b.size()) - 1);
  return w;
}

namespace {

std::vector<std::vector<int>> bag_adjacency(const TreeDecomposition& td) {
  std::vector<std::vector<int>> adj(td.bags.size());
  for (auto [a, b] : td.tree_edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  return adj;
}

// Number of bags reached from `start` through bags accepted by `keep`.
template <typename Keep>
std::size_t reach(const std::vector<std::vector<int>>& adj, int start, Keep keep) {
  std::vector<bool> seen(adj.size(), false);
  std::deque<int> queue{start};
  seen[start] = true;
  std::size_t count = 1;
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (int y : adj[x]) {
      if (seen[y] || !keep(y)) continue;
      seen[y] = true;
      ++count;
      queue.push_back(y);
    }
  }
  return count;
}

}  // namespace

std::string check_tree_decomposition(const ColoredMultigraph& g, const TreeDecomposition& td) {
  const int n = static_cast<int>(td.bags.size());
  if (n == 0) return g.num_vertices() == 0 ? "" : "no bags";
  for (auto [a, b] : td.tree_edges) {
    if (a < 0 || b < 0 || a >= n || b >= n || a == b) return "bad bag-tree edge";
  }
  if (static_cast<int>(td.tree_edges.size()) != n - 1) return "bag tree has the wrong number of edges";
  auto adj = bag_adjacency(td);
  if (static_cast<int>(reach(adj, 0, [](int) { return true; })) != n) return "bag tree is disconnected";

  std::map<VertexId, std::vector<int>> holding;
  for (int i = 0; i < n; ++i) {
    for (VertexId v : td.bags[i]) {
      if (!g.has_vertex(v)) return "bag " + std::to_string(i) + " names unknown vertex " + std::to_string(v);
      holding[v].push_back(i);
    }
  }
  for (VertexId v : g.vertex_ids()) {
    if (!holding.count(v)) return "vertex " + std::to_string(v) + " in no bag";
  }
  for (const auto& [e, ed] : g.edges()) {
    bool covered = std::any_of(td.bags.begin(), td.bags.end(), [&](const std::set<VertexId>& b) {
      return b.count(ed.u) && b.count(ed.v);
    });
    if (!covered) return "edge " + std::to_string(e) + " in no bag";
  }
  for (const auto& [v, list] : holding) {
    std::size_t got = reach(adj, list.front(), [&](int b) { return td.bags[b].count(v) != 0; });
    if (got != list.size()) return "bags holding vertex " + std::to_string(v) + " are not connected";
  }
  return "";
}

TreeDecomposition min_degree_decomposition(const ColoredMultigraph& g) {
  std::map<VertexId, std::set<VertexId>> adj;
  for (VertexId v : g.vertex_ids()) adj[v] = {};
  for (const auto& [e, ed] : g.edges()) {
    adj[ed.u].insert(ed.v);
    adj[ed.v].insert(ed.u);
  }
  TreeDecomposition td;
  std::vector<VertexId> order;
  std::map<VertexId, int> position;
  while (!adj.empty()) {
    auto best = adj.begin();
    for (auto it = adj.begin(); it != adj.end(); ++it) {
      if (it->second.size() < best->second.size()) best = it;
    }
    VertexId v = best->first;
    std::set<VertexId> nb = best->second;
    std::set<VertexId> bag = nb;
    bag.insert(v);
    position[v] = static_cast<int>(order.size());
    order.push_back(v);
    td.bags.push_back(std::move(bag));
    for (VertexId a : nb) {
      adj[a].erase(v);
      for (VertexId b : nb) {
        if (a != b) adj[a].insert(b);
      }
    }
    adj.erase(best);
  }
  // Bag of v hangs below the bag of its earliest-eliminated later neighbour.
  std::vector<int> roots;
  for (std::size_t i = 0; i < order.size(); ++i) {
    int parent = -1;
    for (VertexId u : td.bags[i]) {
      if (u == order[i]) continue;
      int p = position[u];
      if (parent < 0 || p < parent) parent = p;
    }
    if (parent >= 0) {
      td.tree_edges.push_back({static_cast<int>(i), parent});
    } else {
      roots.push_back(static_cast<int>(i));
    }
  }
  for (std::size_t i = 1; i < roots.size(); ++i) td.tree_edges.push_back({roots[i - 1], roots[i]});
  return td;
}

TreeDecomposition project_decomposition(const TreeDecomposition& td,
                                        const std::map<VertexId, VertexId>& rename) {
  const int n = static_cast<int>(td.bags.size());
  std::vector<std::set<VertexId>> bags(n);
  for (int i = 0; i < n; ++i) {
    for (VertexId v : td.bags[i]) {
      auto it = rename.find(v);
      if (it != rename.end()) bags[i].insert(it->second);
    }
  }
  std::vector<std::set<int>> adj(n);
  for (auto [a, b] : td.tree_edges) {
    adj[a].insert(b);
    adj[b].insert(a);
  }
  std::vector<bool> alive(n, true);
  int alive_count = n;
  for (int i = 0; i < n; ++i) {
    if (!bags[i].empty() || alive_count == 1) continue;
    // Splice the empty bag out by hanging its other neighbours off one of them.
    std::vector<int> nb(adj[i].begin(), adj[i].end());
    for (int x : nb) adj[x].erase(i);
    for (std::size_t j = 1; j < nb.size(); ++j) {
      adj[nb[0]].insert(nb[j]);
      adj[nb[j]].insert(nb[0]);
    }
    adj[i].clear();
    alive[i] = false;
    --alive_count;
  }
  TreeDecomposition out;
  std::vector<int> index(n, -1);
  for (int i = 0; i < n; ++i) {
    if (!alive[i]) continue;
    index[i] = static_cast<int>(out.bags.size());
    out.bags.push_back(bags[i]);
  }
  for (int i = 0; i < n; ++i) {
    for (int j : adj[i]) {
      if (alive[i] && alive[j] && i < j) out.tree_edges.push_back({index[i], index[j]});
    }
  }
  if (out.bags.size() == 1 && out.bags[0].empty()) out.bags.clear();
  return out;
}

}  // namespace elemconn
