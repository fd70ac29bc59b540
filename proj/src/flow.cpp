#include "elemconn/flow.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "elemconn/errors.hpp"

namespace elemconn {

NodeId FlowNetwork::add_node() {
  out_.emplace_back();
  return static_cast<NodeId>(out_.size()) - 1;
}

int FlowNetwork::add_arc(NodeId tail, NodeId head, std::int64_t capacity, Cost cost,
                         std::int64_t tag) {
  if (tail < 0 || head < 0 || tail >= num_nodes() || head >= num_nodes()) {
    throw InvalidArgument("arc endpoint out of range");
  }
  if (tail == head) throw InvalidArgument("arc from a node to itself");
  if (capacity < 0) throw InvalidArgument("negative capacity");
  if (cost < 0) throw InvalidArgument("negative arc cost");
  arcs_.push_back(Arc{tail, head, capacity, cost, tag});
  out_[tail].push_back(static_cast<int>(arcs_.size()) - 1);
  return static_cast<int>(arcs_.size()) - 1;
}

namespace {

// Residual graph: arc 2i is forward copy of network arc i, 2i+1 its reverse.
struct Residual {
  struct R {
    NodeId to;
    std::int64_t cap;
    Cost cost;
  };
  std::vector<R> r;
  std::vector<std::vector<int>> adj;

  explicit Residual(const FlowNetwork& n) : adj(n.num_nodes()) {
    r.reserve(n.arcs().size() * 2);
    for (const Arc& a : n.arcs()) {
      adj[a.tail].push_back(static_cast<int>(r.size()));
      r.push_back({a.head, a.capacity, a.cost});
      adj[a.head].push_back(static_cast<int>(r.size()));
      r.push_back({a.tail, 0, -a.cost});
    }
  }

  void push(int id, std::int64_t amount) {
    r[id].cap -= amount;
    r[id ^ 1].cap += amount;
  }

  FlowAssignment assignment(const FlowNetwork& n, NodeId s, std::int64_t value) const {
    FlowAssignment f;
    f.value = value;
    f.flow.resize(n.arcs().size());
    for (std::size_t i = 0; i < n.arcs().size(); ++i) {
      f.flow[i] = r[2 * i + 1].cap;
      f.cost += n.arcs()[i].cost * f.flow[i];
    }
    f.source_side.assign(adj.size(), false);
    std::deque<NodeId> queue{s};
    f.source_side[s] = true;
    while (!queue.empty()) {
      NodeId x = queue.front();
      queue.pop_front();
      for (int id : adj[x]) {
        if (r[id].cap > 0 && !f.source_side[r[id].to]) {
          f.source_side[r[id].to] = true;
          queue.push_back(r[id].to);
        }
      }
    }
    return f;
  }
};

void check_terminals(const FlowNetwork& n, NodeId s, NodeId t) {
  if (s < 0 || t < 0 || s >= n.num_nodes() || t >= n.num_nodes()) {
    throw InvalidArgument("flow source or sink absent");
  }
  if (s == t) throw InvalidArgument("flow source equals sink");
}

class Dinic {
 public:
  Dinic(Residual& res, NodeId s, NodeId t) : res_(res), s_(s), t_(t) {}

  std::int64_t run(std::int64_t limit) {
    std::int64_t total = 0;
    while (total < limit && bfs()) {
      iter_.assign(res_.adj.size(), 0);
      while (total < limit) {
        std::int64_t pushed = dfs(s_, limit - total);
        if (pushed == 0) break;
        total += pushed;
      }
    }
    return total;
  }

 private:
  bool bfs() {
    level_.assign(res_.adj.size(), -1);
    level_[s_] = 0;
    std::deque<NodeId> queue{s_};
    while (!queue.empty()) {
      NodeId x = queue.front();
      queue.pop_front();
      for (int id : res_.adj[x]) {
        const auto& e = res_.r[id];
        if (e.cap > 0 && level_[e.to] < 0) {
          level_[e.to] = level_[x] + 1;
          queue.push_back(e.to);
        }
      }
    }
    return level_[t_] >= 0;
  }

  std::int64_t dfs(NodeId x, std::int64_t want) {
    if (x == t_) return want;
    for (auto& i = iter_[x]; i < res_.adj[x].size(); ++i) {
      int id = res_.adj[x][i];
      const auto& e = res_.r[id];
      if (e.cap <= 0 || level_[e.to] != level_[x] + 1) continue;
      std::int64_t got = dfs(e.to, std::min(want, e.cap));
      if (got > 0) {
        res_.push(id, got);
        return got;
      }
    }
    return 0;
  }

  Residual& res_;
  NodeId s_;
  NodeId t_;
  std::vector<int> level_;
  std::vector<std::size_t> iter_;
};

}  // namespace

FlowAssignment max_flow(const FlowNetwork& n, NodeId s, NodeId t, std::int64_t limit) {
  check_terminals(n, s, t);
  Residual res(n);
  std::int64_t value = Dinic(res, s, t).run(limit);
  return res.assignment(n, s, value);
}

std::optional<FlowAssignment> min_cost_flow_of_value(const FlowNetwork& n, NodeId s, NodeId t,
                                                     std::int64_t value) {
  if (value < 0) throw InvalidArgument("negative flow value");
  check_terminals(n, s, t);
  Residual res(n);
  std::int64_t sent = 0;
  const std::size_t nodes = res.adj.size();
  while (sent < value) {
    // Bellman-Ford in queue form; the residual graph never has a negative
    // cycle because every augmentation follows a shortest path.
    std::vector<std::optional<Cost>> dist(nodes);
    std::vector<int> via(nodes, -1);
    std::vector<bool> queued(nodes, false);
    std::deque<NodeId> queue{s};
    dist[s] = Cost{0};
    queued[s] = true;
    while (!queue.empty()) {
      NodeId x = queue.front();
      queue.pop_front();
      queued[x] = false;
      for (int id : res.adj[x]) {
        const auto& e = res.r[id];
        if (e.cap <= 0) continue;
        Cost nd = *dist[x] + e.cost;
        if (!dist[e.to] || nd < *dist[e.to]) {
          dist[e.to] = nd;
          via[e.to] = id;
          if (!queued[e.to]) {
            queued[e.to] = true;
            queue.push_back(e.to);
          }
        }
      }
    }
    if (!dist[t]) return std::nullopt;
    std::int64_t amount = value - sent;
    for (NodeId x = t; x != s; x = res.r[via[x] ^ 1].to) amount = std::min(amount, res.r[via[x]].cap);
    for (NodeId x = t; x != s; x = res.r[via[x] ^ 1].to) res.push(via[x], amount);
    sent += amount;
  }
  return res.assignment(n, s, sent);
}

std::vector<std::vector<int>> decompose_into_paths(const FlowNetwork& n, const FlowAssignment& f,
                                                   NodeId s, NodeId t) {
  check_terminals(n, s, t);
  if (f.flow.size() != n.arcs().size()) throw InvalidArgument("flow does not match network");
  std::vector<std::int64_t> balance(n.num_nodes(), 0);
  for (std::size_t i = 0; i < f.flow.size(); ++i) {
    const Arc& a = n.arc(static_cast<int>(i));
    if (f.flow[i] < 0 || f.flow[i] > a.capacity) {
      throw InvalidArgument("flow on arc " + std::to_string(i) + " outside [0, capacity]");
    }
    balance[a.tail] -= f.flow[i];
    balance[a.head] += f.flow[i];
  }
  for (NodeId v = 0; v < n.num_nodes(); ++v) {
    if (v == s || v == t) continue;
    if (balance[v] != 0) throw InvalidArgument("flow not conserved at node " + std::to_string(v));
  }
  if (balance[t] != f.value || balance[s] != -f.value) {
    throw InvalidArgument("flow value does not match the source/sink imbalance");
  }

  std::vector<std::int64_t> rest = f.flow;
  std::vector<std::size_t> next(n.num_nodes(), 0);
  std::vector<std::vector<int>> paths;
  for (std::int64_t unit = 0; unit < f.value; ++unit) {
    std::vector<int> stack;            // arcs of the current walk
    std::vector<int> pos(n.num_nodes(), -1);  // node -> index in walk
    NodeId x = s;
    pos[s] = 0;
    while (x != t) {
      const auto& out = n.out_arcs(x);
      while (next[x] < out.size() && rest[out[next[x]]] == 0) ++next[x];
      if (next[x] == out.size()) throw InvalidArgument("flow support has no path to the sink");
      int a = out[next[x]];
      NodeId y = n.arc(a).head;
      if (pos[y] >= 0) {
        // Cancel the cycle y -> ... -> x -> y and resume from y.
        --rest[a];
        while (static_cast<int>(stack.size()) > pos[y]) {
          int c = stack.back();
          stack.pop_back();
          --rest[c];
          pos[n.arc(c).head] = -1;
        }
        pos[y] = static_cast<int>(stack.size());
        x = y;
        continue;
      }
      stack.push_back(a);
      pos[y] = static_cast<int>(stack.size());
      x = y;
    }
    for (int a : stack) --rest[a];
    paths.push_back(std::move(stack));
  }
  return paths;
}

}  // namespace elemconn
