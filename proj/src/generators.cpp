#include "elemconn/generators.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <random>

#include "elemconn/errors.hpp"

namespace elemconn {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidArgument(what);
}

std::vector<VertexId> pick(std::mt19937_64& rng, std::vector<VertexId> from, int count) {
  std::shuffle(from.begin(), from.end(), rng);
  from.resize(std::min<std::size_t>(from.size(), count));
  std::sort(from.begin(), from.end());
  return from;
}

// Vertices 0..n-1 white; `terminals` become black group 0.
void color_terminals(ColoredMultigraph& g, const std::vector<VertexId>& ts, int group = 0) {
  for (VertexId t : ts) g.set_color(t, Color::black, group);
}

bool coin(std::mt19937_64& rng, double p) { return std::bernoulli_distribution(p)(rng); }

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

void finish(Instance& inst) { inst.groups = groups_from_graph(inst.graph); }

}  // namespace

Groups groups_from_graph(const ColoredMultigraph& g) {
  std::map<int, std::vector<VertexId>> by_group;
  std::vector<VertexId> loose;
  for (VertexId b : g.blacks()) {
    if (auto grp = g.group(b)) {
      by_group[*grp].push_back(b);
    } else {
      loose.push_back(b);
    }
  }
  Groups out;
  for (auto& [id, members] : by_group) out.push_back(std::move(members));
  if (!loose.empty()) out.push_back(std::move(loose));
  return out;
}

std::vector<VertexId> terminals_of(const Groups& groups) {
  std::vector<VertexId> all;
  for (const auto& grp : groups) all.insert(all.end(), grp.begin(), grp.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

Instance make_hk(int k) {
  require(k >= 1, "hk needs k >= 1");
  Instance inst{"hk", {}, {}, k, std::nullopt};
  auto& g = inst.graph;
  VertexId x = g.add_vertex(Color::black, 0);
  VertexId y = g.add_vertex(Color::black, 0);
  for (int i = 0; i < k; ++i) {
    VertexId w = g.add_vertex(Color::white);
    g.add_edge(x, w);
    g.add_edge(w, y);
  }
  finish(inst);
  return inst;
}

Instance make_gk(int k) {
  require(k >= 1, "gk needs k >= 1");
  Instance inst{"gk", {}, {}, k, std::nullopt};
  auto& g = inst.graph;
  VertexId s = g.add_vertex(Color::black, 0);
  VertexId t = g.add_vertex(Color::black, 0);
  int next_group = 1;
  for (int p = 0; p < k; ++p) {
    std::vector<VertexId> path;
    for (int j = 0; j < k; ++j) path.push_back(g.add_vertex(Color::white));
    g.add_edge(s, path.front());
    for (int j = 0; j + 1 < k; ++j) {
      // H_k spliced into the white-white edge path[j] - path[j+1]
      VertexId x = g.add_vertex(Color::black, next_group);
      VertexId y = g.add_vertex(Color::black, next_group);
      ++next_group;
      for (int i = 0; i < k; ++i) {
        VertexId w = g.add_vertex(Color::white);
        g.add_edge(x, w);
        g.add_edge(w, y);
      }
      g.add_edge(path[j], x);
      g.add_edge(y, path[j + 1]);
    }
    g.add_edge(path.back(), t);
  }
  finish(inst);
  return inst;
}

Instance make_k3k(int k) {
  require(k >= 1, "k3k needs k >= 1");
  Instance inst{"k3k", {}, {}, k, std::nullopt};
  auto& g = inst.graph;
  std::vector<VertexId> ts;
  for (int i = 0; i < 3; ++i) ts.push_back(g.add_vertex(Color::black, 0));
  for (int i = 0; i < k; ++i) {
    VertexId w = g.add_vertex(Color::white);
    for (VertexId t : ts) g.add_edge(t, w);
  }
  finish(inst);
  return inst;
}

Instance make_tw_chain(int m, int k) {
  require(m >= 2 && k >= 1, "tw-chain needs m >= 2 and k >= 1");
  Instance inst{"tw-chain", {}, {}, k, std::nullopt};
  auto& g = inst.graph;
  std::vector<std::array<VertexId, 2>> pairs;
  for (int i = 0; i < m; ++i) {
    VertexId a = g.add_vertex(Color::black, i);
    VertexId b = g.add_vertex(Color::black, i);
    pairs.push_back({a, b});
  }
  TreeDecomposition td;
  for (int i = 0; i + 1 < m; ++i) {
    std::set<VertexId> spine{pairs[i][0], pairs[i][1], pairs[i + 1][0], pairs[i + 1][1]};
    int at = static_cast<int>(td.bags.size());
    td.bags.push_back(spine);
    if (i > 0) td.tree_edges.emplace_back(at - 1 - k, at);
    for (int j = 0; j < k; ++j) {
      VertexId w = g.add_vertex(Color::white);
      for (VertexId t : spine) g.add_edge(t, w);
      std::set<VertexId> leaf = spine;
      leaf.insert(w);
      td.bags.push_back(leaf);
      td.tree_edges.emplace_back(at, static_cast<int>(td.bags.size()) - 1);
    }
  }
  inst.td = td;
  finish(inst);
  return inst;
}

Instance make_random(int n, double p, int terminals, std::uint64_t seed) {
  require(n >= 2 && terminals >= 1 && terminals <= n, "random needs 1 <= terminals <= n");
  require(p >= 0 && p <= 1, "random needs 0 <= p <= 1");
  Instance inst{"random", {}, {}, 0, std::nullopt};
  std::mt19937_64 rng(seed);
  auto& g = inst.graph;
  std::vector<VertexId> all;
  for (int i = 0; i < n; ++i) all.push_back(g.add_vertex(Color::white));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (coin(rng, p)) g.add_edge(i, j);
    }
  }
  color_terminals(g, pick(rng, all, terminals));
  finish(inst);
  return inst;
}

Instance make_random_planar(int rows, int cols, double keep, int terminals, std::uint64_t seed) {
  require(rows >= 1 && cols >= 1 && terminals >= 1 && terminals <= rows * cols, "bad random-planar size");
  Instance inst{"random-planar", {}, {}, 0, std::nullopt};
  std::mt19937_64 rng(seed);
  auto& g = inst.graph;
  std::vector<VertexId> all;
  for (int i = 0; i < rows * cols; ++i) all.push_back(g.add_vertex(Color::white));
  auto at = [&](int r, int c) { return r * cols + c; };
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols && coin(rng, keep)) g.add_edge(at(r, c), at(r, c + 1));
      if (r + 1 < rows && coin(rng, keep)) g.add_edge(at(r, c), at(r + 1, c));
      if (r + 1 < rows && c + 1 < cols && coin(rng, keep)) g.add_edge(at(r, c), at(r + 1, c + 1));
    }
  }
  color_terminals(g, pick(rng, all, terminals));
  finish(inst);
  return inst;
}

Instance make_planar_wheel(int terminals, int k, std::uint64_t seed, bool hub, int groups) {
  require(terminals >= 3, "planar-wheel needs at least 3 terminals");
  require(k >= (hub ? 3 : 2), "planar-wheel k too small");
  require(groups >= 1 && groups <= terminals, "bad group count");
  Instance inst{"planar-wheel", {}, {}, k, std::nullopt};
  std::mt19937_64 rng(seed);
  auto& g = inst.graph;
  std::vector<VertexId> ts;
  for (int i = 0; i < terminals; ++i) ts.push_back(g.add_vertex(Color::black, i * groups / terminals));
  // Two smallest bundles (plus the hub) decide every pair's connectivity.
  const int budget = hub ? k - 1 : k;
  const int big = (budget + 1) / 2;
  const int small = budget - big;
  const int thin = uniform(rng, 0, terminals - 1);
  for (int i = 0; i < terminals; ++i) {
    VertexId a = ts[i], b = ts[(i + 1) % terminals];
    int size = i == thin ? small : big;
    VertexId prev = -1;
    for (int j = 0; j < size; ++j) {
      VertexId w = g.add_vertex(Color::white);
      g.add_edge(a, w);
      g.add_edge(w, b);
      if (prev >= 0 && coin(rng, 0.3)) g.add_edge(prev, w);
      prev = w;
    }
  }
  if (hub) {
    VertexId h = g.add_vertex(Color::white);
    for (VertexId t : ts) g.add_edge(h, t);
  }
  finish(inst);
  return inst;
}

Instance make_random_tw(int m, int k, int width, std::uint64_t seed) {
  require(m >= 2 && k >= 1, "random-tw needs m >= 2 and k >= 1");
  require(width >= 2 && width <= 4, "random-tw width must be 2, 3 or 4");
  Instance inst{"random-tw", {}, {}, k, std::nullopt};
  std::mt19937_64 rng(seed);
  auto& g = inst.graph;
  std::vector<VertexId> ts;
  for (int i = 0; i < m; ++i) ts.push_back(g.add_vertex(Color::black, 0));
  TreeDecomposition td;
  int prev_spine = -1;
  for (int i = 0; i + 1 < m; ++i) {
    std::set<VertexId> spine{ts[i], ts[i + 1]};
    const bool reach = width >= 3 && i + 2 < m;
    if (reach) spine.insert(ts[i + 2]);
    const int at = static_cast<int>(td.bags.size());
    td.bags.push_back(spine);
    if (prev_spine >= 0) td.tree_edges.emplace_back(prev_spine, at);
    prev_spine = at;

    std::vector<VertexId> layer;
    for (int j = 0; j < k; ++j) {
      VertexId w = g.add_vertex(Color::white);
      g.add_edge(ts[i], w);
      g.add_edge(w, ts[i + 1]);
      if (reach && coin(rng, 0.5)) g.add_edge(w, ts[i + 2]);
      layer.push_back(w);
    }
    if (width == 4) {
      // a path of bags, each holding two consecutive layer whites
      int last = at;
      for (int j = 0; j < k; ++j) {
        std::set<VertexId> bag = spine;
        bag.insert(layer[j]);
        if (j + 1 < k) {
          bag.insert(layer[j + 1]);
          if (coin(rng, 0.4)) g.add_edge(layer[j], layer[j + 1]);
        }
        td.bags.push_back(bag);
        td.tree_edges.emplace_back(last, static_cast<int>(td.bags.size()) - 1);
        last = static_cast<int>(td.bags.size()) - 1;
      }
    } else {
      for (VertexId w : layer) {
        std::set<VertexId> bag = spine;
        bag.insert(w);
        td.bags.push_back(bag);
        td.tree_edges.emplace_back(at, static_cast<int>(td.bags.size()) - 1);
      }
    }
  }
  inst.td = td;
  finish(inst);
  return inst;
}

Instance make_random_channels(int terminals, int k, std::uint64_t seed) {
  require(terminals >= 2 && k >= 1, "random-channels needs >= 2 terminals and k >= 1");
  Instance inst{"random-channels", {}, {}, k, std::nullopt};
  std::mt19937_64 rng(seed);
  auto& g = inst.graph;
  std::vector<VertexId> ts;
  for (int i = 0; i < terminals; ++i) ts.push_back(g.add_vertex(Color::black, 0));
  std::vector<std::vector<VertexId>> channels;
  for (int c = 0; c < k; ++c) {
    int size = uniform(rng, 1, 3);
    std::vector<VertexId> ch;
    for (int j = 0; j < size; ++j) {
      VertexId w = g.add_vertex(Color::white);
      if (!ch.empty()) g.add_edge(ch[uniform(rng, 0, static_cast<int>(ch.size()) - 1)], w);
      ch.push_back(w);
    }
    g.add_edge(ts[0], ch[0]);  // the only port of t_0 into this channel
    for (int i = 1; i < terminals; ++i) g.add_edge(ts[i], ch[uniform(rng, 0, size - 1)]);
    channels.push_back(std::move(ch));
  }
  // white-white noise between channels; never touches t_0, so kappa' stays k
  const int noise = k / 3;
  for (int n = 0; n < noise && k >= 2; ++n) {
    int a = uniform(rng, 0, k - 1), b = uniform(rng, 0, k - 1);
    if (a == b) continue;
    VertexId u = channels[a][uniform(rng, 0, static_cast<int>(channels[a].size()) - 1)];
    VertexId v = channels[b][uniform(rng, 0, static_cast<int>(channels[b].size()) - 1)];
    g.add_edge(u, v);
  }
  finish(inst);
  return inst;
}

Instance make_clustered(int groups, int group_size, int k, std::uint64_t seed) {
  require(groups >= 1 && group_size >= 2 && k >= 1, "clustered needs groups >= 1, size >= 2, k >= 1");
  Instance inst{"clustered", {}, {}, k, std::nullopt};
  std::mt19937_64 rng(seed);
  auto& g = inst.graph;
  std::vector<std::vector<VertexId>> members(groups);
  std::vector<VertexId> whites;
  for (int q = 0; q < groups; ++q) {
    for (int i = 0; i < group_size; ++i) members[q].push_back(g.add_vertex(Color::black, q));
  }
  for (int q = 0; q < groups; ++q) {
    for (int c = 0; c < k; ++c) {
      VertexId w = g.add_vertex(Color::white);
      whites.push_back(w);
      if (coin(rng, 0.3)) {
        // two-white channel, terminals split across both ends
        VertexId w2 = g.add_vertex(Color::white);
        whites.push_back(w2);
        g.add_edge(w, w2);
        for (VertexId t : members[q]) g.add_edge(t, coin(rng, 0.5) ? w : w2);
      } else {
        for (VertexId t : members[q]) g.add_edge(t, w);
      }
    }
  }
  // shared whites touching several groups, and some white-white noise
  for (int s = 0; s < 2 * groups; ++s) {
    VertexId w = g.add_vertex(Color::white);
    int touches = uniform(rng, 2, 3);
    for (int j = 0; j < touches; ++j) {
      const auto& grp = members[uniform(rng, 0, groups - 1)];
      VertexId t = grp[uniform(rng, 0, group_size - 1)];
      if (g.edges_between(t, w).empty()) g.add_edge(t, w);
    }
    whites.push_back(w);
  }
  for (int n = 0; n < groups * 2; ++n) {
    VertexId a = whites[uniform(rng, 0, static_cast<int>(whites.size()) - 1)];
    VertexId b = whites[uniform(rng, 0, static_cast<int>(whites.size()) - 1)];
    if (a != b) g.add_edge(a, b);
  }
  finish(inst);
  return inst;
}

std::vector<std::string> generator_kinds() {
  return {"hk", "gk", "k3k", "tw-chain", "random", "random-planar", "planar-wheel", "random-tw",
          "random-channels", "clustered"};
}

Instance generate_instance(const std::string& kind, const std::map<std::string, std::string>& params,
                           std::uint64_t seed) {
  auto num = [&](const std::string& key, double fallback) {
    auto it = params.find(key);
    if (it == params.end()) return fallback;
    try {
      std::size_t used = 0;
      double v = std::stod(it->second, &used);
      if (used != it->second.size()) throw std::invalid_argument(key);
      return v;
    } catch (const std::exception&) {
      throw InvalidArgument("bad value for " + key + ": " + it->second);
    }
  };
  auto integer = [&](const std::string& key, int fallback) { return static_cast<int>(num(key, fallback)); };
  for (const auto& [key, value] : params) {
    static const std::set<std::string> known{"k", "m", "n", "p", "t", "rows", "cols", "keep",
                                             "width", "hub", "groups", "size"};
    if (!known.count(key)) throw InvalidArgument("unknown parameter " + key);
  }
  if (kind == "hk") return make_hk(integer("k", 4));
  if (kind == "gk") return make_gk(integer("k", 3));
  if (kind == "k3k") return make_k3k(integer("k", 4));
  if (kind == "tw-chain") return make_tw_chain(integer("m", 5), integer("k", 6));
  if (kind == "random") return make_random(integer("n", 10), num("p", 0.3), integer("t", 3), seed);
  if (kind == "random-planar") {
    return make_random_planar(integer("rows", 3), integer("cols", 4), num("keep", 0.8), integer("t", 4), seed);
  }
  if (kind == "planar-wheel") {
    return make_planar_wheel(integer("t", 4), integer("k", 5), seed, integer("hub", 1) != 0, integer("groups", 1));
  }
  if (kind == "random-tw") return make_random_tw(integer("m", 12), integer("k", 4), integer("width", 2), seed);
  if (kind == "random-channels") return make_random_channels(integer("t", 4), integer("k", 8), seed);
  if (kind == "clustered") return make_clustered(integer("groups", 3), integer("size", 3), integer("k", 3), seed);
  throw InvalidArgument("unknown generator kind " + kind);
}

}  // namespace elemconn
