// Runs the nine acceptance checks and prints one PASS/FAIL line for each.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "elemconn/connectivity.hpp"
#include "elemconn/errors.hpp"
#include "elemconn/generators.hpp"
#include "elemconn/oracle.hpp"
#include "elemconn/planar_packing.hpp"
#include "elemconn/reduction.hpp"
#include "elemconn/spider.hpp"
#include "elemconn/ssk.hpp"
#include "elemconn/steiner_packing.hpp"
#include "elemconn/treewidth_packing.hpp"

using namespace elemconn;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::ostringstream note;

  void fail(const std::string& why) {
    if (pass) note << why;
    pass = false;
  }
};

bool whites_degree_two(const ColoredMultigraph& g, const std::vector<VertexId>& ts, const Packing& p) {
  std::set<VertexId> tset(ts.begin(), ts.end());
  for (const auto& s : p.subgraphs) {
    std::map<VertexId, int> deg;
    for (EdgeId e : s) {
      ++deg[g.edge(e).u];
      ++deg[g.edge(e).v];
    }
    for (auto [v, d] : deg) {
      if (!tset.count(v) && d != 2) return false;
    }
  }
  return true;
}

void reduction_preservation(Outcome& o) {
  auto t0 = Clock::now();
  int graphs = 0, brute_checked = 0;
  for (std::uint64_t seed = 1; seed <= 220; ++seed) {
    int n = 6 + static_cast<int>(seed % 9);          // 6..14
    double p = seed % 2 ? 0.3 : 0.5;
    int t = 2 + static_cast<int>((seed / 2) % 5);     // 2..6
    Instance inst = make_random(n, p, t, seed);
    ReductionResult red = reduce_to_bipartite(inst.graph);
    ++graphs;
    if (has_white_white_edge(red.reduced)) o.fail("white-white edge left, seed " + std::to_string(seed));
    PairTable before = all_pairs_element_connectivity(inst.graph, black_pairs(inst.graph));
    PairTable after = all_pairs_element_connectivity(red.reduced, black_pairs(inst.graph));
    if (before != after) o.fail("table changed, seed " + std::to_string(seed));
    if (n <= 10) {
      ++brute_checked;
      if (brute_all_pairs_element_connectivity(inst.graph) != before) {
        o.fail("brute force disagrees, seed " + std::to_string(seed));
      }
      // subdivided black-black edges can push the reduced graph past the cap
      if (red.reduced.num_vertices() <= kBruteMaxVertices &&
          brute_all_pairs_element_connectivity(red.reduced) != after) {
        o.fail("brute force disagrees after reduction, seed " + std::to_string(seed));
      }
    }
  }
  double s = seconds_since(t0);
  if (s > 120) o.fail("took " + std::to_string(s) + " s");
  o.note << graphs << " graphs, " << brute_checked << " brute-checked, " << s << " s";
}

// Small graphs the library is exercised on: gadgets, random, planar.
std::vector<ColoredMultigraph> small_corpus() {
  std::vector<ColoredMultigraph> out;
  for (int k = 1; k <= 8; ++k) out.push_back(make_hk(k).graph);
  out.push_back(make_k3k(3).graph);
  out.push_back(make_k3k(7).graph);
  for (std::uint64_t seed = 1; seed <= 120; ++seed) {
    int n = 4 + static_cast<int>(seed % 7);
    out.push_back(make_random(n, 0.2 + 0.1 * static_cast<double>(seed % 5), std::min(n, 2 + static_cast<int>(seed % 4)),
                              seed)
                      .graph);
  }
  for (std::uint64_t seed = 1; seed <= 20; ++seed) out.push_back(make_random_planar(2, 4, 0.8, 3, seed).graph);
  for (std::uint64_t seed = 1; seed <= 20; ++seed) out.push_back(make_random_planar(3, 3, 0.8, 4, seed).graph);
  out.push_back(make_random_tw(3, 2, 2, 1).graph);
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    // black-black edges and parallel copies
    std::mt19937_64 rng(seed);
    ColoredMultigraph g;
    int n = 5 + static_cast<int>(seed % 6);
    for (int i = 0; i < n; ++i) g.add_vertex(rng() % 2 ? Color::black : Color::white);
    for (int i = 0; i < 2 * n; ++i) {
      VertexId a = static_cast<VertexId>(rng() % n), b = static_cast<VertexId>(rng() % n);
      if (a != b) g.add_edge(a, b);
    }
    out.push_back(g);
  }
  return out;
}

void oracle_agreement(Outcome& o) {
  int graphs = 0, pairs = 0;
  for (const ColoredMultigraph& g : small_corpus()) {
    if (g.num_vertices() > 10) continue;
    ++graphs;
    PairTable flow = all_pairs_element_connectivity(g, black_pairs(g));
    PairTable brute = brute_all_pairs_element_connectivity(g);
    pairs += static_cast<int>(flow.size());
    if (flow != brute) o.fail("mismatch on corpus graph " + std::to_string(graphs));
  }
  o.note << graphs << " graphs, " << pairs << " pairs";
}

void tree_packing_floor_check(Outcome& o) {
  int runs = 0;
  double worst = 0;
  for (int k : {4, 8, 16, 32}) {
    for (int t : {3, 4, 6}) {
      for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        Instance inst = make_random_channels(t, k, seed);
        auto ts = terminals_of(inst.groups);
        int kappa = min_element_connectivity(inst.graph, ts);
        if (kappa != k) {
          o.fail("generator gave kappa' " + std::to_string(kappa));
          continue;
        }
        auto t0 = Clock::now();
        Packing p = pack_trees_random_coloring(inst.graph, ts, k, seed);
        double s = seconds_since(t0);
        worst = std::max(worst, s);
        ++runs;
        int floor = tree_packing_floor(k, ts.size());
        if (static_cast<int>(p.size()) < floor) {
          o.fail("k=" + std::to_string(k) + " got " + std::to_string(p.size()) + " < " + std::to_string(floor));
        }
        if (!validate_packing(inst.graph, inst.groups, p).pass()) o.fail("invalid packing");
        if (s > 30) o.fail("slow instance");
      }
    }
  }
  o.note << runs << " instances, slowest " << worst << " s";
}

void forest_packing_check(Outcome& o) {
  int runs = 0;
  std::size_t total = 0;
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    int groups = 2 + static_cast<int>(seed % 3);
    int size = 2 + static_cast<int>((seed / 3) % 3);
    int target = 3 + static_cast<int>(seed % 6);
    Instance inst = make_clustered(groups, size, target, seed);
    int k = INT32_MAX;
    for (const auto& grp : inst.groups) k = std::min(k, min_element_connectivity(inst.graph, grp));
    Packing p = pack_forests(inst.graph, inst.groups, k, seed);
    ++runs;
    total += p.size();
    auto rep = validate_packing(inst.graph, inst.groups, p, true);
    if (!rep.pass()) o.fail("seed " + std::to_string(seed) + ": " + rep.summary());
    int floor = forest_packing_floor(k, terminals_of(inst.groups).size(), inst.groups.size());
    if (static_cast<int>(p.size()) < floor) o.fail("below floor, seed " + std::to_string(seed));
    if (static_cast<int>(p.size()) > k) o.fail("above kappa', seed " + std::to_string(seed));
  }
  o.note << runs << " instances, " << total << " forests";
}

void planar_check(Outcome& o) {
  int runs = 0, grids = 0;
  for (int k : {6, 10, 15, 20}) {
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      Instance w = make_planar_wheel(5 + static_cast<int>(seed), k, seed, seed != 2);
      auto ts = terminals_of(w.groups);
      if (min_element_connectivity(w.graph, ts) != k) {
        o.fail("wheel kappa' differs from k");
        continue;
      }
      int need = std::max(1, (k + 4) / 5 - 1);
      Packing p = pack_planar_trees(w.graph, ts, k);
      ++runs;
      if (static_cast<int>(p.size()) < need) o.fail("k=" + std::to_string(k) + " only " + std::to_string(p.size()));
      if (!validate_packing(w.graph, w.groups, p).pass()) o.fail("invalid tree packing");
      if (!whites_degree_two(w.graph, ts, p)) o.fail("white of degree != 2");

      Instance f = make_planar_wheel(6, k, seed, true, 3);
      int kf = INT32_MAX;
      for (const auto& grp : f.groups) kf = std::min(kf, min_element_connectivity(f.graph, grp));
      PlanarStats stats;
      Packing q = pack_planar_forests(f.graph, f.groups, kf, {}, &stats);
      grids += stats.grids;
      int needf = std::max(1, (kf + 4) / 5 - 1);
      if (static_cast<int>(q.size()) < needf) o.fail("forest count below threshold");
      if (!validate_packing(f.graph, f.groups, q).pass()) o.fail("invalid forest packing");
      if (!whites_degree_two(f.graph, terminals_of(f.groups), q)) o.fail("forest white of degree != 2");
    }
  }
  if (grids == 0) o.fail("grid replacement never ran");
  o.note << runs << " tree runs, " << grids << " grid replacements";
}

void spider_check(Outcome& o) {
  int runs = 0;
  std::mt19937_64 rng(99);
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    Instance inst;
    switch (seed % 4) {
      case 0: inst = make_random_channels(3 + static_cast<int>(seed % 3), 2 + static_cast<int>(seed % 3), seed); break;
      case 1: inst = make_k3k(2 + static_cast<int>(seed % 5)); break;
      case 2: inst = make_planar_wheel(4 + static_cast<int>(seed % 3), 3 + static_cast<int>(seed % 4), seed); break;
      default: inst = make_random_tw(4, 2 + static_cast<int>(seed % 3), 2, seed); break;
    }
    auto blacks = terminals_of(inst.groups);
    if (blacks.size() < 2) continue;
    ColoredMultigraph g = with_terminals(inst.graph, blacks);
    if (has_black_black_edge(g)) g = subdivide_terminal_edges(g).first;
    for (EdgeId e : g.edge_ids()) g.set_cost(e, Cost{static_cast<std::int64_t>(1 + rng() % 9)});
    int k = min_element_connectivity(g, blacks);
    if (k < 1) continue;
    SpiderDecomposition sd = spider_decompose(g, blacks, k);
    ++runs;
    auto rep = validate_spider_decomposition(g, blacks, k, sd);
    if (!rep.pass()) o.fail("seed " + std::to_string(seed) + ": " + rep.summary());
    auto paths = extract_element_paths(sd);
    std::map<EdgeId, int> use;
    Cost path_cost{0}, host_cost{0};
    for (VertexId b : blacks) {
      if (static_cast<int>(paths[b].size()) != k) o.fail("wrong number of paths");
      for (const auto& p : paths[b]) {
        for (EdgeId e : p.edges) {
          ++use[e];
          path_cost += g.edge(e).cost;
        }
      }
    }
    for (auto [e, n] : use) {
      if (n > 2) o.fail("edge used " + std::to_string(n) + " times");
    }
    for (EdgeId e : g.edge_ids()) host_cost += g.edge(e).cost;
    if (path_cost > Cost{2} * host_cost) o.fail("path cost above twice the host");
  }
  if (runs < 100) o.fail("only " + std::to_string(runs) + " instances");
  o.note << runs << " instances";
}

SskInstance random_ssk(std::mt19937_64& rng, int n, double p, int k, int terminals) {
  SskInstance inst;
  for (int i = 0; i < n; ++i) inst.graph.add_vertex(Color::white);
  std::uniform_real_distribution<double> coin(0, 1);
  std::uniform_int_distribution<int> cost(1, 9);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (coin(rng) < p) inst.graph.add_edge(i, j, Cost{cost(rng)});
    }
  }
  inst.root = 0;
  std::vector<VertexId> rest;
  for (int i = 1; i < n; ++i) rest.push_back(i);
  std::shuffle(rest.begin(), rest.end(), rng);
  inst.terminals.assign(rest.begin(), rest.begin() + terminals);
  inst.k = k;
  return inst;
}

bool feasible(const SskInstance& inst) {
  std::set<EdgeId> all;
  for (EdgeId e : inst.graph.edge_ids()) all.insert(e);
  return verify_ssk_feasible(all, inst).pass;
}

void ssk_check(Outcome& o) {
  std::mt19937_64 rng(7);
  int solved = 0;
  while (solved < 50) {
    int n = 6 + static_cast<int>(rng() % 7);
    int k = 1 + static_cast<int>(rng() % 3);
    SskInstance inst = random_ssk(rng, n, 0.55, k, 2 + static_cast<int>(rng() % 3));
    if (!feasible(inst)) continue;
    try {
      SskResult r = greedy_ssk(inst, rng(), true);  // re-checks the contract after each step
      if (!verify_ssk_feasible(r.edges, inst).pass) o.fail("infeasible greedy output");
    } catch (const Error& e) {
      o.fail(e.what());
    }
    ++solved;
  }

  std::vector<double> ratios;
  double bound = 1e18;
  while (ratios.size() < 20) {
    int n = 5 + static_cast<int>(rng() % 3);
    int k = 1 + static_cast<int>(rng() % 2);
    SskInstance inst = random_ssk(rng, n, 0.6, k, 3);
    if (inst.graph.num_edges() > kBruteMaxSskEdges || !feasible(inst)) continue;
    SskOptimum opt = brute_ssk_opt(inst);
    SskResult r = greedy_ssk(inst, rng(), true);
    ratios.push_back(boost::rational_cast<double>(r.cost) / boost::rational_cast<double>(opt.cost));
    bound = std::min(bound, 8.0 * k * (1 + std::log(static_cast<double>(inst.terminals.size()))));
  }
  std::sort(ratios.begin(), ratios.end());
  double median = (ratios[9] + ratios[10]) / 2;
  if (median > bound) o.fail("median ratio above bound");
  o.note << solved << " feasible runs, median greedy/OPT " << median << " (max " << ratios.back() << ", bound "
         << bound << ")";
}

void counterexample_check(Outcome& o) {
  Instance gk = make_gk(10);
  ColoredMultigraph st = with_terminals(gk.graph, terminals_of(gk.groups));
  int failed = 0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    if (connecting_color_classes(st, {0, 1}, 2, seed) == 0) ++failed;
  }
  if (failed < 50) o.fail("2-coloring failed only " + std::to_string(failed) + " times");
  Packing p = pack_forests(gk.graph, gk.groups, 10, 1);
  auto rep = validate_packing(gk.graph, gk.groups, p);
  if (!rep.pass()) o.fail(rep.summary());
  o.note << failed << "/100 colorings disconnect s,t; separator packing gives " << p.size() << " valid forests";
}

void treewidth_check(Outcome& o) {
  std::vector<Instance> cases;
  cases.push_back(make_tw_chain(5, 8));
  for (int width : {2, 3, 4}) {
    for (std::uint64_t seed = 1; seed <= 4; ++seed) cases.push_back(make_random_tw(12 + 10 * width, 6, width, seed));
  }
  int worst_iter = 0, levels = 0;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const Instance& inst = cases[i];
    auto ts = terminals_of(inst.groups);
    int k = min_element_connectivity(inst.graph, ts);
    TreewidthStats stats;
    Packing p = pack_treewidth_trees(inst.graph, ts, k, *inst.td, i + 1, &stats);
    worst_iter = std::max(worst_iter, stats.max_core_iterations);
    levels = std::max(levels, stats.levels);
    if (static_cast<int>(p.size()) < treewidth_packing_floor(k, stats.r)) o.fail("below floor");
    if (stats.max_core_iterations > stats.r) o.fail("core search ran more than r rounds");
    auto rep = validate_packing(inst.graph, {ts}, p);
    if (!rep.pass()) o.fail(inst.kind + ": " + rep.summary());
  }
  o.note << cases.size() << " instances, deepest recursion " << levels << ", most core rounds " << worst_iter;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<void(Outcome&)> run;
  };
  std::vector<Criterion> all = {
      {"reduction preservation", reduction_preservation},
      {"oracle agreement", oracle_agreement},
      {"tree packing floor", tree_packing_floor_check},
      {"forest packing floor and upper bound", forest_packing_check},
      {"planar guarantee", planar_check},
      {"spider conditions", spider_check},
      {"SS-k feasibility", ssk_check},
      {"counterexample reproduction", counterexample_check},
      {"treewidth packing", treewidth_check},
  };
  int failures = 0;
  for (std::size_t i = 0; i < all.size(); ++i) {
    Outcome o;
    auto t0 = Clock::now();
    try {
      all[i].run(o);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::printf("criterion %zu %s: %s (%s; %.1f s)\n", i + 1, all[i].name, o.pass ? "PASS" : "FAIL",
                o.note.str().c_str(), seconds_since(t0));
    std::fflush(stdout);
    if (!o.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
