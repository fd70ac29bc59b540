#include <doctest.h>

#include "elemconn/errors.hpp"
#include "elemconn/generators.hpp"
#include "elemconn/oracle.hpp"

using namespace elemconn;

TEST_CASE("brute kappa' on small gadgets") {
  ColoredMultigraph g;
  g.add_vertex(Color::black);
  g.add_vertex(Color::white);
  g.add_vertex(Color::black);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  CHECK(brute_element_connectivity(g, 0, 2) == 1);
  CHECK(brute_element_connectivity(make_hk(4).graph, 0, 1) == 4);
  CHECK(brute_element_connectivity(make_k3k(3).graph, 0, 2) == 3);

  // two parallel black-black edges and one white path
  ColoredMultigraph bb;
  bb.add_vertex(Color::black);
  bb.add_vertex(Color::black);
  bb.add_vertex(Color::white);
  bb.add_edge(0, 1);
  bb.add_edge(0, 1);
  bb.add_edge(0, 2);
  bb.add_edge(2, 1);
  CHECK(brute_element_connectivity(bb, 0, 1) == 3);

  CHECK_THROWS_AS(brute_element_connectivity(g, 0, 1), InvalidArgument);
  CHECK_THROWS_AS(brute_element_connectivity(make_gk(3).graph, 0, 1), InvalidArgument);
}

TEST_CASE("brute vertex connectivity") {
  ColoredMultigraph c;
  for (int i = 0; i < 4; ++i) c.add_vertex(Color::white);
  for (int i = 0; i < 4; ++i) c.add_edge(i, (i + 1) % 4);
  CHECK(brute_vertex_connected(c, 0, 2, 2));
  CHECK_FALSE(brute_vertex_connected(c, 0, 2, 3));
  c.add_edge(0, 2);
  c.add_edge(0, 2);
  CHECK(brute_vertex_connected(c, 0, 2, 4));
  CHECK_FALSE(brute_vertex_connected(c, 0, 2, 5));
}

TEST_CASE("packing validator") {
  Instance hk = make_hk(3);
  Packing good;
  for (VertexId w : hk.graph.whites()) {
    auto inc = hk.graph.incident(w);
    good.subgraphs.emplace_back(inc.begin(), inc.end());
  }
  CHECK(validate_packing(hk.graph, hk.groups, good).pass());

  SUBCASE("shared white") {
    Packing bad = good;
    bad.subgraphs[1].insert(*bad.subgraphs[0].begin());
    auto rep = validate_packing(hk.graph, hk.groups, bad);
    CHECK_FALSE(rep.pass());
    CHECK_FALSE(rep.summary().empty());
  }
  SUBCASE("disconnected subgraph") {
    Packing bad = good;
    bad.subgraphs[0].erase(bad.subgraphs[0].begin());
    auto rep = validate_packing(hk.graph, hk.groups, bad);
    REQUIRE_FALSE(rep.pass());
    CHECK(rep.violations[0].invariant == "connects-group");
    CHECK(rep.violations[0].subgraph == 0);
  }
  SUBCASE("unknown edge") {
    Packing bad = good;
    bad.subgraphs[0].insert(99);
    CHECK_FALSE(validate_packing(hk.graph, hk.groups, bad).pass());
  }
  SUBCASE("more subgraphs than kappa' allows") {
    Packing bad = good;
    bad.subgraphs.push_back({});
    auto rep = validate_packing(hk.graph, hk.groups, bad);
    CHECK_FALSE(rep.pass());
  }
  SUBCASE("a cycle is not a tree") {
    Instance h2 = make_hk(2);
    Packing cyc;
    std::set<EdgeId> all;
    for (EdgeId e : h2.graph.edge_ids()) all.insert(e);
    cyc.subgraphs.push_back(all);
    CHECK_FALSE(validate_packing(h2.graph, h2.groups, cyc).pass());
  }
}

TEST_CASE("brute SS-k optimum") {
  SUBCASE("tree with k = 1 keeps the terminal paths") {
    SskInstance inst;
    for (int i = 0; i < 5; ++i) inst.graph.add_vertex(Color::white);
    inst.graph.add_edge(0, 1, Cost{2});
    inst.graph.add_edge(1, 2, Cost{3});
    inst.graph.add_edge(1, 3, Cost{4});
    inst.graph.add_edge(0, 4, Cost{7});
    inst.root = 0;
    inst.terminals = {2, 3};
    inst.k = 1;
    SskOptimum opt = brute_ssk_opt(inst);
    CHECK(opt.cost == Cost{9});
    CHECK(opt.edges == std::set<EdgeId>{0, 1, 2});
  }
  SUBCASE("cycle with k = 2 needs every edge") {
    SskInstance inst;
    for (int i = 0; i < 5; ++i) inst.graph.add_vertex(Color::white);
    for (int i = 0; i < 5; ++i) inst.graph.add_edge(i, (i + 1) % 5, Cost{i + 1});
    inst.graph.add_edge(0, 2, Cost{100});
    inst.root = 0;
    inst.terminals = {2, 3};
    inst.k = 2;
    SskOptimum opt = brute_ssk_opt(inst);
    CHECK(opt.cost == Cost{15});
    CHECK(opt.edges.size() == 5);
  }
}
