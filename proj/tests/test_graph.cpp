#include <doctest.h>

#include <random>

#include "elemconn/errors.hpp"
#include "elemconn/generators.hpp"
#include "elemconn/graph.hpp"
#include "elemconn/oracle.hpp"
#include "elemconn/subgraph.hpp"

using namespace elemconn;

namespace {

ColoredMultigraph triangle(Color c) {
  ColoredMultigraph g;
  for (int i = 0; i < 3; ++i) g.add_vertex(c);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 0);
  return g;
}

}  // namespace

TEST_CASE("construction rejects malformed edges and groups") {
  ColoredMultigraph g;
  VertexId a = g.add_vertex(Color::black, 3);
  VertexId b = g.add_vertex(Color::white);
  CHECK_THROWS_AS(g.add_edge(a, a), InvalidArgument);
  CHECK_THROWS_AS(g.add_edge(a, 17), InvalidArgument);
  CHECK_THROWS_AS(g.add_vertex_with_id(b, Color::white), InvalidArgument);
  CHECK_THROWS_AS(g.add_vertex(Color::white, 1), InvalidArgument);
  CHECK(g.group(a) == 3);
}

TEST_CASE("subdividing terminal edges") {
  SUBCASE("single edge") {
    ColoredMultigraph g;
    g.add_vertex(Color::black);
    g.add_vertex(Color::black);
    g.add_edge(0, 1);
    auto [h, trace] = subdivide_terminal_edges(g);
    CHECK(h.num_vertices() == 3);
    CHECK(h.whites().size() == 1);
    CHECK(trace.records().size() == 1);
    CHECK_FALSE(has_black_black_edge(h));
  }
  SUBCASE("no black-black edge gives the identity") {
    Instance inst = make_hk(3);
    auto [h, trace] = subdivide_terminal_edges(inst.graph);
    CHECK(h == inst.graph);
    CHECK(trace.empty());
  }
  SUBCASE("three parallel copies") {
    ColoredMultigraph g;
    g.add_vertex(Color::black);
    g.add_vertex(Color::black);
    for (int i = 0; i < 3; ++i) g.add_edge(0, 1);
    auto [h, trace] = subdivide_terminal_edges(g);
    CHECK(h.whites().size() == 3);
    for (VertexId w : h.whites()) CHECK(h.degree(w) == 2);
    CHECK(brute_element_connectivity(g, 0, 1) == 3);
    CHECK(brute_element_connectivity(h, 0, 1) == 3);
  }
}

TEST_CASE("deleting edges") {
  ColoredMultigraph g = triangle(Color::white);
  ColoredMultigraph h = delete_edge(g, 2);
  CHECK(h.num_edges() == 2);
  CHECK(h.num_vertices() == 3);

  ColoredMultigraph p;
  p.add_vertex(Color::white);
  p.add_vertex(Color::white);
  p.add_edge(0, 1);
  p.add_edge(0, 1);
  CHECK(delete_edge(p, 0).edges_between(0, 1).size() == 1);

  Instance hk = make_hk(4);
  EdgeId xw = hk.graph.incident(0).front();
  CHECK(brute_element_connectivity(hk.graph, 0, 1) == 4);
  CHECK(brute_element_connectivity(delete_edge(hk.graph, xw), 0, 1) == 3);
}

TEST_CASE("contracting edges") {
  SUBCASE("path b-w1-w2-b") {
    ColoredMultigraph g;
    g.add_vertex(Color::black);
    g.add_vertex(Color::white);
    g.add_vertex(Color::white);
    g.add_vertex(Color::black);
    g.add_edge(0, 1);
    EdgeId mid = g.add_edge(1, 2);
    g.add_edge(2, 3);
    auto [h, rec] = contract_edge(g, mid);
    CHECK(rec.survivor == 1);
    CHECK(h.num_vertices() == 3);
    CHECK(h.degree(1) == 2);
    CHECK(h.is_white(1));
  }
  SUBCASE("triangle drops the loop") {
    ColoredMultigraph g = triangle(Color::white);
    auto [h, rec] = contract_edge(g, 0);
    CHECK(h.num_vertices() == 2);
    CHECK(h.num_edges() == 2);
    CHECK(h.edges_between(0, 2).size() == 2);
    CHECK(rec.dropped == std::vector<EdgeId>{0});  // the contracted edge itself
  }
  SUBCASE("4-cycle with a chord: contracting merges the two whites") {
    ColoredMultigraph g;
    VertexId b1 = g.add_vertex(Color::black), w1 = g.add_vertex(Color::white);
    VertexId b2 = g.add_vertex(Color::black), w2 = g.add_vertex(Color::white);
    g.add_edge(b1, w1);
    g.add_edge(w1, b2);
    g.add_edge(b2, w2);
    g.add_edge(w2, b1);
    EdgeId chord = g.add_edge(w1, w2);
    auto [h, rec] = contract_edge(g, chord);
    CHECK(brute_element_connectivity(g, b1, b2) == 2);
    CHECK(brute_element_connectivity(h, b1, b2) == 1);
    CHECK(brute_element_connectivity(delete_edge(g, chord), b1, b2) == 2);
  }
  SUBCASE("contracting into a black keeps it black") {
    ColoredMultigraph g;
    g.add_vertex(Color::white);
    g.add_vertex(Color::black);
    EdgeId e = g.add_edge(0, 1);
    auto [h, rec] = contract_edge(g, e);
    CHECK(h.num_vertices() == 1);
    CHECK(h.is_black(0));
    CHECK(rec.survivor_black);
  }
}

TEST_CASE("replaying a random trace reproduces the graph") {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 40; ++round) {
    ColoredMultigraph g = make_random(9, 0.4, 3, round).graph;
    ColoredMultigraph cur = g;
    MinorTrace trace;
    for (int step = 0; step < 6 && cur.num_edges() > 0; ++step) {
      auto ids = cur.edge_ids();
      EdgeId e = ids[rng() % ids.size()];
      TraceRecord rec;
      switch (rng() % 3) {
        case 0: rec = cur.delete_edge_inplace(e); break;
        case 1: rec = cur.contract_edge_inplace(e); break;
        default: rec = cur.subdivide_edge_inplace(e); break;
      }
      trace.append(rec);
    }
    CHECK(replay(g, trace) == cur);
    for (VertexId v : g.vertex_ids()) CHECK(cur.has_vertex(trace.current(v)));
  }
}

TEST_CASE("lifting a path through a contraction and a subdivision") {
  // b0 - w1 - w2 - b3, contract w1w2, then subdivide nothing; the lifted path
  // must contain the contracted edge again.
  ColoredMultigraph g;
  g.add_vertex(Color::black);
  g.add_vertex(Color::white);
  g.add_vertex(Color::white);
  g.add_vertex(Color::black);
  EdgeId a = g.add_edge(0, 1), mid = g.add_edge(1, 2), b = g.add_edge(2, 3);
  MinorTrace trace;
  ColoredMultigraph cur = g;
  trace.append(cur.contract_edge_inplace(mid));
  std::set<EdgeId> lifted = trace.lift_edges({a, b});
  CHECK(lifted == std::set<EdgeId>{a, mid, b});
  CHECK(connects_all(g, lifted, {0, 3}));

  ColoredMultigraph s;
  s.add_vertex(Color::black);
  s.add_vertex(Color::black);
  EdgeId bb = s.add_edge(0, 1);
  MinorTrace t2;
  SubdivideEdge rec = s.subdivide_edge_inplace(bb);
  t2.append(rec);
  CHECK(t2.lift_edges({rec.first, rec.second}) == std::set<EdgeId>{bb});
  CHECK(t2.lift_edges({rec.first}).empty());
}

TEST_CASE("recoloring and induced subgraphs keep ids") {
  Instance inst = make_k3k(3);
  ColoredMultigraph g = with_terminals(inst.graph, {0, 3});
  CHECK(g.blacks() == std::vector<VertexId>{0, 3});
  CHECK(g.group(0) == 0);
  ColoredMultigraph sub = induced_subgraph(inst.graph, {0, 1, 3});
  CHECK(sub.num_edges() == 2);
  CHECK(sub.next_vertex_id() >= inst.graph.next_vertex_id());
}

TEST_CASE("subgraph helpers") {
  ColoredMultigraph g = triangle(Color::white);
  g.add_vertex(Color::white);
  CHECK(components(g).size() == 2);
  CHECK(spanning_forest(g, {0, 1, 2}).size() == 2);
  CHECK(prune_to_forest(g, {0, 1, 2}, {0}).empty());
  CHECK(prune_to_forest(g, {0, 1, 2}, {0, 1}).size() == 1);
  auto p = path_in(g, {0, 1, 2}, 0, 2);
  REQUIRE(p);
  CHECK(p->size() == 1);
  CHECK_FALSE(path_in(g, {0, 1, 2}, 0, 3));
}
