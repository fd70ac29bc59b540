#include <doctest.h>

#include "elemconn/connectivity.hpp"
#include "elemconn/errors.hpp"
#include "elemconn/generators.hpp"
#include "elemconn/io.hpp"
#include "elemconn/spider.hpp"
#include "elemconn/steiner_packing.hpp"

using namespace elemconn;

TEST_CASE("graph documents") {
  SUBCASE("empty") {
    ColoredMultigraph g = parse_graph("elemgraph v1\n");
    CHECK(g.num_vertices() == 0);
    CHECK(parse_graph(emit_graph(g)) == g);
  }
  SUBCASE("H_4 round trip") {
    ColoredMultigraph g = make_hk(4).graph;
    CHECK(parse_graph(emit_graph(g)) == g);
  }
  SUBCASE("multiplicity and costs") {
    ColoredMultigraph g = parse_graph(
        "elemgraph v1\n"
        "# two blacks\n"
        "v 0 black group=2\n"
        "v 1 black\n"
        "v 5 white\n"
        "e 0 1 mult=3 cost=3/2\n"
        "e 0 5\n");
    CHECK(g.num_edges() == 4);
    CHECK(g.edges_between(0, 1).size() == 3);
    CHECK(g.edge(0).cost == Cost{3, 2});
    CHECK(g.edge(3).cost == Cost{1});
    CHECK(g.group(0) == 2);
    std::string text = emit_graph(g);
    CHECK(text.find("mult=3") != std::string::npos);
    CHECK(parse_graph(text) == g);
  }
  SUBCASE("explicit ids survive") {
    ColoredMultigraph g;
    g.add_vertex(Color::black);
    g.add_vertex(Color::black);
    g.add_edge_with_id(7, 0, 1);
    g.add_edge_with_id(3, 0, 1, Cost{2});
    ColoredMultigraph back = parse_graph(emit_graph(g));
    CHECK(back == g);
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(parse_graph("elemgraph v1\nv 0 black\nv 0 white\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("elemgraph v1\nv 0 black\ne 0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("elemgraph v1\nv 0 grey\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("elemgraph v1\nv 0 black\nv 1 white\ne 0 1 mult=0\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("elemgraph v1\nq 1\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("graph\n"), ParseError);
  }
}

TEST_CASE("tree decompositions") {
  Instance chain = make_tw_chain(3, 2);
  std::string text = emit_tree_decomposition(*chain.td, chain.graph.num_vertices());
  TreeDecomposition back = parse_tree_decomposition(text);
  CHECK(back.bags == chain.td->bags);
  CHECK(back.tree_edges.size() == chain.td->tree_edges.size());
  CHECK(check_tree_decomposition(chain.graph, back).empty());
  CHECK_THROWS_AS(parse_tree_decomposition("s td 1 2 3\nb 4 1\n"), ParseError);
}

TEST_CASE("certificates") {
  SUBCASE("packing") {
    Packing p;
    p.kind = Packing::Kind::forests;
    p.groups = {{0, 1}, {2, 3}};
    p.subgraphs = {{0, 4, 5}, {1}};
    Packing back = parse_packing(emit_packing(p));
    CHECK(back.kind == p.kind);
    CHECK(back.groups == p.groups);
    CHECK(back.subgraphs == p.subgraphs);
  }
  SUBCASE("spiders") {
    Instance k3 = make_k3k(3);
    SpiderDecomposition sd = spider_decompose(k3.graph, k3.graph.blacks(), 3);
    SpiderDecomposition back = parse_spiders(emit_spiders(sd));
    REQUIRE(back.spiders.size() == sd.spiders.size());
    for (std::size_t i = 0; i < sd.spiders.size(); ++i) {
      CHECK(back.spiders[i].head == sd.spiders[i].head);
      CHECK(back.spiders[i].black_head == sd.spiders[i].black_head);
      CHECK(back.spiders[i].legs == sd.spiders[i].legs);
      CHECK(back.spiders[i].leg_edges == sd.spiders[i].leg_edges);
    }
    CHECK(back.foot_count == sd.foot_count);
  }
  SUBCASE("ssk") {
    SskCertificate c{0, 2, {3, 4}, {1, 2, 9}, Cost{7, 3}};
    SskCertificate back = parse_ssk_certificate(emit_ssk_certificate(c));
    CHECK(back.root == 0);
    CHECK(back.k == 2);
    CHECK(back.terminals == c.terminals);
    CHECK(back.edges == c.edges);
    CHECK(back.cost == c.cost);
  }
  SUBCASE("dot") {
    std::string dot = emit_dot(make_hk(2).graph, {0});
    CHECK(dot.find("graph") != std::string::npos);
    CHECK(dot.find("penwidth") != std::string::npos);
  }
}

TEST_CASE("generator sizes") {
  Instance hk = make_hk(4);
  CHECK(hk.graph.num_vertices() == 6);
  CHECK(hk.graph.num_edges() == 8);

  Instance g3 = make_gk(3);
  CHECK(g3.graph.num_vertices() == 41);
  Instance g10 = make_gk(10);
  CHECK(g10.graph.num_vertices() == 1182);
  CHECK(g10.graph.num_edges() == 2000);

  Instance chain = make_tw_chain(5, 6);
  CHECK(terminals_of(chain.groups).size() == 10);
  CHECK(chain.graph.whites().size() == 24);
  REQUIRE(chain.groups.size() == 5);
  CHECK(min_element_connectivity(chain.graph, chain.groups.front()) == 6);
  CHECK(min_element_connectivity(chain.graph, chain.groups[2]) == 12);
  CHECK(min_element_connectivity(chain.graph, chain.groups.back()) == 6);

  for (const std::string& kind : generator_kinds()) {
    Instance inst = generate_instance(kind, {{"k", "3"}}, 1);
    CHECK(inst.graph.num_vertices() > 0);
    CHECK(parse_graph(emit_graph(inst.graph)) == inst.graph);
  }
  CHECK_THROWS_AS(generate_instance("nope", {}, 1), InvalidArgument);
}
