#include <doctest.h>

#include "elemconn/errors.hpp"
#include "elemconn/generators.hpp"
#include "elemconn/oracle.hpp"
#include "elemconn/reduction.hpp"

using namespace elemconn;

TEST_CASE("classifying single white-white edges") {
  SUBCASE("redundant chord is deleted") {
    ColoredMultigraph g;
    VertexId b1 = g.add_vertex(Color::black), b2 = g.add_vertex(Color::black);
    VertexId w1 = g.add_vertex(Color::white), w2 = g.add_vertex(Color::white);
    g.add_edge(b1, w1);
    g.add_edge(b1, w2);
    g.add_edge(b2, w1);
    g.add_edge(b2, w2);
    EdgeId chord = g.add_edge(w1, w2);
    PairTable base = brute_all_pairs_element_connectivity(g);
    CHECK(base.at({b1, b2}) == 2);
    CHECK(classify_edge(g, chord, base) == Decision::remove);
    CHECK(brute_element_connectivity(delete_edge(g, chord), b1, b2) == 2);
  }
  SUBCASE("bridge is contracted") {
    ColoredMultigraph g;
    g.add_vertex(Color::black);
    g.add_vertex(Color::white);
    g.add_vertex(Color::white);
    g.add_vertex(Color::black);
    g.add_edge(0, 1);
    EdgeId mid = g.add_edge(1, 2);
    g.add_edge(2, 3);
    PairTable base = brute_all_pairs_element_connectivity(g);
    CHECK(classify_edge(g, mid, base) == Decision::contract);
    ReductionResult red = reduce_to_bipartite(g);
    CHECK(red.decisions.size() == 1);
    CHECK(red.decisions[0].second == Decision::contract);
    CHECK(red.reduced.num_vertices() == 3);
    CHECK(brute_element_connectivity(red.reduced, 0, 3) == 1);
  }
  SUBCASE("non white-white edge is rejected") {
    Instance hk = make_hk(2);
    CHECK_THROWS_AS(classify_edge(hk.graph, 0, {}), InvalidArgument);
  }
}

TEST_CASE("bipartite inputs reduce to themselves") {
  Instance gk = make_gk(3);
  ReductionResult red = reduce_to_bipartite(gk.graph);
  CHECK(red.decisions.empty());
  CHECK(red.trace.empty());
  CHECK(red.reduced == gk.graph);
}

TEST_CASE("reduction keeps every black pair on random graphs") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    INFO("seed " << seed);
    int n = 8 + static_cast<int>(seed % 7);
    Instance inst = make_random(n, seed % 2 ? 0.3 : 0.5, 2 + static_cast<int>(seed % 5), seed);
    ReductionResult red = reduce_to_bipartite(inst.graph, seed % 3 == 0);
    CHECK_FALSE(has_white_white_edge(red.reduced));
    CHECK_FALSE(has_black_black_edge(red.reduced));
    CHECK(replay(inst.graph, red.trace) == red.reduced);
    PairTable after = all_pairs_element_connectivity(red.reduced, black_pairs(inst.graph));
    PairTable before = red.baseline.empty() ? all_pairs_element_connectivity(inst.graph, black_pairs(inst.graph))
                                            : red.baseline;
    CHECK(after == before);
    if (n <= 10) CHECK(brute_all_pairs_element_connectivity(inst.graph) == before);
  }
}

TEST_CASE("reduced planar input stays planar-sized and bipartite") {
  Instance inst = make_random_planar(3, 4, 0.85, 4, 9);
  ReductionResult red = reduce_to_bipartite(inst.graph, true);
  for (const auto& [e, ed] : red.reduced.edges()) CHECK(red.reduced.color(ed.u) != red.reduced.color(ed.v));
}
