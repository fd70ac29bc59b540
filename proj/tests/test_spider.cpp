#include <doctest.h>

#include "elemconn/connectivity.hpp"
#include "elemconn/errors.hpp"
#include "elemconn/generators.hpp"
#include "elemconn/oracle.hpp"
#include "elemconn/spider.hpp"

using namespace elemconn;

namespace {

void check_paths(const ColoredMultigraph& g, const std::vector<VertexId>& blacks, int k,
                 const SpiderDecomposition& sd) {
  auto paths = extract_element_paths(sd);
  std::map<EdgeId, int> use;
  for (VertexId b : blacks) {
    REQUIRE(paths.count(b));
    CHECK(static_cast<int>(paths[b].size()) == k);
    std::set<VertexId> whites;
    for (const auto& p : paths[b]) {
      CHECK(p.from == b);
      CHECK(p.to != b);
      CHECK(p.vertices.front() == b);
      CHECK(p.vertices.back() == p.to);
      CHECK(p.edges.size() + 1 == p.vertices.size());
      for (std::size_t i = 1; i + 1 < p.vertices.size(); ++i) CHECK(whites.insert(p.vertices[i]).second);
      for (EdgeId e : p.edges) {
        CHECK(g.has_edge(e));
        ++use[e];
      }
    }
  }
  for (auto [e, n] : use) CHECK(n <= 2);
}

}  // namespace

TEST_CASE("white star is a single spider") {
  ColoredMultigraph g;
  VertexId hub = g.add_vertex(Color::white);
  std::vector<VertexId> blacks;
  for (int i = 0; i < 4; ++i) {
    blacks.push_back(g.add_vertex(Color::black));
    g.add_edge(hub, blacks.back());
  }
  SpiderDecomposition sd = spider_decompose(g, blacks, 1);
  REQUIRE(sd.spiders.size() == 1);
  CHECK(sd.spiders[0].head == hub);
  CHECK_FALSE(sd.spiders[0].black_head);
  CHECK(sd.spiders[0].feet().size() == 4);
  CHECK(validate_spider_decomposition(g, blacks, 1, sd).pass());
  check_paths(g, blacks, 1, sd);
}

TEST_CASE("spider decompositions of connected hosts") {
  for (int k : {2, 3, 5}) {
    Instance k3 = make_k3k(k);
    auto blacks = k3.graph.blacks();
    SpiderStats stats;
    SpiderDecomposition sd = spider_decompose(k3.graph, blacks, k, &stats);
    auto rep = validate_spider_decomposition(k3.graph, blacks, k, sd);
    CHECK_MESSAGE(rep.pass(), rep.summary());
    check_paths(k3.graph, blacks, k, sd);
  }
  for (int k : {2, 3}) {
    Instance gk = make_gk(k);
    std::vector<VertexId> st{0, 1};
    SpiderDecomposition sd = spider_decompose(gk.graph, st, k);
    auto rep = validate_spider_decomposition(gk.graph, st, k, sd);
    CHECK_MESSAGE(rep.pass(), rep.summary());
    check_paths(gk.graph, st, k, sd);
  }
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    Instance inst = make_random_channels(4, 3, seed);
    auto ts = terminals_of(inst.groups);
    SpiderDecomposition sd = spider_decompose(inst.graph, ts, 3);
    auto rep = validate_spider_decomposition(inst.graph, ts, 3, sd);
    CHECK_MESSAGE(rep.pass(), rep.summary());
    check_paths(inst.graph, ts, 3, sd);
  }
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    Instance w = make_planar_wheel(5, 4, seed);
    auto ts = terminals_of(w.groups);
    SpiderDecomposition sd = spider_decompose(w.graph, ts, 4);
    auto rep = validate_spider_decomposition(w.graph, ts, 4, sd);
    CHECK_MESSAGE(rep.pass(), rep.summary());
  }
}

TEST_CASE("preconditions") {
  Instance hk = make_hk(2);
  CHECK_THROWS_AS(spider_decompose(hk.graph, {0, 1}, 3), InvalidArgument);
  CHECK_THROWS_AS(spider_decompose(hk.graph, {0, 1}, 0), InvalidArgument);
  ColoredMultigraph bb;
  bb.add_vertex(Color::black);
  bb.add_vertex(Color::black);
  bb.add_edge(0, 1);
  CHECK_THROWS_AS(spider_decompose(bb, {0, 1}, 1), InvalidArgument);
}

TEST_CASE("validator catches broken decompositions") {
  Instance k3 = make_k3k(3);
  auto blacks = k3.graph.blacks();
  SpiderDecomposition sd = spider_decompose(k3.graph, blacks, 3);
  REQUIRE(validate_spider_decomposition(k3.graph, blacks, 3, sd).pass());

  SUBCASE("wrong foot count") {
    CHECK_FALSE(validate_spider_decomposition(k3.graph, blacks, 2, sd).pass());
    SpiderDecomposition bad = sd;
    bad.foot_count[blacks[0]] = 7;
    auto rep = validate_spider_decomposition(k3.graph, blacks, 3, bad);
    REQUIRE_FALSE(rep.pass());
    CHECK(rep.violations[0].invariant == "foot-count-record");
  }
  SUBCASE("a white shared by two spiders") {
    SpiderDecomposition bad = sd;
    REQUIRE(bad.spiders.size() >= 2);
    bad.spiders.push_back(bad.spiders[0]);
    auto rep = validate_spider_decomposition(k3.graph, blacks, 3, bad);
    REQUIRE_FALSE(rep.pass());
    bool shared = false;
    for (const auto& v : rep.violations) shared |= v.invariant == "white-disjoint" || v.invariant == "edge-disjoint";
    CHECK(shared);
  }
}
