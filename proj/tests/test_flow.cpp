#include <doctest.h>

#include <random>

#include "elemconn/errors.hpp"
#include "elemconn/flow.hpp"
#include "test_oracles.hpp"

using namespace elemconn;
using testing_oracles::brute_min_cost_flow;
using testing_oracles::brute_min_cut;
using testing_oracles::random_network;

TEST_CASE("max flow small cases") {
  FlowNetwork one(2);
  one.add_arc(0, 1, 5);
  CHECK(max_flow(one, 0, 1).value == 5);
  CHECK(max_flow(one, 0, 1, 3).value == 3);

  FlowNetwork two(4);
  two.add_arc(0, 1, 1);
  two.add_arc(1, 3, 1);
  two.add_arc(0, 2, 1);
  two.add_arc(2, 3, 1);
  FlowAssignment f = max_flow(two, 0, 3);
  CHECK(f.value == 2);
  CHECK(f.source_side[0]);
  CHECK_FALSE(f.source_side[3]);
}

TEST_CASE("max flow equals the brute-force minimum cut") {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 150; ++round) {
    int nodes = 3 + static_cast<int>(rng() % 8);
    FlowNetwork n = random_network(rng, nodes, 3 * nodes, 4, 0);
    CHECK(max_flow(n, 0, nodes - 1).value == brute_min_cut(n, 0, nodes - 1));
  }
}

TEST_CASE("min cost flow") {
  FlowNetwork par(2);
  par.add_arc(0, 1, 1, Cost{3});
  par.add_arc(0, 1, 1, Cost{1});
  auto one = min_cost_flow_of_value(par, 0, 1, 1);
  REQUIRE(one);
  CHECK(one->cost == Cost{1});
  auto zero = min_cost_flow_of_value(par, 0, 1, 0);
  REQUIRE(zero);
  CHECK(zero->cost == Cost{0});
  CHECK(zero->value == 0);
  CHECK_FALSE(min_cost_flow_of_value(par, 0, 1, 3));

  // 2x3 grid, unit capacities: value 2 versus every flow vector
  FlowNetwork grid(6);
  grid.add_arc(0, 1, 1, Cost{1});
  grid.add_arc(1, 2, 1, Cost{4});
  grid.add_arc(3, 4, 1, Cost{2});
  grid.add_arc(4, 5, 1, Cost{1});
  grid.add_arc(0, 3, 1, Cost{1});
  grid.add_arc(1, 4, 1, Cost{1});
  grid.add_arc(2, 5, 1, Cost{1});
  grid.add_arc(0, 4, 1, Cost{3});
  auto f = min_cost_flow_of_value(grid, 0, 5, 2);
  REQUIRE(f);
  auto brute = brute_min_cost_flow(grid, 0, 5, 2);
  REQUIRE(brute);
  CHECK(f->cost == *brute);
}

TEST_CASE("min cost flow agrees with exhaustive search") {
  std::mt19937_64 rng(17);
  int compared = 0;
  for (int round = 0; round < 120; ++round) {
    int nodes = 3 + static_cast<int>(rng() % 4);
    FlowNetwork n = random_network(rng, nodes, 7, 2, 5);
    for (std::int64_t value = 1; value <= 2; ++value) {
      auto f = min_cost_flow_of_value(n, 0, nodes - 1, value);
      auto b = brute_min_cost_flow(n, 0, nodes - 1, value);
      CHECK(f.has_value() == b.has_value());
      if (f && b) {
        CHECK(f->cost == *b);
        ++compared;
      }
    }
  }
  CHECK(compared > 30);
}

TEST_CASE("path decomposition") {
  FlowNetwork n(4);
  int a = n.add_arc(0, 1, 1);
  int b = n.add_arc(1, 3, 1);
  int c = n.add_arc(0, 2, 2);
  int d = n.add_arc(2, 3, 2);
  int loop1 = n.add_arc(1, 2, 1);
  int loop2 = n.add_arc(2, 1, 1);
  FlowAssignment f;
  f.flow.assign(n.arcs().size(), 0);
  f.flow[a] = 1;
  f.flow[b] = 1;
  f.flow[c] = 2;
  f.flow[d] = 2;
  f.flow[loop1] = 1;  // a flow cycle 1 -> 2 -> 1 that must vanish
  f.flow[loop2] = 1;
  f.value = 3;
  auto paths = decompose_into_paths(n, f, 0, 3);
  CHECK(paths.size() == 3);
  int via_top = 0;
  for (const auto& p : paths) {
    CHECK(n.arc(p.front()).tail == 0);
    CHECK(n.arc(p.back()).head == 3);
    for (std::size_t i = 0; i + 1 < p.size(); ++i) CHECK(n.arc(p[i]).head == n.arc(p[i + 1]).tail);
    if (p.front() == a) ++via_top;
  }
  CHECK(via_top == 1);

  f.flow[b] = 0;
  CHECK_THROWS_AS(decompose_into_paths(n, f, 0, 3), InvalidArgument);
}
