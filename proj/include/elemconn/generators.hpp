#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "elemconn/graph.hpp"
#include "elemconn/steiner_packing.hpp"
#include "elemconn/tree_decomposition.hpp"

namespace elemconn {

struct Instance {
  std::string kind;
  ColoredMultigraph graph;  // black vertices carry their group id
  Groups groups;
  int k = 0;                // connectivity the construction aims for
  std::optional<TreeDecomposition> td;
};

// Blacks grouped by their group attribute; ungrouped blacks form one group.
Groups groups_from_graph(const ColoredMultigraph& g);
std::vector<VertexId> terminals_of(const Groups& groups);

// x, y joined through k whites.
Instance make_hk(int k);
// s, t joined by k paths of k whites, with a copy of H_k inserted on every
// white-white path edge; groups {s,t} and the (x,y) of each copy.
Instance make_gk(int k);
Instance make_k3k(int k);
// m pairs of terminals, k whites between consecutive pairs, each white
// adjacent to all four; comes with a width-4 decomposition.
Instance make_tw_chain(int m, int k);

// G(n, p) with `terminals` random blacks, one group.
Instance make_random(int n, double p, int terminals, std::uint64_t seed);
// Triangulated grid with random deletions; terminals random blacks.
Instance make_random_planar(int rows, int cols, double keep, int terminals, std::uint64_t seed);
// Terminal cycle with white bundles between neighbours and a white hub;
// every terminal pair has kappa' = k exactly. `groups` > 1 pairs up
// neighbouring terminals into separate groups.
Instance make_planar_wheel(int terminals, int k, std::uint64_t seed, bool hub = true, int groups = 1);
// Terminal path t_0..t_{m-1}, k whites per step; width 2 plain, 3 with
// whites also touching t_{i+2}, 4 adding white-white edges in a layer.
Instance make_random_tw(int m, int k, int width, std::uint64_t seed);
// k disjoint white channels touching every terminal, t_0 through a single
// port each, so kappa'(T) = k exactly; plus white-white noise.
Instance make_random_channels(int terminals, int k, std::uint64_t seed);
// Several groups, each with its own channels, glued by shared whites.
Instance make_clustered(int groups, int group_size, int k, std::uint64_t seed);

// Dispatch by name with key=value parameters (missing keys get defaults).
Instance generate_instance(const std::string& kind, const std::map<std::string, std::string>& params,
                           std::uint64_t seed);
std::vector<std::string> generator_kinds();

}  // namespace elemconn
