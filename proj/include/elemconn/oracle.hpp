#pragma once

#include <set>
#include <string>
#include <vector>

#include "elemconn/connectivity.hpp"
#include "elemconn/graph.hpp"
#include "elemconn/spider.hpp"
#include "elemconn/ssk.hpp"
#include "elemconn/steiner_packing.hpp"
#include "elemconn/subgraph.hpp"

// Exhaustive reference implementations. Exponential on purpose; every entry
// point refuses inputs above its size cap instead of running for hours.
namespace elemconn {

inline constexpr std::size_t kBruteMaxVertices = 16;
inline constexpr std::size_t kBruteMaxSskEdges = 22;

// kappa'(u, v) by enumerating every set of deleted whites; black-black
// edges count as the white a subdivision would put on them.
int brute_element_connectivity(const ColoredMultigraph& g, VertexId u, VertexId v);

// Same enumeration, all black pairs at once.
PairTable brute_all_pairs_element_connectivity(const ColoredMultigraph& g);

// True when t and r have at least k internally disjoint paths (colors
// ignored, parallel t-r edges each count), by trying every small vertex cut.
bool brute_vertex_connected(const ColoredMultigraph& g, VertexId t, VertexId r, int k);

struct Violation {
  std::string invariant;
  int subgraph = -1;    // index into the certificate, -1 when global
  std::string witness;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool pass() const { return violations.empty(); }
  std::string summary() const;
};

// Terminals are the union of the groups; every other vertex counts as white.
// With `check_upper_bound`, also |p| <= min over groups of kappa'(group).
ValidationReport validate_packing(const ColoredMultigraph& g, const Groups& groups, const Packing& p,
                                  bool check_upper_bound = true);

ValidationReport validate_spider_decomposition(const ColoredMultigraph& g, const std::vector<VertexId>& blacks,
                                               int k, const SpiderDecomposition& sd);

struct SskOptimum {
  Cost cost{0};
  std::set<EdgeId> edges;
};

// Cheapest feasible edge subset by branch and bound over edge removals.
SskOptimum brute_ssk_opt(const SskInstance& inst);

}  // namespace elemconn
