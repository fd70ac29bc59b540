#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "elemconn/graph.hpp"

namespace elemconn {

struct TreeDecomposition {
  std::vector<std::set<VertexId>> bags;
  std::vector<std::pair<int, int>> tree_edges;  // indices into bags

  int width() const;
};

// Empty string when valid, else the first violated condition.
std::string check_tree_decomposition(const ColoredMultigraph& g, const TreeDecomposition& td);

// Min-degree elimination; no width guarantee.
TreeDecomposition min_degree_decomposition(const ColoredMultigraph& g);

// Maps every bag through `rename` (vertices absent from the map vanish) and
// drops bags that become empty, keeping the bag tree connected.
TreeDecomposition project_decomposition(const TreeDecomposition& td,
                                        const std::map<VertexId, VertexId>& rename);

}  // namespace elemconn
