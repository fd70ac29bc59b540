#pragma once

#include <map>
#include <vector>

#include "elemconn/graph.hpp"

namespace elemconn {

/// A head with legs; each leg runs head..foot and carries the edge ids it
/// walks, since parallel edges make vertex sequences ambiguous.
struct Spider {
  VertexId head = 0;
  bool black_head = false;
  std::vector<std::vector<VertexId>> legs;
  std::vector<std::vector<EdgeId>> leg_edges;

  std::vector<VertexId> feet() const;
};

struct SpiderDecomposition {
  std::vector<Spider> spiders;
  std::map<VertexId, int> foot_count;
};

struct SpiderStats {
  int contractions_lifted = 0;
  int heads_split = 0;
  int heads_relabelled = 0;
  int heads_moved = 0;  // lone leg extended by the other endpoint
};

// Every black pair of g (restricted to `blacks`) must be k-element-connected
// and no edge may join two of them.
SpiderDecomposition spider_decompose(const ColoredMultigraph& g, const std::vector<VertexId>& blacks,
                                     int k, SpiderStats* stats = nullptr);

struct ElementPath {
  VertexId from = 0;
  VertexId to = 0;
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;
};

// k paths per black, each inside one spider.
std::map<VertexId, std::vector<ElementPath>> extract_element_paths(const SpiderDecomposition& sd);

}  // namespace elemconn
