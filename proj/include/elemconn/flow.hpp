#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "elemconn/cost.hpp"

namespace elemconn {

using NodeId = int;

// Large enough that no cut in a desk-scale gadget reaches it.
inline constexpr std::int64_t kInfiniteCapacity = std::int64_t{1} << 40;

struct Arc {
  NodeId tail = 0;
  NodeId head = 0;
  std::int64_t capacity = 0;
  Cost cost{0};
  std::int64_t tag = -1;  // back-reference chosen by whoever built the network
};

class FlowNetwork {
 public:
  FlowNetwork() = default;
  explicit FlowNetwork(int nodes) : out_(nodes) {}

  NodeId add_node();
  int add_arc(NodeId tail, NodeId head, std::int64_t capacity, Cost cost = Cost{0},
              std::int64_t tag = -1);

  int num_nodes() const { return static_cast<int>(out_.size()); }
  const std::vector<Arc>& arcs() const { return arcs_; }
  const Arc& arc(int a) const { return arcs_[a]; }
  const std::vector<int>& out_arcs(NodeId v) const { return out_[v]; }

 private:
  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> out_;
};

struct FlowAssignment {
  std::vector<std::int64_t> flow;  // indexed like FlowNetwork::arcs()
  std::int64_t value = 0;
  Cost cost{0};
  // Nodes reachable from the source in the final residual network.
  std::vector<bool> source_side;
};

// Dinic. Stops early once `limit` units have been routed.
FlowAssignment max_flow(const FlowNetwork& n, NodeId s, NodeId t,
                        std::int64_t limit = kInfiniteCapacity);

// Successive shortest paths; nullopt when fewer than `value` units fit.
std::optional<FlowAssignment> min_cost_flow_of_value(const FlowNetwork& n, NodeId s, NodeId t,
                                                     std::int64_t value);

// Splits f into `f.value` unit s-t paths (arc indices). Flow cycles are
// dropped. Throws InvalidArgument on a flow that violates conservation.
std::vector<std::vector<int>> decompose_into_paths(const FlowNetwork& n, const FlowAssignment& f,
                                                   NodeId s, NodeId t);

}  // namespace elemconn
