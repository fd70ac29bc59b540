#pragma once

#include <set>
#include <string>
#include <vector>

#include "elemconn/graph.hpp"
#include "elemconn/spider.hpp"
#include "elemconn/ssk.hpp"
#include "elemconn/subgraph.hpp"
#include "elemconn/tree_decomposition.hpp"

namespace elemconn {

// Graph documents:
//   elemgraph v1
//   v <id> black|white [group=<int>]
//   e <u> <v> [cost=<p/q>] [mult=<int>] [id=<int>]
// Edge ids count up in file order unless `id=` sets the first one.
ColoredMultigraph parse_graph(const std::string& text);
std::string emit_graph(const ColoredMultigraph& g);

// PACE-style: "s td <bags> <width+1> <vertices>", "b <bag> <v...>" with
// bags numbered from 1, then one "<a> <b>" line per bag-tree edge.
TreeDecomposition parse_tree_decomposition(const std::string& text);
std::string emit_tree_decomposition(const TreeDecomposition& td, std::size_t num_vertices);

//   packing v1 / kind trees|forests / group <v...> / subgraph <e...>
Packing parse_packing(const std::string& text);
std::string emit_packing(const Packing& p);

//   spiders v1 / spider <head> / leg <v...> : <e...>
SpiderDecomposition parse_spiders(const std::string& text);
std::string emit_spiders(const SpiderDecomposition& sd);

//   ssk v1 / root <r> / k <k> / terminals <t...> / edges <e...> / cost <p/q>
struct SskCertificate {
  VertexId root = 0;
  int k = 1;
  std::vector<VertexId> terminals;
  std::set<EdgeId> edges;
  Cost cost{0};
};
SskCertificate parse_ssk_certificate(const std::string& text);
std::string emit_ssk_certificate(const SskCertificate& c);

// Terminals filled, whites hollow; `highlight` edges drawn bold.
std::string emit_dot(const ColoredMultigraph& g, const std::set<EdgeId>& highlight = {});

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace elemconn
