#include "elemconn/io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "elemconn/errors.hpp"

namespace elemconn {

namespace {

struct Line {
  int number = 0;
  std::vector<std::string> tokens;
};

// Non-blank lines with their 1-based numbers; `comment` starts a skipped line.
std::vector<Line> tokenize(const std::string& text, char comment) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    std::istringstream ls(raw);
    Line line{number, {}};
    std::string tok;
    while (ls >> tok) line.tokens.push_back(tok);
    if (line.tokens.empty() || line.tokens[0][0] == comment) continue;
    out.push_back(std::move(line));
  }
  return out;
}

template <typename Int>
Int to_int(const std::string& s, int line, const char* what) {
  Int v{};
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) {
    throw ParseError(line, std::string("bad ") + what + " '" + s + "'");
  }
  return v;
}

void expect_header(const std::vector<Line>& lines, const std::string& a, const std::string& b) {
  if (lines.empty() || lines[0].tokens.size() != 2 || lines[0].tokens[0] != a || lines[0].tokens[1] != b) {
    throw ParseError(lines.empty() ? 1 : lines[0].number, "expected header '" + a + " " + b + "'");
  }
}

template <typename T>
std::string join(const T& xs) {
  std::string s;
  for (const auto& x : xs) s += " " + std::to_string(x);
  return s;
}

}  // namespace

ColoredMultigraph parse_graph(const std::string& text) {
  auto lines = tokenize(text, '#');
  expect_header(lines, "elemgraph", "v1");
  ColoredMultigraph g;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& ln = lines[i];
    const auto& t = ln.tokens;
    try {
      if (t[0] == "v") {
        if (t.size() < 3 || t.size() > 4) throw ParseError(ln.number, "vertex line needs id and color");
        VertexId id = to_int<VertexId>(t[1], ln.number, "vertex id");
        if (g.has_vertex(id)) throw ParseError(ln.number, "duplicate vertex id " + t[1]);
        Color c;
        if (t[2] == "black") {
          c = Color::black;
        } else if (t[2] == "white") {
          c = Color::white;
        } else {
          throw ParseError(ln.number, "bad color '" + t[2] + "'");
        }
        std::optional<int> group;
        if (t.size() == 4) {
          if (t[3].rfind("group=", 0) != 0) throw ParseError(ln.number, "unknown attribute '" + t[3] + "'");
          group = to_int<int>(t[3].substr(6), ln.number, "group");
        }
        g.add_vertex_with_id(id, c, group);
      } else if (t[0] == "e") {
        if (t.size() < 3) throw ParseError(ln.number, "edge line needs two endpoints");
        VertexId u = to_int<VertexId>(t[1], ln.number, "vertex id");
        VertexId v = to_int<VertexId>(t[2], ln.number, "vertex id");
        if (!g.has_vertex(u)) throw ParseError(ln.number, "unknown vertex " + t[1]);
        if (!g.has_vertex(v)) throw ParseError(ln.number, "unknown vertex " + t[2]);
        Cost cost{1};
        int mult = 1;
        std::optional<EdgeId> first;
        for (std::size_t j = 3; j < t.size(); ++j) {
          const std::string& a = t[j];
          if (a.rfind("cost=", 0) == 0) {
            cost = parse_cost(a.substr(5));
          } else if (a.rfind("mult=", 0) == 0) {
            mult = to_int<int>(a.substr(5), ln.number, "multiplicity");
            if (mult < 1) throw ParseError(ln.number, "mult must be at least 1");
          } else if (a.rfind("id=", 0) == 0) {
            first = to_int<EdgeId>(a.substr(3), ln.number, "edge id");
          } else {
            throw ParseError(ln.number, "unknown attribute '" + a + "'");
          }
        }
        EdgeId id = first ? *first : g.next_edge_id();
        for (int m = 0; m < mult; ++m) g.add_edge_with_id(id + m, u, v, cost);
      } else {
        throw ParseError(ln.number, "unknown directive '" + t[0] + "'");
      }
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(ln.number, e.what());
    }
  }
  return g;
}

std::string emit_graph(const ColoredMultigraph& g) {
  std::ostringstream out;
  out << "elemgraph v1\n";
  for (const auto& [id, info] : g.vertices()) {
    out << "v " << id << (info.color == Color::black ? " black" : " white");
    if (info.group) out << " group=" << *info.group;
    out << "\n";
  }
  const auto& edges = g.edges();
  EdgeId expected = 0;
  for (auto it = edges.begin(); it != edges.end();) {
    const auto [first, ed] = *it;
    int mult = 1;
    auto next = std::next(it);
    while (next != edges.end() && next->first == first + mult && next->second.u == ed.u &&
           next->second.v == ed.v && next->second.cost == ed.cost) {
      ++mult;
      ++next;
    }
    out << "e " << ed.u << " " << ed.v;
    if (ed.cost != Cost{1}) out << " cost=" << format_cost(ed.cost);
    if (mult > 1) out << " mult=" << mult;
    if (first != expected) out << " id=" << first;
    out << "\n";
    expected = first + mult;
    it = next;
  }
  return out.str();
}

TreeDecomposition parse_tree_decomposition(const std::string& text) {
  auto lines = tokenize(text, 'c');
  if (lines.empty() || lines[0].tokens.size() != 5 || lines[0].tokens[0] != "s" || lines[0].tokens[1] != "td") {
    throw ParseError(lines.empty() ? 1 : lines[0].number, "expected 's td <bags> <width+1> <vertices>'");
  }
  const int n = to_int<int>(lines[0].tokens[2], lines[0].number, "bag count");
  const int declared = to_int<int>(lines[0].tokens[3], lines[0].number, "bag size");
  TreeDecomposition td;
  td.bags.resize(n);
  std::vector<bool> seen(n, false);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& ln = lines[i];
    const auto& t = ln.tokens;
    if (t[0] == "b") {
      if (t.size() < 2) throw ParseError(ln.number, "bag line needs an id");
      int b = to_int<int>(t[1], ln.number, "bag id");
      if (b < 1 || b > n) throw ParseError(ln.number, "bag id out of range");
      if (seen[b - 1]) throw ParseError(ln.number, "duplicate bag " + t[1]);
      seen[b - 1] = true;
      for (std::size_t j = 2; j < t.size(); ++j) td.bags[b - 1].insert(to_int<VertexId>(t[j], ln.number, "vertex id"));
    } else {
      if (t.size() != 2) throw ParseError(ln.number, "bag-tree edge needs two bag ids");
      int a = to_int<int>(t[0], ln.number, "bag id");
      int b = to_int<int>(t[1], ln.number, "bag id");
      if (a < 1 || a > n || b < 1 || b > n) throw ParseError(ln.number, "bag id out of range");
      td.tree_edges.emplace_back(a - 1, b - 1);
    }
  }
  for (int b = 0; b < n; ++b) {
    if (!seen[b]) throw ParseError(lines[0].number, "bag " + std::to_string(b + 1) + " never listed");
  }
  if (td.width() + 1 > declared) throw ParseError(lines[0].number, "a bag exceeds the declared size");
  return td;
}

std::string emit_tree_decomposition(const TreeDecomposition& td, std::size_t num_vertices) {
  std::ostringstream out;
  out << "s td " << td.bags.size() << " " << td.width() + 1 << " " << num_vertices << "\n";
  for (std::size_t i = 0; i < td.bags.size(); ++i) out << "b " << i + 1 << join(td.bags[i]) << "\n";
  for (auto [a, b] : td.tree_edges) out << a + 1 << " " << b + 1 << "\n";
  return out.str();
}

Packing parse_packing(const std::string& text) {
  auto lines = tokenize(text, '#');
  expect_header(lines, "packing", "v1");
  Packing p;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& ln = lines[i];
    const auto& t = ln.tokens;
    if (t[0] == "kind") {
      if (t.size() != 2 || (t[1] != "trees" && t[1] != "forests")) throw ParseError(ln.number, "bad kind");
      p.kind = t[1] == "trees" ? Packing::Kind::trees : Packing::Kind::forests;
    } else if (t[0] == "group") {
      std::vector<VertexId> grp;
      for (std::size_t j = 1; j < t.size(); ++j) grp.push_back(to_int<VertexId>(t[j], ln.number, "vertex id"));
      p.groups.push_back(std::move(grp));
    } else if (t[0] == "subgraph") {
      std::set<EdgeId> s;
      for (std::size_t j = 1; j < t.size(); ++j) s.insert(to_int<EdgeId>(t[j], ln.number, "edge id"));
      p.subgraphs.push_back(std::move(s));
    } else {
      throw ParseError(ln.number, "unknown directive '" + t[0] + "'");
    }
  }
  return p;
}

std::string emit_packing(const Packing& p) {
  std::ostringstream out;
  out << "packing v1\nkind " << (p.kind == Packing::Kind::trees ? "trees" : "forests") << "\n";
  for (const auto& g : p.groups) out << "group" << join(g) << "\n";
  for (const auto& s : p.subgraphs) out << "subgraph" << join(s) << "\n";
  return out.str();
}

SpiderDecomposition parse_spiders(const std::string& text) {
  auto lines = tokenize(text, '#');
  expect_header(lines, "spiders", "v1");
  SpiderDecomposition sd;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& ln = lines[i];
    const auto& t = ln.tokens;
    if (t[0] == "spider") {
      if (t.size() != 3 || (t[2] != "black" && t[2] != "white")) {
        throw ParseError(ln.number, "spider line needs head and black|white");
      }
      Spider s;
      s.head = to_int<VertexId>(t[1], ln.number, "vertex id");
      s.black_head = t[2] == "black";
      sd.spiders.push_back(std::move(s));
    } else if (t[0] == "leg") {
      if (sd.spiders.empty()) throw ParseError(ln.number, "leg before any spider");
      std::vector<VertexId> vs;
      std::vector<EdgeId> es;
      bool edges = false;
      for (std::size_t j = 1; j < t.size(); ++j) {
        if (t[j] == ":") {
          edges = true;
        } else if (edges) {
          es.push_back(to_int<EdgeId>(t[j], ln.number, "edge id"));
        } else {
          vs.push_back(to_int<VertexId>(t[j], ln.number, "vertex id"));
        }
      }
      if (!edges) throw ParseError(ln.number, "leg needs ':' before its edges");
      sd.spiders.back().legs.push_back(std::move(vs));
      sd.spiders.back().leg_edges.push_back(std::move(es));
    } else {
      throw ParseError(ln.number, "unknown directive '" + t[0] + "'");
    }
  }
  for (const auto& s : sd.spiders) {
    for (VertexId f : s.feet()) ++sd.foot_count[f];
  }
  return sd;
}

std::string emit_spiders(const SpiderDecomposition& sd) {
  std::ostringstream out;
  out << "spiders v1\n";
  for (const auto& s : sd.spiders) {
    out << "spider " << s.head << (s.black_head ? " black" : " white") << "\n";
    for (std::size_t i = 0; i < s.legs.size(); ++i) {
      out << "leg" << join(s.legs[i]) << " :" << join(s.leg_edges[i]) << "\n";
    }
  }
  return out.str();
}

SskCertificate parse_ssk_certificate(const std::string& text) {
  auto lines = tokenize(text, '#');
  expect_header(lines, "ssk", "v1");
  SskCertificate c;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& ln = lines[i];
    const auto& t = ln.tokens;
    if (t[0] == "root" && t.size() == 2) {
      c.root = to_int<VertexId>(t[1], ln.number, "vertex id");
    } else if (t[0] == "k" && t.size() == 2) {
      c.k = to_int<int>(t[1], ln.number, "k");
    } else if (t[0] == "terminals") {
      for (std::size_t j = 1; j < t.size(); ++j) c.terminals.push_back(to_int<VertexId>(t[j], ln.number, "vertex id"));
    } else if (t[0] == "edges") {
      for (std::size_t j = 1; j < t.size(); ++j) c.edges.insert(to_int<EdgeId>(t[j], ln.number, "edge id"));
    } else if (t[0] == "cost" && t.size() == 2) {
      try {
        c.cost = parse_cost(t[1]);
      } catch (const Error& e) {
        throw ParseError(ln.number, e.what());
      }
    } else {
      throw ParseError(ln.number, "unknown directive '" + t[0] + "'");
    }
  }
  return c;
}

std::string emit_ssk_certificate(const SskCertificate& c) {
  std::ostringstream out;
  out << "ssk v1\nroot " << c.root << "\nk " << c.k << "\nterminals" << join(c.terminals) << "\nedges"
      << join(c.edges) << "\ncost " << format_cost(c.cost) << "\n";
  return out.str();
}

std::string emit_dot(const ColoredMultigraph& g, const std::set<EdgeId>& highlight) {
  std::ostringstream out;
  out << "graph G {\n  node [shape=circle, label=\"\"];\n";
  for (const auto& [id, info] : g.vertices()) {
    out << "  " << id << " [xlabel=\"" << id << "\"";
    if (info.color == Color::black) out << ", style=filled, fillcolor=black";
    out << "];\n";
  }
  for (const auto& [id, ed] : g.edges()) {
    out << "  " << ed.u << " -- " << ed.v << " [label=\"" << id;
    if (ed.cost != Cost{1}) out << " (" << format_cost(ed.cost) << ")";
    out << "\"";
    if (highlight.count(id)) out << ", penwidth=3";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write " + path);
  out << text;
}

}  // namespace elemconn
