// Command-line front end. Exit codes: 0 ok, 1 usage, 2 certificate failed
// validation, 3 infeasible / no packing / threshold violated, 4 parse error,
// 5 internal consistency error.
#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <sstream>

#include "elemconn/connectivity.hpp"
#include "elemconn/errors.hpp"
#include "elemconn/generators.hpp"
#include "elemconn/io.hpp"
#include "elemconn/oracle.hpp"
#include "elemconn/planar_packing.hpp"
#include "elemconn/reduction.hpp"
#include "elemconn/spider.hpp"
#include "elemconn/ssk.hpp"
#include "elemconn/steiner_packing.hpp"
#include "elemconn/treewidth_packing.hpp"

using namespace elemconn;

namespace {

constexpr int kExitValidation = 2;

struct Common {
  std::string graph;
  std::string out;
  bool dot = false;
  int k = 0;
  std::uint64_t seed = 1;
};

void emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
  } else {
    write_text_file(c.out, text);
  }
}

std::string describe(const TraceRecord& rec) {
  std::ostringstream s;
  std::visit(
      [&](const auto& r) {
        using R = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<R, DeleteEdge>) {
          s << "delete " << r.edge;
        } else if constexpr (std::is_same_v<R, ContractEdge>) {
          s << "contract " << r.edge << " " << r.survivor << " " << r.absorbed;
        } else if constexpr (std::is_same_v<R, SubdivideEdge>) {
          s << "subdivide " << r.edge << " " << r.white << " " << r.first << " " << r.second;
        } else {
          s << "merge " << r.survivor << " " << r.absorbed;
        }
      },
      rec);
  return s.str();
}

std::set<EdgeId> union_of(const Packing& p) {
  std::set<EdgeId> all;
  for (const auto& s : p.subgraphs) all.insert(s.begin(), s.end());
  return all;
}

int finish_packing(const Common& c, const ColoredMultigraph& g, const Packing& p) {
  std::cerr << p.size() << (p.kind == Packing::Kind::trees ? " trees\n" : " forests\n");
  emit(c, c.dot ? emit_dot(g, union_of(p)) : emit_packing(p));
  return 0;
}

std::pair<VertexId, VertexId> parse_pair(const std::string& s) {
  auto comma = s.find(',');
  if (comma == std::string::npos) throw InvalidArgument("--pairs expects all or u,v");
  try {
    return {std::stoi(s.substr(0, comma)), std::stoi(s.substr(comma + 1))};
  } catch (const std::exception&) {
    throw InvalidArgument("--pairs expects all or u,v");
  }
}

void add_common(CLI::App* sub, Common& c, bool needs_k) {
  sub->add_option("graph", c.graph, "graph document")->required();
  sub->add_option("-o,--out", c.out, "write the result here instead of stdout");
  sub->add_flag("--dot", c.dot, "emit DOT instead of the native format");
  if (needs_k) sub->add_option("--k", c.k, "connectivity to pack against")->required()->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"element-connectivity toolkit"};
  app.require_subcommand(1);

  Common c;
  std::string pairs = "all";
  bool verify = false, forests = false;
  std::string trace_out, td_file, certificate, kind;
  int genus_c = 0, seeds = 0;
  VertexId root = 0;
  std::vector<std::string> gen_params;

  auto* kappa = app.add_subcommand("kappa", "element connectivity of black pairs");
  add_common(kappa, c, false);
  kappa->add_option("--pairs", pairs, "all, or u,v");

  auto* reduce = app.add_subcommand("reduce", "remove white-white edges keeping every kappa'");
  add_common(reduce, c, false);
  reduce->add_flag("--verify", verify, "recheck the full table after every step");
  reduce->add_option("--trace", trace_out, "write the minor trace here");

  auto* trees = app.add_subcommand("pack-trees", "element-disjoint Steiner trees on the blacks");
  add_common(trees, c, true);
  trees->add_option("--seed", c.seed);

  auto* forest = app.add_subcommand("pack-forests", "element-disjoint Steiner forests over the groups");
  add_common(forest, c, true);
  forest->add_option("--seed", c.seed);

  auto* planar = app.add_subcommand("pack-planar", "tree or forest packing in planar graphs");
  add_common(planar, c, true);
  planar->add_flag("--forests", forests);
  planar->add_option("--genus-c", genus_c, "use ceil(k/C) as the contraction threshold");

  auto* tw = app.add_subcommand("pack-treewidth", "tree packing guided by a tree decomposition");
  add_common(tw, c, true);
  tw->add_option("--td", td_file, "PACE-style tree decomposition")->required();
  tw->add_option("--seed", c.seed);

  auto* spiders = app.add_subcommand("spiders", "spider decomposition of the blacks");
  add_common(spiders, c, true);

  auto* ssk = app.add_subcommand("ssk", "greedy single-sink k-vertex-connectivity");
  add_common(ssk, c, true);
  ssk->add_option("--root", root, "sink vertex")->required();
  auto* seed_opt = ssk->add_option("--seed", c.seed);
  ssk->add_option("--seeds", seeds, "run seeds 1..N and keep the cheapest")->excludes(seed_opt);

  auto* ver = app.add_subcommand("verify", "check a certificate against a graph");
  add_common(ver, c, false);
  ver->add_option("--certificate", certificate)->required();
  ver->add_option("--kind", kind)->required()->check(CLI::IsMember({"packing", "spiders", "ssk"}));
  ver->add_option("--k", c.k, "k for spider certificates (default: read off the feet)");

  auto* gen = app.add_subcommand("gen", "generate an instance");
  gen->add_option("kind", kind, "generator")->required()->check(CLI::IsMember(generator_kinds()));
  gen->add_option("params", gen_params, "key=value parameters");
  gen->add_option("--seed", c.seed);
  gen->add_option("--td", td_file, "also write the decomposition here, when the kind has one");
  gen->add_option("-o,--out", c.out);
  gen->add_flag("--dot", c.dot);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*gen) {
      std::map<std::string, std::string> params;
      for (const auto& p : gen_params) {
        auto eq = p.find('=');
        if (eq == std::string::npos) throw InvalidArgument("parameter '" + p + "' is not key=value");
        params[p.substr(0, eq)] = p.substr(eq + 1);
      }
      Instance inst = generate_instance(kind, params, c.seed);
      if (!td_file.empty()) {
        if (!inst.td) throw InvalidArgument(kind + " comes without a decomposition");
        write_text_file(td_file, emit_tree_decomposition(*inst.td, inst.graph.num_vertices()));
      }
      emit(c, c.dot ? emit_dot(inst.graph) : "# " + kind + " k=" + std::to_string(inst.k) + "\n" + emit_graph(inst.graph));
      return 0;
    }

    const ColoredMultigraph g = parse_graph(read_text_file(c.graph));

    if (*kappa) {
      std::vector<VertexPair> todo;
      if (pairs == "all") {
        todo = black_pairs(g);
      } else {
        auto [u, v] = parse_pair(pairs);
        if (!g.has_vertex(u) || !g.has_vertex(v) || !g.is_black(u) || !g.is_black(v) || u == v) {
          throw InvalidArgument("--pairs needs two distinct black vertices");
        }
        todo.push_back({std::min(u, v), std::max(u, v)});
      }
      std::ostringstream s;
      for (const auto& [pair, value] : all_pairs_element_connectivity(g, todo)) {
        s << pair.first << " " << pair.second << " " << value << "\n";
      }
      emit(c, s.str());
      return 0;
    }

    if (*reduce) {
      ReductionResult red = reduce_to_bipartite(g, verify);
      if (!trace_out.empty()) {
        std::string t;
        for (const auto& rec : red.trace.records()) t += describe(rec) + "\n";
        write_text_file(trace_out, t);
      }
      emit(c, c.dot ? emit_dot(red.reduced) : emit_graph(red.reduced));
      return 0;
    }

    if (*trees) return finish_packing(c, g, pack_trees_random_coloring(g, g.blacks(), c.k, c.seed));
    if (*forest) return finish_packing(c, g, pack_forests(g, groups_from_graph(g), c.k, c.seed));
    if (*planar) {
      PlanarOptions opts;
      opts.rule.genus_c = genus_c;
      Packing p = forests ? pack_planar_forests(g, groups_from_graph(g), c.k, opts)
                          : pack_planar_trees(g, g.blacks(), c.k, opts);
      return finish_packing(c, g, p);
    }
    if (*tw) {
      TreeDecomposition td = parse_tree_decomposition(read_text_file(td_file));
      return finish_packing(c, g, pack_treewidth_trees(g, g.blacks(), c.k, td, c.seed));
    }

    if (*spiders) {
      SpiderDecomposition sd = spider_decompose(g, g.blacks(), c.k);
      std::cerr << sd.spiders.size() << " spiders\n";
      if (c.dot) {
        std::set<EdgeId> used;
        for (const auto& s : sd.spiders) {
          for (const auto& le : s.leg_edges) used.insert(le.begin(), le.end());
        }
        emit(c, emit_dot(g, used));
      } else {
        emit(c, emit_spiders(sd));
      }
      return 0;
    }

    if (*ssk) {
      SskInstance inst{g, root, {}, c.k};
      for (VertexId b : g.blacks()) {
        if (b != root) inst.terminals.push_back(b);
      }
      std::vector<std::uint64_t> run;
      if (seeds > 0) {
        for (int s = 1; s <= seeds; ++s) run.push_back(static_cast<std::uint64_t>(s));
      } else {
        run.push_back(c.seed);
      }
      std::optional<SskResult> best;
      for (std::uint64_t s : run) {
        SskResult r = greedy_ssk(inst, s, true);
        std::cerr << "seed " << s << " cost " << format_cost(r.cost) << "\n";
        if (!best || r.cost < best->cost) best = std::move(r);
      }
      SskCertificate cert{root, c.k, inst.terminals, best->edges, best->cost};
      emit(c, c.dot ? emit_dot(g, best->edges) : emit_ssk_certificate(cert));
      return 0;
    }

    if (*ver) {
      const std::string text = read_text_file(certificate);
      if (kind == "packing") {
        Packing p = parse_packing(text);
        Groups groups = p.groups.empty() ? groups_from_graph(g) : p.groups;
        ValidationReport rep = validate_packing(g, groups, p);
        std::cout << rep.summary() << "\n";
        return rep.pass() ? 0 : kExitValidation;
      }
      if (kind == "spiders") {
        SpiderDecomposition sd = parse_spiders(text);
        int k = c.k;
        if (k == 0 && !sd.foot_count.empty()) k = sd.foot_count.begin()->second;
        ValidationReport rep = validate_spider_decomposition(g, g.blacks(), k, sd);
        std::cout << rep.summary() << "\n";
        return rep.pass() ? 0 : kExitValidation;
      }
      SskCertificate cert = parse_ssk_certificate(text);
      SskInstance inst{g, cert.root, cert.terminals, cert.k};
      SskReport rep = verify_ssk_feasible(cert.edges, inst);
      Cost paid{0};
      for (EdgeId e : cert.edges) paid += g.edge(e).cost;
      bool cost_ok = paid == cert.cost;
      for (VertexId t : rep.failures) std::cout << "terminal " << t << " has " << rep.connectivity[t] << " paths\n";
      if (!cost_ok) std::cout << "stated cost " << format_cost(cert.cost) << " but edges cost " << format_cost(paid) << "\n";
      if (rep.pass && cost_ok) std::cout << "ok\n";
      return rep.pass && cost_ok ? 0 : kExitValidation;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 4;
  } catch (const ConsistencyError& e) {
    std::cerr << "consistency error: " << e.what() << "\n";
    return 5;
  } catch (const ThresholdViolation& e) {
    std::cerr << "threshold violation: " << e.what() << "\n";
    return 3;
  } catch (const Infeasible& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return 3;
  } catch (const NoPacking& e) {
    std::cerr << "no packing: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
