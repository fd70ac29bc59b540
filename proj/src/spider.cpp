#include "elemconn/spider.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "elemconn/errors.hpp"
#include "elemconn/reduction.hpp"

namespace elemconn {

std::vector<VertexId> Spider::feet() const {
  std::vector<VertexId> out;
  for (const auto& leg : legs) out.push_back(leg.back());
  return out;
}

namespace {

// Stars around whites marked at least twice; b-w-b' for whites marked once.
std::vector<Spider> base_spiders(const ColoredMultigraph& r, int k) {
  std::map<VertexId, std::vector<VertexId>> marked_by;
  for (VertexId b : r.blacks()) {
    int marks = 0;
    for (VertexId w : r.neighbors(b)) {
      if (marks == k) break;
      // A white that sees no other black cannot carry a path anywhere.
      if (r.neighbors(w).size() < 2) continue;
      marked_by[w].push_back(b);
      ++marks;
    }
    if (marks < k) {
      throw InvalidArgument("black vertex " + std::to_string(b) + " has fewer than " +
                            std::to_string(k) + " white neighbours leading elsewhere");
    }
  }
  std::vector<Spider> out;
  for (const auto& [w, feet] : marked_by) {
    Spider s;
    if (feet.size() >= 2) {
      s.head = w;
      for (VertexId b : feet) {
        s.legs.push_back({w, b});
        s.leg_edges.push_back({r.edges_between(w, b).front()});
      }
    } else {
      VertexId b = feet.front();
      VertexId other = -1;
      for (VertexId x : r.neighbors(w)) {
        if (x != b) {
          other = x;
          break;
        }
      }
      s.head = other;
      s.black_head = true;
      s.legs.push_back({other, w, b});
      s.leg_edges.push_back({r.edges_between(other, w).front(), r.edges_between(w, b).front()});
    }
    out.push_back(std::move(s));
  }
  return out;
}

void lift_contraction(std::vector<Spider>& spiders, const ContractEdge& rec, SpiderStats& stats) {
  const VertexId v = rec.survivor;
  auto hit = std::find_if(spiders.begin(), spiders.end(), [v](const Spider& s) {
    if (s.head == v) return true;
    for (const auto& leg : s.legs) {
      if (std::find(leg.begin(), leg.end(), v) != leg.end()) return true;
    }
    return false;
  });
  if (hit == spiders.end()) return;
  ++stats.contractions_lifted;
  std::set<EdgeId> moved(rec.moved.begin(), rec.moved.end());
  auto side = [&](EdgeId e) { return moved.count(e) ? rec.absorbed : rec.survivor; };
  const VertexId p = rec.survivor;
  const VertexId q = rec.absorbed;
  Spider& s = *hit;

  if (s.head != v) {
    for (std::size_t i = 0; i < s.legs.size(); ++i) {
      auto& leg = s.legs[i];
      auto& edges = s.leg_edges[i];
      auto at = std::find(leg.begin(), leg.end(), v);
      if (at == leg.end()) continue;
      std::size_t j = static_cast<std::size_t>(at - leg.begin());
      if (j == 0 || j + 1 >= leg.size()) throw ConsistencyError("contracted vertex is a foot");
      VertexId sx = side(edges[j - 1]);
      VertexId sy = side(edges[j]);
      if (sx == sy) {
        leg[j] = sx;
      } else {
        leg[j] = sx;
        leg.insert(leg.begin() + static_cast<long>(j) + 1, sy);
        edges.insert(edges.begin() + static_cast<long>(j), rec.edge);
      }
      return;
    }
    throw ConsistencyError("contracted vertex not found in its spider");
  }

  std::vector<std::size_t> at_p;
  std::vector<std::size_t> at_q;
  for (std::size_t i = 0; i < s.legs.size(); ++i) {
    (side(s.leg_edges[i].front()) == p ? at_p : at_q).push_back(i);
  }
  int branches = 0;
  if (at_p.size() >= 2 && at_q.size() >= 2) {
    ++branches;
    Spider sq;
    sq.head = q;
    Spider sp;
    sp.head = p;
    for (std::size_t i : at_p) {
      sp.legs.push_back(s.legs[i]);
      sp.leg_edges.push_back(s.leg_edges[i]);
    }
    for (std::size_t i : at_q) {
      auto leg = s.legs[i];
      leg.front() = q;
      sq.legs.push_back(std::move(leg));
      sq.leg_edges.push_back(s.leg_edges[i]);
    }
    s = std::move(sp);
    spiders.push_back(std::move(sq));
    ++stats.heads_split;
  }
  if (at_q.empty() || at_p.empty()) {
    ++branches;
    VertexId h = at_q.empty() ? p : q;
    s.head = h;
    for (auto& leg : s.legs) leg.front() = h;
    ++stats.heads_relabelled;
  }
  if (!at_p.empty() && !at_q.empty() && (at_p.size() == 1 || at_q.size() == 1) &&
      !(at_p.size() >= 2 && at_q.size() >= 2)) {
    ++branches;
    // The side with the single leg joins that leg; ties keep the survivor.
    bool lone_is_p = at_p.size() == 1 && (at_q.size() > 1 || q < p);
    VertexId h = lone_is_p ? q : p;
    VertexId l = lone_is_p ? p : q;
    std::size_t lone = lone_is_p ? at_p.front() : at_q.front();
    for (std::size_t i = 0; i < s.legs.size(); ++i) {
      s.legs[i].front() = h;
      if (i == lone) {
        s.legs[i].insert(s.legs[i].begin() + 1, l);
        s.leg_edges[i].insert(s.leg_edges[i].begin(), rec.edge);
      }
    }
    s.head = h;
    ++stats.heads_moved;
  }
  if (branches != 1) throw ConsistencyError("head lifting matched " + std::to_string(branches) + " cases");
}

}  // namespace

SpiderDecomposition spider_decompose(const ColoredMultigraph& g, const std::vector<VertexId>& blacks,
                                     int k, SpiderStats* stats) {
  if (k < 1) throw InvalidArgument("k must be positive");
  ColoredMultigraph gb = with_terminals(g, blacks);
  if (has_black_black_edge(gb)) throw InvalidArgument("black-black edge present; subdivide first");
  ReductionResult red = reduce_to_bipartite(gb);
  SpiderStats local;
  std::vector<Spider> spiders = base_spiders(red.reduced, k);
  const auto& recs = red.trace.records();
  for (auto it = recs.rbegin(); it != recs.rend(); ++it) {
    if (const auto* c = std::get_if<ContractEdge>(&*it)) lift_contraction(spiders, *c, local);
  }
  SpiderDecomposition sd;
  sd.spiders = std::move(spiders);
  for (VertexId b : gb.blacks()) sd.foot_count[b] = 0;
  for (const auto& s : sd.spiders) {
    for (VertexId f : s.feet()) ++sd.foot_count[f];
  }
  if (stats) *stats = local;
  return sd;
}

std::map<VertexId, std::vector<ElementPath>> extract_element_paths(const SpiderDecomposition& sd) {
  std::map<VertexId, std::vector<ElementPath>> out;
  for (const auto& s : sd.spiders) {
    if (s.legs.empty() || s.legs.size() != s.leg_edges.size()) {
      throw InvalidArgument("malformed spider at head " + std::to_string(s.head));
    }
    for (std::size_t i = 0; i < s.legs.size(); ++i) {
      const auto& leg = s.legs[i];
      if (leg.size() < 2 || leg.front() != s.head || s.leg_edges[i].size() + 1 != leg.size()) {
        throw InvalidArgument("malformed leg at head " + std::to_string(s.head));
      }
    }
    bool white_head = !s.black_head;
    if (white_head && s.legs.size() < 2) {
      throw InvalidArgument("white head " + std::to_string(s.head) + " with a single foot");
    }
    for (std::size_t i = 0; i < s.legs.size(); ++i) {
      ElementPath p;
      p.from = s.legs[i].back();
      p.vertices.assign(s.legs[i].rbegin(), s.legs[i].rend());
      p.edges.assign(s.leg_edges[i].rbegin(), s.leg_edges[i].rend());
      if (white_head) {
        std::size_t j = (i + 1) % s.legs.size();
        p.vertices.insert(p.vertices.end(), s.legs[j].begin() + 1, s.legs[j].end());
        p.edges.insert(p.edges.end(), s.leg_edges[j].begin(), s.leg_edges[j].end());
      }
      p.to = p.vertices.back();
      out[p.from].push_back(std::move(p));
    }
  }
  return out;
}

}  // namespace elemconn
