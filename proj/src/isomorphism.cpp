#include "goodpair/isomorphism.hpp"

#include <algorithm>
#include <numeric>

namespace goodpair {

namespace {

struct Matcher {
  const Digraph& g;
  const Digraph& p;
  std::vector<Vertex> map;   // pattern -> g
  std::vector<Vertex> back;  // g -> pattern

  bool consistent(Vertex pv, Vertex gv) const {
    if (g.out_degree(gv) != p.out_degree(pv) || g.in_degree(gv) != p.in_degree(pv)) return false;
    for (Vertex q = 0; q < p.order(); ++q) {
      if (map[q] == kNoVertex) continue;
      if (p.has_arc(pv, q) != g.has_arc(gv, map[q])) return false;
      if (p.has_arc(q, pv) != g.has_arc(map[q], gv)) return false;
    }
    return true;
  }

  bool extend(Vertex pv) {
    while (pv < p.order() && map[pv] != kNoVertex) ++pv;
    if (pv == p.order()) return true;
    for (Vertex gv = 0; gv < g.order(); ++gv) {
      if (back[gv] != kNoVertex || !consistent(pv, gv)) continue;
      map[pv] = gv;
      back[gv] = pv;
      if (extend(pv + 1)) return true;
      map[pv] = kNoVertex;
      back[gv] = kNoVertex;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<Vertex>> small_digraph_match(const Digraph& g, const Digraph& pattern,
                                                       const std::vector<std::pair<Vertex, Vertex>>& pinned,
                                                       int bound) {
  if (pattern.order() > bound) throw PreconditionError("pattern exceeds match bound");
  if (g.order() != pattern.order() || g.size() != pattern.size()) return std::nullopt;
  Matcher m{g, pattern, std::vector<Vertex>(pattern.order(), kNoVertex), std::vector<Vertex>(g.order(), kNoVertex)};
  for (auto [pv, gv] : pinned) {
    if (pv < 0 || pv >= pattern.order() || gv < 0 || gv >= g.order()) throw PreconditionError("pin out of range");
    if (m.map[pv] != kNoVertex && m.map[pv] != gv) return std::nullopt;
    if (m.back[gv] != kNoVertex && m.back[gv] != pv) return std::nullopt;
    if (m.map[pv] == kNoVertex && !m.consistent(pv, gv)) return std::nullopt;
    m.map[pv] = gv;
    m.back[gv] = pv;
  }
  if (!m.extend(0)) return std::nullopt;
  return m.map;
}

Digraph relabel(const Digraph& g, const std::vector<Vertex>& new_label) {
  Digraph r(g.order());
  for (const Arc& a : g.arcs()) r.add_arc(new_label[a.tail], new_label[a.head]);
  return r;
}

std::vector<bool> canonical_code(const Digraph& g, const std::vector<Vertex>& fixed) {
  const int n = g.order();
  std::vector<Vertex> rest;
  for (Vertex v = 0; v < n; ++v)
    if (std::find(fixed.begin(), fixed.end(), v) == fixed.end()) rest.push_back(v);
  std::vector<bool> best;
  std::vector<Vertex> order;
  do {
    order = fixed;
    order.insert(order.end(), rest.begin(), rest.end());
    std::vector<bool> code;
    code.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) code.push_back(g.has_arc(order[i], order[j]));
    if (best.empty() || code < best) best = std::move(code);
  } while (std::next_permutation(rest.begin(), rest.end()));
  return best;
}

}  // namespace goodpair
