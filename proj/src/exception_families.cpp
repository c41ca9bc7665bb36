#include <algorithm>
#include <functional>

#include "goodpair/composition_engine.hpp"
#include "goodpair/connectivity.hpp"
#include "goodpair/isomorphism.hpp"

namespace goodpair {

std::string to_string(ExceptionFamily f) {
  static const char* names[] = {"a", "b", "c", "d", "e", "f", "g"};
  return names[static_cast<int>(f)];
}

namespace {

// Quotient pattern on k positions; vertices in different positions must be
// joined exactly as the positions are, except for the relaxed pair.
struct Pattern {
  int k = 0;
  std::vector<Arc> arcs;
  int pos_u = 0;
  int pos_v = 0;
  int relaxed_a = -1;
  int relaxed_b = -1;

  bool has(int p, int q) const { return std::find(arcs.begin(), arcs.end(), Arc{p, q}) != arcs.end(); }
  bool relaxed(int p, int q) const {
    return (p == relaxed_a && q == relaxed_b) || (p == relaxed_b && q == relaxed_a);
  }
};

using Blocks = std::vector<std::vector<Vertex>>;

bool for_each_placement(const Digraph& q, Vertex u, Vertex v, const Pattern& pat,
                        const std::function<bool(const Blocks&)>& accept) {
  const int n = q.order();
  std::vector<Vertex> order{u};
  if (v != u) order.push_back(v);
  for (Vertex w = 0; w < n; ++w)
    if (w != u && w != v) order.push_back(w);
  std::vector<int> pos(n, -1);
  auto fits = [&](Vertex w, int p) {
    for (Vertex x = 0; x < n; ++x) {
      if (pos[x] < 0 || x == w || pos[x] == p) continue;
      if (pat.relaxed(p, pos[x])) {
        if (!q.adjacent(w, x)) return false;
        continue;
      }
      if (q.has_arc(w, x) != pat.has(p, pos[x]) || q.has_arc(x, w) != pat.has(pos[x], p)) return false;
    }
    return true;
  };
  std::function<bool(std::size_t)> go = [&](std::size_t i) -> bool {
    if (i == order.size()) {
      Blocks b(pat.k);
      for (Vertex w = 0; w < n; ++w) b[pos[w]].push_back(w);
      for (const auto& block : b)
        if (block.empty()) return false;
      return accept(b);
    }
    Vertex w = order[i];
    for (int p = 0; p < pat.k; ++p) {
      if (w == u && p != pat.pos_u) continue;
      if (w == v && p != pat.pos_v) continue;
      if (!fits(w, p)) continue;
      pos[w] = p;
      if (go(i + 1)) return true;
      pos[w] = -1;
    }
    return false;
  };
  return go(0);
}

int internal_arcs(const Digraph& q, const std::vector<Vertex>& block) {
  int count = 0;
  for (Vertex x : block)
    for (Vertex y : block)
      if (x != y && q.has_arc(x, y)) ++count;
  return count;
}

bool in_degree_one_except(const Digraph& q, const std::vector<Vertex>& block, Vertex keep) {
  for (Vertex w : block)
    if (w != keep && q.in_degree(w) != 1) return false;
  return true;
}

bool out_degree_one_except(const Digraph& q, const std::vector<Vertex>& block, Vertex keep) {
  for (Vertex w : block)
    if (w != keep && q.out_degree(w) != 1) return false;
  return true;
}

Pattern cycle3(int pos_u, int pos_v) { return Pattern{3, {{0, 1}, {1, 2}, {2, 0}}, pos_u, pos_v}; }

// Reverse-path transitive tournament: consecutive positions forward, all others backward.
Pattern reverse_path(int k, int pos_u, int pos_v) {
  Pattern p{k, {}, pos_u, pos_v};
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) p.arcs.push_back(j == i + 1 ? Arc{i, j} : Arc{j, i});
  return p;
}

std::optional<ExceptionMatch> match_family_b(const Digraph& q, Vertex u, Vertex v) {
  const int n = q.order();
  if (n < 3 || u == v) return std::nullopt;
  for (const Arc& a : q.arcs()) {
    bool ok = (a.tail == u) || (a.head == v) || (a.tail == v && a.head == u);
    if (!ok) return std::nullopt;
  }
  for (Vertex w = 0; w < n; ++w)
    if (w != u && w != v && (!q.has_arc(u, w) || !q.has_arc(w, v))) return std::nullopt;
  if (!q.has_arc(u, v)) return std::nullopt;
  std::vector<Vertex> mid;
  for (Vertex w = 0; w < n; ++w)
    if (w != u && w != v) mid.push_back(w);
  return ExceptionMatch{ExceptionFamily::B, false, {{u}, mid, {v}}, q.has_arc(v, u) ? "with vu" : "without vu"};
}

// The reverse-path families as they arise structurally: the in-neighbourhood U
// of v is a module holding u, a single vertex z feeds U (and is the only
// in-neighbour of U - u), u does not dominate z, and apart from v exactly one
// module K dominates z; when |K| >= 2 each vertex of K has z as its only out-neighbour.
std::optional<Blocks> match_reverse_path_structure(const Digraph& q, Vertex u, Vertex v) {
  const int n = q.order();
  if (u == v || q.has_arc(v, v)) return std::nullopt;
  std::vector<Vertex> hu = q.in_neighbors(v);
  if (std::find(hu.begin(), hu.end(), u) == hu.end() || !is_module(q, hu)) return std::nullopt;
  std::vector<bool> in_u = to_mask(n, hu);
  Vertex z = kNoVertex;
  for (Vertex w : q.in_neighbors(u)) {
    if (in_u[w]) continue;
    if (z != kNoVertex) return std::nullopt;
    z = w;
  }
  if (z == kNoVertex || z == v || q.has_arc(u, z)) return std::nullopt;
  for (Vertex w : hu)
    if (w != u && (q.in_degree(w) != 1 || !q.has_arc(z, w))) return std::nullopt;
  std::vector<Vertex> k;
  for (Vertex w : q.in_neighbors(z))
    if (w != v && !in_u[w]) k.push_back(w);
  if (k.empty() || !is_module(q, k)) return std::nullopt;
  if (k.size() >= 2)
    for (Vertex w : k)
      if (q.out_degree(w) != 1) return std::nullopt;
  std::vector<bool> used = in_u;
  used[v] = used[z] = true;
  for (Vertex w : k) used[w] = true;
  std::vector<Vertex> rest;
  for (Vertex w = 0; w < n; ++w)
    if (!used[w]) rest.push_back(w);
  if (!is_strong(q)) return std::nullopt;
  return Blocks{rest, k, {z}, hu, {v}};
}

std::optional<ExceptionMatch> match_oriented(const Digraph& q, Vertex u, Vertex v) {
  const int n = q.order();
  std::optional<ExceptionMatch> found;
  auto record = [&](ExceptionFamily f, const Blocks& b, std::string params) {
    found = ExceptionMatch{f, false, b, std::move(params)};
    return true;
  };

  if (n == 6 && u != v) {
    for_each_placement(q, u, v, cycle3(2, 2), [&](const Blocks& b) {
      if (b[0].size() != 2 || b[1].size() != 2 || b[2].size() != 2) return false;
      if (internal_arcs(q, b[0]) || internal_arcs(q, b[1]) || q.has_arc(u, v)) return false;
      return record(ExceptionFamily::A, b, q.has_arc(v, u) ? "with vu" : "without vu");
    });
    if (found) return found;
  }
  if (auto b = match_family_b(q, u, v)) return b;
  if (u != v && n >= 3) {
    for_each_placement(q, u, v, cycle3(0, 2), [&](const Blocks& b) {
      if (b[0].size() != 1 || b[2].size() != 1 || internal_arcs(q, b[1]) > 1) return false;
      return record(ExceptionFamily::C, b, "|H|=" + std::to_string(b[1].size()));
    });
    if (found) return found;
    for_each_placement(q, u, v, cycle3(0, 1), [&](const Blocks& b) {
      if (b[2].size() != 1 || !in_degree_one_except(q, b[0], u) || !out_degree_one_except(q, b[1], v)) return false;
      return record(ExceptionFamily::D, b,
                    "|H(u)|=" + std::to_string(b[0].size()) + " |H(v)|=" + std::to_string(b[1].size()));
    });
    if (found) return found;
    for_each_placement(q, u, v, reverse_path(4, 2, 3), [&](const Blocks& b) {
      if (b[1].size() != 1 || b[3].size() != 1 || internal_arcs(q, b[0]) || !in_degree_one_except(q, b[2], u))
        return false;
      return record(ExceptionFamily::E, b, "RT4 t=" + std::to_string(b[0].size()));
    });
    if (found) return found;
    for_each_placement(q, u, v, reverse_path(5, 3, 4), [&](const Blocks& b) {
      if (b[2].size() != 1 || b[4].size() != 1 || internal_arcs(q, b[1]) || !in_degree_one_except(q, b[3], u))
        return false;
      return record(ExceptionFamily::E, b, "RT5 t=" + std::to_string(b[1].size()));
    });
    if (found) return found;
    if (auto b = match_reverse_path_structure(q, u, v))
      return ExceptionMatch{ExceptionFamily::F, false, *b, "|K|=" + std::to_string((*b)[1].size())};
    if (n == 4) {
      Digraph g = small_exception_digraph(SmallException::E);
      if (auto m = small_digraph_match(q, g, {{0, u}, {3, v}})) {
        Blocks b;
        for (Vertex x : *m) b.push_back({x});
        return ExceptionMatch{ExceptionFamily::G, false, b, ""};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<ExceptionMatch> match_exception_family(const Digraph& q, Vertex u, Vertex v) {
  if (auto m = match_oriented(q, u, v)) return m;
  if (auto m = match_oriented(q.converse(), v, u)) {
    m->reversed = true;
    return m;
  }
  return std::nullopt;
}

std::optional<ExceptionMatch> match_exception_family(const Composition& c, Vertex u, Vertex v) {
  return match_exception_family(c.flatten(), u, v);
}

}  // namespace goodpair
