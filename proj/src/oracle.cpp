#include "goodpair/oracle.hpp"

#include <string>

namespace goodpair {

namespace {

struct Enumerator {
  const Digraph& g;
  Vertex u, v;
  long budget;
  long nodes = 0;
  int n;
  std::vector<Vertex> parent;
  std::vector<std::vector<Vertex>> preds;
  std::vector<bool> shareable;  // n*n, arcs the in-branching may reuse

  bool used(Vertex x, Vertex y) const { return parent[y] == x && !shareable[x * n + y]; }

  bool everyone_reaches_v() const {
    std::vector<bool> seen(n, false);
    std::vector<Vertex> todo{v};
    seen[v] = true;
    int count = 1;
    while (!todo.empty()) {
      Vertex y = todo.back();
      todo.pop_back();
      for (Vertex x : preds[y])
        if (!seen[x] && !used(x, y)) {
          seen[x] = true;
          ++count;
          todo.push_back(x);
        }
    }
    return count == n;
  }

  bool u_still_spans(Vertex next) const {
    std::vector<bool> seen(n, false);
    std::vector<Vertex> todo{u};
    seen[u] = true;
    int count = 1;
    while (!todo.empty()) {
      Vertex x = todo.back();
      todo.pop_back();
      for (Vertex y = 0; y < n; ++y) {
        if (seen[y] || !g.has_arc(x, y)) continue;
        if (y != u && y < next && parent[y] != x) continue;
        seen[y] = true;
        ++count;
        todo.push_back(y);
      }
    }
    return count == n;
  }

  bool choose(Vertex w) {
    if (++nodes > budget) throw ResourceExceeded("oracle budget exhausted");
    if (w == u) ++w;
    if (w >= n) return true;
    for (Vertex p : preds[w]) {
      parent[w] = p;
      if (u_still_spans(w + 1) && everyone_reaches_v() && choose(w + 1)) return true;
    }
    parent[w] = kNoVertex;
    return false;
  }
};

}  // namespace

OracleResult oracle_pair_sharing_only(const Digraph& g, Vertex u, Vertex v, const std::vector<Arc>& shareable,
                                      const OracleLimits& limits) {
  const int n = g.order();
  if (u < 0 || u >= n || v < 0 || v >= n) throw PreconditionError("root out of range");
  if (n > limits.max_order)
    throw ResourceExceeded("oracle refuses order " + std::to_string(n) + " > " + std::to_string(limits.max_order));
  Enumerator e{g, u, v, limits.budget, 0, n, std::vector<Vertex>(n, kNoVertex), std::vector<std::vector<Vertex>>(n), std::vector<bool>(n * n, false)};
  for (const Arc& a : shareable) {
    if (!g.has_arc(a.tail, a.head)) throw PreconditionError("shareable arc " + to_string(a) + " not in digraph");
    e.shareable[a.tail * n + a.head] = true;
  }
  for (Vertex y = 0; y < n; ++y) e.preds[y] = g.in_neighbors(y);
  OracleResult r;
  r.has_pair = e.u_still_spans(0) && e.everyone_reaches_v() && e.choose(0);
  r.nodes = e.nodes;
  if (!r.has_pair) return r;
  BranchingPair p{Branching{Orientation::Out, u, e.parent}, Branching{Orientation::In, v, std::vector<Vertex>(n, kNoVertex)}};
  // Any breadth-first in-tree towards v in the leftover arcs.
  std::vector<bool> seen(n, false);
  std::vector<Vertex> queue{v};
  seen[v] = true;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    Vertex y = queue[i];
    for (Vertex x : e.preds[y])
      if (!seen[x] && !e.used(x, y)) {
        seen[x] = true;
        p.in.link[x] = y;
        queue.push_back(x);
      }
  }
  r.pair = p;
  return r;
}

OracleResult oracle_good_pair(const Digraph& g, Vertex u, Vertex v, const OracleLimits& limits) {
  return oracle_pair_sharing_only(g, u, v, {}, limits);
}

}  // namespace goodpair
