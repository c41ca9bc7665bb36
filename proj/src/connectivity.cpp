#include "goodpair/connectivity.hpp"

#include <algorithm>
#include <deque>
#include <functional>

namespace goodpair {

Components strong_components(const Digraph& g) {
  const int n = g.order();
  std::vector<std::vector<Vertex>> out(n);
  for (const Arc& a : g.arcs()) out[a.tail].push_back(a.head);

  // Iterative Tarjan; components come out in reverse topological order.
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
  std::vector<Vertex> stack;
  std::vector<bool> on_stack(n, false);
  std::vector<std::vector<Vertex>> found;
  int counter = 0;
  std::vector<std::pair<Vertex, std::size_t>> call;
  for (Vertex s = 0; s < n; ++s) {
    if (index[s] != -1) continue;
    call.push_back({s, 0});
    index[s] = low[s] = counter++;
    stack.push_back(s);
    on_stack[s] = true;
    while (!call.empty()) {
      auto& [v, i] = call.back();
      if (i < out[v].size()) {
        Vertex w = out[v][i++];
        if (index[w] == -1) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        std::vector<Vertex> c;
        Vertex w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          c.push_back(w);
        } while (w != v);
        std::sort(c.begin(), c.end());
        found.push_back(std::move(c));
      }
      Vertex done = v;
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
    }
  }
  Components r;
  r.members.assign(found.rbegin(), found.rend());
  r.component_of.assign(n, -1);
  for (int c = 0; c < r.count(); ++c)
    for (Vertex v : r.members[c]) r.component_of[v] = c;
  return r;
}

bool is_strong(const Digraph& g) { return g.order() <= 1 || strong_components(g).strong(); }

namespace {

std::vector<bool> search(const Digraph& g, Vertex s, bool forward) {
  std::vector<bool> seen(g.order(), false);
  std::vector<Vertex> todo{s};
  seen[s] = true;
  while (!todo.empty()) {
    Vertex x = todo.back();
    todo.pop_back();
    for (Vertex y : forward ? g.out_neighbors(x) : g.in_neighbors(x))
      if (!seen[y]) {
        seen[y] = true;
        todo.push_back(y);
      }
  }
  return seen;
}

// Unit-capacity max flow by shortest augmenting paths.
struct FlowNetwork {
  const Digraph& g;
  std::vector<std::vector<int>> out_arcs, in_arcs;
  std::vector<char> flow;

  explicit FlowNetwork(const Digraph& d) : g(d), out_arcs(d.order()), in_arcs(d.order()), flow(d.size(), 0) {
    const auto& arcs = g.arcs();
    for (int i = 0; i < static_cast<int>(arcs.size()); ++i) {
      out_arcs[arcs[i].tail].push_back(i);
      in_arcs[arcs[i].head].push_back(i);
    }
  }

  // BFS in the residual network; returns parent arc per vertex (encoded +i+1 forward, -(i+1) backward).
  std::vector<int> residual_bfs(Vertex s, std::vector<bool>& seen) const {
    const auto& arcs = g.arcs();
    std::vector<int> via(g.order(), 0);
    seen.assign(g.order(), false);
    std::deque<Vertex> q{s};
    seen[s] = true;
    while (!q.empty()) {
      Vertex x = q.front();
      q.pop_front();
      for (int i : out_arcs[x])
        if (!flow[i] && !seen[arcs[i].head]) {
          seen[arcs[i].head] = true;
          via[arcs[i].head] = i + 1;
          q.push_back(arcs[i].head);
        }
      for (int i : in_arcs[x])
        if (flow[i] && !seen[arcs[i].tail]) {
          seen[arcs[i].tail] = true;
          via[arcs[i].tail] = -(i + 1);
          q.push_back(arcs[i].tail);
        }
    }
    return via;
  }

  int run(Vertex s, Vertex t, int limit, std::vector<bool>& seen) {
    const auto& arcs = g.arcs();
    int value = 0;
    while (limit < 0 || value < limit) {
      std::vector<int> via = residual_bfs(s, seen);
      if (!seen[t]) return value;
      for (Vertex x = t; x != s;) {
        int e = via[x];
        if (e > 0) {
          flow[e - 1] = 1;
          x = arcs[e - 1].tail;
        } else {
          flow[-e - 1] = 0;
          x = arcs[-e - 1].head;
        }
      }
      ++value;
    }
    residual_bfs(s, seen);
    return value;
  }
};

}  // namespace

std::vector<bool> reachable_from(const Digraph& g, Vertex s) { return search(g, s, true); }
std::vector<bool> reaching(const Digraph& g, Vertex t) { return search(g, t, false); }

std::vector<bool> to_mask(int n, const std::vector<Vertex>& vs) {
  std::vector<bool> m(n, false);
  for (Vertex v : vs) m[v] = true;
  return m;
}

std::vector<Vertex> from_mask(const std::vector<bool>& mask) {
  std::vector<Vertex> r;
  for (Vertex v = 0; v < static_cast<Vertex>(mask.size()); ++v)
    if (mask[v]) r.push_back(v);
  return r;
}

std::vector<Arc> arcs_leaving(const Digraph& g, const std::vector<bool>& in_set) {
  std::vector<Arc> r;
  for (const Arc& a : g.arcs())
    if (in_set[a.tail] && !in_set[a.head]) r.push_back(a);
  return r;
}

std::vector<Arc> arcs_entering(const Digraph& g, const std::vector<bool>& in_set) {
  std::vector<Arc> r;
  for (const Arc& a : g.arcs())
    if (!in_set[a.tail] && in_set[a.head]) r.push_back(a);
  return r;
}

LocalConnectivity local_arc_connectivity(const Digraph& g, Vertex x, Vertex y, int limit) {
  if (x < 0 || y < 0 || x >= g.order() || y >= g.order()) throw PreconditionError("vertex out of range");
  if (x == y) throw PreconditionError("local arc-connectivity needs distinct ends");
  FlowNetwork net(g);
  std::vector<bool> seen;
  LocalConnectivity r;
  r.value = net.run(x, y, limit, seen);
  if (!seen[y]) {
    r.cut.source_side = from_mask(seen);
    r.cut.arcs = arcs_leaving(g, seen);
  }
  return r;
}

std::optional<std::vector<std::vector<Vertex>>> arc_disjoint_paths(const Digraph& g, Vertex x, Vertex y, int k) {
  if (x == y) throw PreconditionError("arc-disjoint paths need distinct ends");
  FlowNetwork net(g);
  std::vector<bool> seen;
  if (net.run(x, y, k, seen) < k) return std::nullopt;
  const auto& arcs = g.arcs();
  std::vector<std::vector<Vertex>> paths;
  for (int p = 0; p < k; ++p) {
    // Walk along unused flow arcs, lowest arc id first; cut out cycles on the way.
    std::vector<Vertex> walk{x};
    std::vector<int> used;
    Vertex cur = x;
    while (cur != y) {
      int next = -1;
      for (int i : net.out_arcs[cur])
        if (net.flow[i] == 1) {
          next = i;
          break;
        }
      if (next < 0) throw InternalInconsistency("flow decomposition stalled");
      net.flow[next] = 2;
      cur = arcs[next].head;
      auto it = std::find(walk.begin(), walk.end(), cur);
      if (it != walk.end()) {
        walk.erase(it + 1, walk.end());
      } else {
        walk.push_back(cur);
      }
    }
    paths.push_back(std::move(walk));
  }
  return paths;
}

StrengthCheck is_k_arc_strong(const Digraph& g, int k) {
  StrengthCheck r;
  if (k <= 0 || g.order() <= 1) return r;
  Digraph rev = g.converse();
  for (Vertex w = 1; w < g.order(); ++w) {
    LocalConnectivity there = local_arc_connectivity(g, 0, w, k);
    if (there.value < k) {
      r.ok = false;
      r.cut = there.cut;
      return r;
    }
    LocalConnectivity back = local_arc_connectivity(rev, 0, w, k);
    if (back.value < k) {
      // Reversed cut: the complement of the reverse source side has few leaving arcs in g.
      std::vector<bool> side = to_mask(g.order(), back.cut.source_side);
      side.flip();
      r.ok = false;
      r.cut = CutWitness{from_mask(side), arcs_leaving(g, side)};
      return r;
    }
  }
  return r;
}

}  // namespace goodpair
