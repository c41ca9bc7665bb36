#include "goodpair/branching.hpp"

#include <algorithm>
#include <deque>

namespace goodpair {

std::vector<Arc> Branching::arcs() const {
  std::vector<Arc> r;
  for (Vertex w = 0; w < static_cast<Vertex>(link.size()); ++w) {
    if (link[w] == kNoVertex) continue;
    r.push_back(orientation == Orientation::Out ? Arc{link[w], w} : Arc{w, link[w]});
  }
  std::sort(r.begin(), r.end());
  return r;
}

bool Branching::contains(const Arc& a) const {
  if (orientation == Orientation::Out) return a.head < static_cast<Vertex>(link.size()) && link[a.head] == a.tail;
  return a.tail < static_cast<Vertex>(link.size()) && link[a.tail] == a.head;
}

Branching Branching::from_arcs(Orientation o, Vertex root, int n, const std::vector<Arc>& arcs) {
  Branching b{o, root, std::vector<Vertex>(n, kNoVertex)};
  for (const Arc& a : arcs) {
    Vertex key = o == Orientation::Out ? a.head : a.tail;
    Vertex val = o == Orientation::Out ? a.tail : a.head;
    if (key < 0 || key >= n || val < 0 || val >= n) throw PreconditionError("branching arc out of range");
    if (b.link[key] != kNoVertex)
      throw PreconditionError(std::string("vertex has two ") + (o == Orientation::Out ? "entering" : "leaving") +
                              " branching arcs: " + std::to_string(key));
    b.link[key] = val;
  }
  return b;
}

std::vector<Arc> BranchingPair::shared_arcs() const {
  std::vector<Arc> a = out.arcs(), b = in.arcs(), r;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

Check verify_branching(const Digraph& g, const Branching& b, Orientation o, Vertex root) {
  const int n = g.order();
  const char* name = o == Orientation::Out ? "out-branching" : "in-branching";
  if (b.orientation != o) return {false, Defect::WrongOrientation, std::string(name) + " has the wrong orientation", {}, {}};
  if (static_cast<int>(b.link.size()) != n) return {false, Defect::WrongOrder, std::string(name) + " does not span", {}, {}};
  if (b.root != root || root < 0 || root >= n || b.link[root] != kNoVertex)
    return {false, Defect::WrongRoot, std::string(name) + " is not rooted at " + std::to_string(root), {}, root};
  for (Vertex w = 0; w < n; ++w) {
    if (w == root) continue;
    Vertex x = b.link[w];
    if (x == kNoVertex) return {false, Defect::WrongOrder, std::string(name) + " is not spanning, it misses vertex " + std::to_string(w), {}, w};
    Arc a = o == Orientation::Out ? Arc{x, w} : Arc{w, x};
    if (!g.has_arc(a)) return {false, Defect::MissingArc, std::string(name) + " uses non-arc " + to_string(a), a, {}};
  }
  for (Vertex w = 0; w < n; ++w) {
    Vertex x = w;
    for (int steps = 0; x != root; ++steps) {
      if (steps > n) return {false, Defect::Cycle, std::string(name) + " has a cycle through " + std::to_string(w), {}, w};
      x = b.link[x];
    }
  }
  return {};
}

Check verify_good_pair(const Digraph& g, const BranchingPair& p, Vertex u, Vertex v) {
  if (Check c = verify_branching(g, p.out, Orientation::Out, u); !c.ok) return c;
  if (Check c = verify_branching(g, p.in, Orientation::In, v); !c.ok) return c;
  std::vector<Arc> shared = p.shared_arcs();
  if (!shared.empty())
    return {false, Defect::SharedArc, "branchings share arc " + to_string(shared.front()), shared.front(), {}};
  return {};
}

std::optional<Branching> find_branching(const Digraph& g, Vertex root, Orientation o) {
  const int n = g.order();
  if (root < 0 || root >= n) throw PreconditionError("root out of range");
  Branching b{o, root, std::vector<Vertex>(n, kNoVertex)};
  std::vector<bool> seen(n, false);
  std::deque<Vertex> q{root};
  seen[root] = true;
  int reached = 1;
  while (!q.empty()) {
    Vertex x = q.front();
    q.pop_front();
    for (Vertex y : o == Orientation::Out ? g.out_neighbors(x) : g.in_neighbors(x)) {
      if (seen[y]) continue;
      seen[y] = true;
      b.link[y] = x;
      ++reached;
      q.push_back(y);
    }
  }
  if (reached != n) return std::nullopt;
  return b;
}

namespace {

bool all_reach_from(const Digraph& g, Vertex s, int need) {
  for (Vertex z = 0; z < g.order(); ++z)
    if (z != s && local_arc_connectivity(g, s, z, need).value < need) return false;
  return true;
}

}  // namespace

EdmondsResult edmonds_branchings(const Digraph& g, Vertex root, int k) {
  const int n = g.order();
  if (root < 0 || root >= n) throw PreconditionError("root out of range");
  EdmondsResult r;
  for (Vertex z = 0; z < n; ++z) {
    if (z == root) continue;
    LocalConnectivity c = local_arc_connectivity(g, root, z, k);
    if (c.value < k) {
      std::vector<bool> side = to_mask(n, c.cut.source_side);
      side.flip();
      r.violation = DeficientSet{from_mask(side), c.cut.arcs};
      return r;
    }
  }
  // Grow one branching at a time, keeping enough connectivity for the rest.
  Digraph rest = g;
  for (int i = 0; i < k; ++i) {
    const int later = k - i - 1;
    std::vector<Arc> tree;
    std::vector<bool> in_tree(n, false);
    in_tree[root] = true;
    for (int grown = 1; grown < n; ++grown) {
      bool extended = false;
      for (const Arc& a : rest.arcs()) {
        if (!in_tree[a.tail] || in_tree[a.head]) continue;
        std::vector<Arc> trial = tree;
        trial.push_back(a);
        if (later > 0 && !all_reach_from(rest.without_arcs(trial), root, later)) continue;
        tree.push_back(a);
        in_tree[a.head] = true;
        extended = true;
        break;
      }
      if (!extended) throw InternalInconsistency("branching growth stalled");
    }
    r.branchings.push_back(Branching::from_arcs(Orientation::Out, root, n, tree));
    rest = rest.without_arcs(tree);
  }
  return r;
}

namespace {

struct PathSearch {
  const Digraph& g;
  Vertex root, to;
  long budget;
  long nodes = 0;
  std::vector<Vertex> path;
  std::vector<bool> on_path;
  Digraph residual;

  bool root_spans() const {
    std::vector<bool> r = reachable_from(residual, root);
    return std::all_of(r.begin(), r.end(), [](bool b) { return b; });
  }

  bool extend() {
    if (++nodes > budget) throw ResourceExceeded("branching/path search budget exhausted");
    Vertex x = path.back();
    if (x == to) return true;
    for (Vertex y : g.out_neighbors(x)) {
      if (on_path[y]) continue;
      residual.remove_arc(x, y);
      if (root_spans()) {
        path.push_back(y);
        on_path[y] = true;
        if (extend()) return true;
        on_path[y] = false;
        path.pop_back();
      }
      residual.add_arc(x, y);
    }
    return false;
  }
};

}  // namespace

std::optional<BranchingWithPath> branching_with_disjoint_path(const Digraph& g, Vertex root, Vertex from, Vertex to,
                                                              long budget) {
  const int n = g.order();
  for (Vertex x : {root, from, to})
    if (x < 0 || x >= n) throw PreconditionError("vertex out of range");
  if (!find_branching(g, root, Orientation::Out)) return std::nullopt;
  if (from == to) return BranchingWithPath{*find_branching(g, root, Orientation::Out), {from}};
  if (from == root) {
    // Cheap first attempt: either path of a pair of arc-disjoint paths.
    if (auto two = arc_disjoint_paths(g, root, to, 2)) {
      for (const auto& p : *two) {
        std::vector<Arc> used;
        for (std::size_t i = 0; i + 1 < p.size(); ++i) used.push_back({p[i], p[i + 1]});
        if (auto b = find_branching(g.without_arcs(used), root, Orientation::Out)) return BranchingWithPath{*b, p};
      }
    } else {
      return std::nullopt;
    }
  }
  PathSearch s{g, root, to, budget, 0, {from}, std::vector<bool>(n, false), g};
  s.on_path[from] = true;
  if (!s.extend()) return std::nullopt;
  return BranchingWithPath{*find_branching(s.residual, root, Orientation::Out), s.path};
}

std::optional<BranchingWithPath> branching_avoiding_path(const Digraph& g, Vertex y, Vertex b, long budget) {
  return branching_with_disjoint_path(g, y, y, b, budget);
}

BranchingPair lift_from_induced(const BranchingPair& p, const std::vector<Vertex>& keep, int n) {
  auto lift = [&](const Branching& b) {
    Branching r{b.orientation, keep.at(b.root), std::vector<Vertex>(n, kNoVertex)};
    for (std::size_t i = 0; i < b.link.size(); ++i)
      if (b.link[i] != kNoVertex) r.link[keep[i]] = keep[b.link[i]];
    return r;
  };
  return {lift(p.out), lift(p.in)};
}

BranchingPair extend_pair(const Digraph& g, const std::vector<Vertex>& removed, const BranchingPair& core) {
  const int n = g.order();
  std::vector<bool> gone = to_mask(n, removed);
  std::vector<Vertex> keep;
  for (Vertex w = 0; w < n; ++w)
    if (!gone[w]) keep.push_back(w);
  if (static_cast<int>(core.out.link.size()) != static_cast<int>(keep.size()))
    throw PreconditionError("core pair does not match the remaining vertices");
  BranchingPair r = lift_from_induced(core, keep, n);
  for (Vertex x : removed) {
    Vertex in_nb = kNoVertex, out_nb = kNoVertex;
    for (Vertex w : g.in_neighbors(x))
      if (!gone[w]) {
        in_nb = w;
        break;
      }
    for (Vertex w : g.out_neighbors(x))
      if (!gone[w]) {
        out_nb = w;
        break;
      }
    if (in_nb == kNoVertex || out_nb == kNoVertex)
      throw PreconditionError("vertex " + std::to_string(x) + " lacks a neighbour in the core");
    r.out.link[x] = in_nb;
    r.in.link[x] = out_nb;
  }
  return r;
}

BranchingPair converse_pair(const BranchingPair& p) {
  return {Branching{Orientation::Out, p.in.root, p.in.link}, Branching{Orientation::In, p.out.root, p.out.link}};
}

namespace {

struct PairSearch {
  const Digraph& g;
  Vertex u, v;
  long budget;
  long nodes = 0;
  int n;
  std::vector<Vertex> succ;        // chosen in-branching arc per vertex
  std::vector<Vertex> forced_pred;  // out-branching arc forced by a shared arc
  std::vector<bool> forced_tail;

  // Arc usable by the out-branching given the current in-branching choices.
  bool out_usable(Vertex x, Vertex y) const {
    if (forced_pred[y] != kNoVertex) return forced_pred[y] == x;
    return succ[x] != y || forced_tail[x];
  }

  bool out_side_ok() const {
    std::vector<bool> seen(n, false);
    std::vector<Vertex> todo{u};
    seen[u] = true;
    int count = 1;
    while (!todo.empty()) {
      Vertex x = todo.back();
      todo.pop_back();
      for (Vertex y : g.out_neighbors(x))
        if (!seen[y] && out_usable(x, y)) {
          seen[y] = true;
          ++count;
          todo.push_back(y);
        }
    }
    return count == n;
  }

  bool in_side_ok() const {
    std::vector<bool> seen(n, false);
    std::vector<Vertex> todo{v};
    seen[v] = true;
    int count = 1;
    while (!todo.empty()) {
      Vertex y = todo.back();
      todo.pop_back();
      for (Vertex x : g.in_neighbors(y))
        if (!seen[x] && (succ[x] == kNoVertex || succ[x] == y)) {
          seen[x] = true;
          ++count;
          todo.push_back(x);
        }
    }
    return count == n;
  }

  int in_degree_usable(Vertex y) const {
    int d = 0;
    for (Vertex x : g.in_neighbors(y))
      if (out_usable(x, y)) ++d;
    return d;
  }

  bool run() {
    if (++nodes > budget) throw ResourceExceeded("good-pair search budget exhausted");
    if (!in_side_ok() || !out_side_ok()) return false;
    Vertex pick = kNoVertex;
    int best = n + 1;
    for (Vertex w = 0; w < n; ++w) {
      if (w == v || succ[w] != kNoVertex) continue;
      int d = g.out_degree(w);
      if (d < best) {
        best = d;
        pick = w;
      }
    }
    if (pick == kNoVertex) return true;
    std::vector<Vertex> options = g.out_neighbors(pick);
    std::stable_sort(options.begin(), options.end(),
                     [&](Vertex a, Vertex b) { return in_degree_usable(a) > in_degree_usable(b); });
    for (Vertex y : options) {
      succ[pick] = y;
      if (run()) return true;
    }
    succ[pick] = kNoVertex;
    return false;
  }

  Branching out_branching() const {
    Branching b{Orientation::Out, u, std::vector<Vertex>(n, kNoVertex)};
    std::vector<bool> seen(n, false);
    std::deque<Vertex> q{u};
    seen[u] = true;
    while (!q.empty()) {
      Vertex x = q.front();
      q.pop_front();
      for (Vertex y : g.out_neighbors(x))
        if (!seen[y] && out_usable(x, y)) {
          seen[y] = true;
          b.link[y] = x;
          q.push_back(y);
        }
    }
    return b;
  }
};

}  // namespace

std::optional<BranchingPair> search_good_pair(const Digraph& g, Vertex u, Vertex v, const PairSearchOptions& opt) {
  const int n = g.order();
  if (u < 0 || u >= n || v < 0 || v >= n) throw PreconditionError("root out of range");
  PairSearch s{g, u, v, opt.budget, 0, n, std::vector<Vertex>(n, kNoVertex), std::vector<Vertex>(n, kNoVertex),
               std::vector<bool>(n, false)};
  for (const Arc& a : opt.forced_shared) {
    if (!g.has_arc(a) || a.tail == v || a.head == u) return std::nullopt;
    if (s.succ[a.tail] != kNoVertex || s.forced_pred[a.head] != kNoVertex) return std::nullopt;
    s.succ[a.tail] = a.head;
    s.forced_pred[a.head] = a.tail;
    s.forced_tail[a.tail] = true;
  }
  if (!s.run()) return std::nullopt;
  BranchingPair p{s.out_branching(), Branching{Orientation::In, v, s.succ}};
  p.in.link[v] = kNoVertex;
  return p;
}

}  // namespace goodpair
