#include "goodpair/semicomplete.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <tuple>

#include "goodpair/connectivity.hpp"
#include "goodpair/isomorphism.hpp"

namespace goodpair {

std::string to_string(SmallException e) {
  static const char* names[] = {"a", "b", "c", "d", "e", "f"};
  return names[static_cast<int>(e)];
}

Digraph small_exception_digraph(SmallException e) {
  switch (e) {
    case SmallException::A:
      return Digraph(2, std::vector<Arc>{{0, 1}});
    case SmallException::B:
      return Digraph(3, std::vector<Arc>{{0, 1}, {0, 2}, {1, 2}});
    case SmallException::C:
      return Digraph(3, std::vector<Arc>{{0, 1}, {0, 2}, {1, 2}, {2, 0}});
    case SmallException::D:
      return Digraph(4, std::vector<Arc>{{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}, {3, 0}});
    case SmallException::E:
      return Digraph(4, std::vector<Arc>{{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}, {3, 0}, {3, 1}});
    case SmallException::F:
      return Digraph(4, std::vector<Arc>{{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 0}, {2, 3}, {3, 0}});
  }
  throw PreconditionError("unknown exception id");
}

std::optional<SmallException> match_small_exception(const Digraph& s, Vertex u, Vertex v) {
  if (u == v || s.order() < 2 || s.order() > 4) return std::nullopt;
  for (SmallException e : {SmallException::A, SmallException::B, SmallException::C, SmallException::D,
                           SmallException::E, SmallException::F}) {
    Digraph p = small_exception_digraph(e);
    if (small_digraph_match(s, p, {{0, u}, {p.order() - 1, v}})) return e;
  }
  return std::nullopt;
}

bool root_component_obstruction(const Digraph& s, Vertex u, Vertex v) {
  Components c = strong_components(s);
  return !c.strong() && (!c.in_initial(u) || !c.in_terminal(v));
}

std::vector<Arc> all_arc_obstructions(const Digraph& s, Vertex u, Vertex v) {
  std::vector<Arc> r;
  if (s.order() < 2 || !is_strong(s)) return r;
  for (const Arc& e : s.arcs()) {
    Components c = strong_components(s.without_arc(e));
    if (!c.in_initial(u) && !c.in_terminal(v)) r.push_back(e);
  }
  return r;
}

std::optional<Arc> arc_obstruction(const Digraph& s, Vertex u, Vertex v) {
  if (s.order() < 2 || !is_strong(s)) return std::nullopt;
  for (const Arc& e : s.arcs()) {
    Components c = strong_components(s.without_arc(e));
    if (!c.in_initial(u) && !c.in_terminal(v)) return e;
  }
  return std::nullopt;
}

namespace {

bool in_component(const Digraph& s, const std::vector<Vertex>& layer, Vertex x, bool initial) {
  Digraph h = s.induced(layer);
  auto pos = std::find(layer.begin(), layer.end(), x) - layer.begin();
  Components c = strong_components(h);
  return initial ? c.in_initial(static_cast<Vertex>(pos)) : c.in_terminal(static_cast<Vertex>(pos));
}

}  // namespace

std::string validate_layers(const Digraph& s, Vertex a, Vertex b, const LayerWitness& w) {
  const int n = s.order();
  const int p = static_cast<int>(w.layers.size());
  std::vector<int> level(n, 0);
  for (int i = 0; i < p; ++i) {
    if (w.layers[i].empty()) return "empty layer " + std::to_string(i + 1);
    for (Vertex x : w.layers[i]) {
      if (x < 0 || x >= n || level[x] != 0) return "layers do not partition the vertices";
      level[x] = i + 1;
    }
  }
  if (std::count(level.begin(), level.end(), 0) != 0) return "layers do not cover the vertices";

  int count = 0;
  auto expected = [&](int i) -> std::pair<int, int> {
    if (w.kind == LayerKind::A) return {p + 1 - i, p - 1 - i};
    return {p + 1 - i, p - i};
  };
  if (w.kind == LayerKind::A) {
    if (p < 3 || p % 2 == 0) return "kind A needs an odd number of layers, at least 3";
    if (level[b] != 2 || level[a] != p - 1) return "roots are not in the second and second-to-last layers";
    count = p - 2;
  } else {
    if (p < 2) return "kind B needs at least 2 layers";
    if (level[b] != 1 || level[a] != p) return "roots are not in the first and last layers";
    count = p - 1;
  }
  if (static_cast<int>(w.backward.size()) != count) return "wrong number of backward arcs";
  for (int i = 1; i <= count; ++i) {
    const Arc& e = w.backward[i - 1];
    if (!s.has_arc(e)) return "backward arc " + to_string(e) + " is not an arc";
    auto [from, to] = expected(i);
    if (level[e.tail] != from || level[e.head] != to) return "backward arc " + to_string(e) + " joins the wrong layers";
  }
  std::vector<Arc> sorted = w.backward;
  std::sort(sorted.begin(), sorted.end());
  for (const Arc& e : s.arcs())
    if (level[e.tail] > level[e.head] && !std::binary_search(sorted.begin(), sorted.end(), e))
      return "unexpected backward arc " + to_string(e);

  if (w.kind == LayerKind::A) {
    for (const Arc& e : w.backward) {
      if (!in_component(s, w.layers[level[e.tail] - 1], e.tail, false))
        return "tail of " + to_string(e) + " is not in the terminal component of its layer";
      if (!in_component(s, w.layers[level[e.head] - 1], e.head, true))
        return "head of " + to_string(e) + " is not in the initial component of its layer";
    }
    return {};
  }
  if (!in_component(s, w.layers[p - 1], w.backward.front().tail, false))
    return "first backward tail is not in the terminal component of the top layer";
  if (!in_component(s, w.layers[0], w.backward.back().head, true))
    return "last backward head is not in the initial component of the bottom layer";
  for (int i = 2; i <= count; ++i) {
    Vertex y = w.backward[i - 2].head, x = w.backward[i - 1].tail;
    if (y == x) continue;
    const auto& layer = w.layers[level[x] - 1];
    Digraph h = s.induced(layer);
    auto iy = std::find(layer.begin(), layer.end(), y) - layer.begin();
    auto ix = std::find(layer.begin(), layer.end(), x) - layer.begin();
    if (local_arc_connectivity(h, static_cast<Vertex>(iy), static_cast<Vertex>(ix), 2).value < 2)
      return "layer " + std::to_string(level[x]) + " lacks two arc-disjoint paths between consecutive backward arcs";
  }
  return {};
}

namespace {

using Mask = std::uint64_t;

Mask bit(Vertex x) { return Mask{1} << x; }

// Kind A with at least five layers, built bottom-up from prefix sets whose
// entering arcs are exactly the backward arcs crossing that boundary.
struct LayerSearch {
  const Digraph& s;
  Vertex a, b;
  int n;
  Mask all;
  std::vector<Arc> arcs;
  std::set<std::tuple<Mask, int, int, int>> dead;
  std::vector<Mask> prefixes;      // P_1, P_2, ...
  std::vector<int> back;           // arc index with target layer j, j = 1, 2, ...
  std::optional<LayerWitness> found;

  std::vector<int> entering(Mask p) const {
    std::vector<int> r;
    for (int i = 0; i < static_cast<int>(arcs.size()); ++i)
      if (!(p & bit(arcs[i].tail)) && (p & bit(arcs[i].head))) r.push_back(i);
    return r;
  }

  // Proper vertex sets strictly containing `base` that no arc of s minus `drop`
  // enters: the down-sets of its condensation. Dropping at most two arcs leaves
  // at most two incomparable pairs of components, so there are few of them.
  std::vector<Mask> closed_supersets(Mask base, std::vector<int> drop) const {
    std::vector<Arc> gone;
    for (int i : drop) gone.push_back(arcs[i]);
    const Digraph rest = s.without_arcs(gone);
    Components c = strong_components(rest);
    const int k = c.count();
    std::vector<Mask> members(k, 0), preds(k, 0);
    for (int i = 0; i < k; ++i)
      for (Vertex x : c.members[i]) members[i] |= bit(x);
    for (const Arc& e : rest.arcs()) {
      int from = c.component_of[e.tail], to = c.component_of[e.head];
      if (from != to) preds[to] |= Mask{1} << from;
    }
    std::vector<Mask> r;
    auto walk = [&](auto&& self, int i, Mask chosen, Mask set) -> void {
      if (i == k) {
        if ((set & base) == base && set != base && set != all) r.push_back(set);
        return;
      }
      if ((preds[i] & chosen) == preds[i]) self(self, i + 1, chosen | Mask{1} << i, set | members[i]);
      if (!(members[i] & base)) self(self, i + 1, chosen, set);
    };
    walk(walk, 0, 0, 0);
    std::sort(r.begin(), r.end(), [](Mask x, Mask y) {
      return std::make_pair(std::popcount(x), x) < std::make_pair(std::popcount(y), y);
    });
    return r;
  }

  // Component conditions on the layer upper - lower for a backward head entering
  // it and a backward tail leaving it. Checked as soon as a layer is fixed so
  // that the memo in grow() depends only on its key.
  bool components_ok(Mask lower, Mask upper, Vertex head, Vertex tail) const {
    std::vector<Vertex> layer;
    for (Vertex x = 0; x < n; ++x)
      if ((upper & bit(x)) && !(lower & bit(x))) layer.push_back(x);
    if (head != kNoVertex && !in_component(s, layer, head, true)) return false;
    if (tail != kNoVertex && !in_component(s, layer, tail, false)) return false;
    return true;
  }

  bool finish(Mask top_prefix) {
    LayerWitness w;
    w.kind = LayerKind::A;
    Mask prev = 0;
    std::vector<Mask> ps = prefixes;
    ps.push_back(top_prefix);
    ps.push_back(all);
    for (Mask m : ps) {
      std::vector<Vertex> layer;
      for (Vertex x = 0; x < n; ++x)
        if ((m & bit(x)) && !(prev & bit(x))) layer.push_back(x);
      w.layers.push_back(layer);
      prev = m;
    }
    // back[j-1] targets layer j; the arc with index i targets layer p - 1 - i.
    for (auto it = back.rbegin(); it != back.rend(); ++it) w.backward.push_back(arcs[*it]);
    if (!validate_layers(s, a, b, w).empty()) return false;
    found = w;
    return true;
  }

  // prefixes holds P_1..P_j; back holds targets 1..j.
  bool grow() {
    const int j = static_cast<int>(prefixes.size());
    const Mask pj = prefixes.back();
    const int cur = back.back();
    const int prev = j >= 2 ? back[j - 2] : -1;
    auto key = std::make_tuple(pj, prev, cur, std::min(j, 3) + 4 * (j % 2));
    if (dead.count(key)) return false;
    const Vertex need_tail = prev >= 0 ? arcs[prev].tail : kNoVertex;
    auto layer_ok = [&](Mask next) {
      if (need_tail != kNoVertex && !(next & bit(need_tail))) return false;
      if (next & bit(arcs[cur].tail)) return false;
      if (j + 1 == 2 && !(next & bit(b))) return false;
      return true;
    };
    // Close the structure: P_{j+1} is the last prefix.
    if ((j + 1) % 2 == 0 && j + 1 >= 4) {
      for (Mask next : closed_supersets(pj, {cur})) {
        if (!layer_ok(next) || !(next & bit(a)) || !components_ok(pj, next, kNoVertex, need_tail)) continue;
        std::vector<int> in = entering(next);
        if (in.size() == 1 && in[0] == cur && finish(next)) return true;
      }
    }
    for (int f = 0; f < static_cast<int>(arcs.size()); ++f) {
      if (f == cur || (pj & bit(arcs[f].head))) continue;
      for (Mask next : closed_supersets(pj, {cur, f})) {
        if (!layer_ok(next) || (next & bit(a)) || !(next & bit(arcs[f].head)) || (next & bit(arcs[f].tail))) continue;
        std::vector<int> in = entering(next);
        std::sort(in.begin(), in.end());
        std::vector<int> want{std::min(cur, f), std::max(cur, f)};
        if (in != want || !components_ok(pj, next, arcs[f].head, need_tail)) continue;
        prefixes.push_back(next);
        back.push_back(f);
        if (grow()) return true;
        prefixes.pop_back();
        back.pop_back();
      }
    }
    dead.insert(key);
    return false;
  }

  std::optional<LayerWitness> run() {
    for (int e = 0; e < static_cast<int>(arcs.size()); ++e) {
      for (Mask p1 : closed_supersets(0, {e})) {
        if ((p1 & bit(a)) || (p1 & bit(b)) || !(p1 & bit(arcs[e].head)) || (p1 & bit(arcs[e].tail))) continue;
        std::vector<int> in = entering(p1);
        if (in.size() != 1 || in[0] != e || !components_ok(0, p1, arcs[e].head, kNoVertex)) continue;
        prefixes = {p1};
        back = {e};
        if (grow()) return found;
      }
    }
    return std::nullopt;
  }
};

std::optional<LayerWitness> single_arc_kind_a(const Digraph& s, Vertex a, Vertex b, const Arc& e) {
  Digraph rest = s.without_arc(e);
  if (!reachable_from(rest, a)[b]) return std::nullopt;
  Components c = strong_components(rest);
  LayerWitness w{LayerKind::A, {c.initial(), {}, c.terminal()}, {e}};
  for (int k = 1; k + 1 < c.count(); ++k) w.layers[1].insert(w.layers[1].end(), c.members[k].begin(), c.members[k].end());
  std::sort(w.layers[1].begin(), w.layers[1].end());
  if (!validate_layers(s, a, b, w).empty()) return std::nullopt;
  return w;
}

std::optional<LayerWitness> bridge_kind_b(const Digraph& s, Vertex a, Vertex b, const std::vector<Arc>& bridges) {
  if (a == b) return std::nullopt;
  const int n = s.order();
  std::vector<std::pair<std::vector<bool>, Arc>> sides;
  for (const Arc& e : bridges) sides.push_back({reaching(s.without_arc(e), b), e});
  std::sort(sides.begin(), sides.end(), [](const auto& l, const auto& r) {
    return std::count(l.first.begin(), l.first.end(), true) < std::count(r.first.begin(), r.first.end(), true);
  });
  LayerWitness w;
  w.kind = LayerKind::B;
  std::vector<bool> prev(n, false);
  for (const auto& [side, e] : sides) {
    std::vector<Vertex> layer;
    for (Vertex x = 0; x < n; ++x) {
      if (prev[x] && !side[x]) return std::nullopt;
      if (side[x] && !prev[x]) layer.push_back(x);
    }
    w.layers.push_back(layer);
    prev = side;
  }
  std::vector<Vertex> top;
  for (Vertex x = 0; x < n; ++x)
    if (!prev[x]) top.push_back(x);
  w.layers.push_back(top);
  for (auto it = sides.rbegin(); it != sides.rend(); ++it) w.backward.push_back(it->second);
  if (!validate_layers(s, a, b, w).empty()) return std::nullopt;
  return w;
}

}  // namespace

std::optional<LayerWitness> detect_type_ab(const Digraph& s, Vertex a, Vertex b) {
  const int n = s.order();
  if (n > 64) throw PreconditionError("layer detection supports at most 64 vertices");
  if (n < 2 || !is_strong(s)) return std::nullopt;
  std::vector<Arc> bridges = all_arc_obstructions(s, a, b);
  if (!bridges.empty()) {
    if (bridges.size() == 1)
      if (auto w = single_arc_kind_a(s, a, b, bridges.front())) return w;
    return bridge_kind_b(s, a, b, bridges);
  }
  if (n < 5) return std::nullopt;
  LayerSearch search{s, a, b, n, n == 64 ? ~Mask{0} : (Mask{1} << n) - 1, s.arcs(), {}, {}, {}, std::nullopt};
  return search.run();
}

std::optional<SingleRootStructure> single_root_structure(const Digraph& s, Vertex u) {
  if (s.order() < 2 || !is_strong(s)) return std::nullopt;
  SingleRootStructure r;
  for (Vertex w = 0; w < s.order(); ++w) {
    if (w == u) continue;
    bool out = s.has_arc(u, w), in = s.has_arc(w, u);
    if (out && in) r.z.push_back(w);
    else if (out) r.x.push_back(w);
    else if (in) r.y.push_back(w);
  }
  if (r.x.empty() || r.y.empty()) return std::nullopt;
  Components cx = strong_components(s.induced(r.x));
  Components cy = strong_components(s.induced(r.y));
  std::vector<Vertex> top, bottom;
  for (Vertex i : cx.terminal()) top.push_back(r.x[i]);
  for (Vertex i : cy.initial()) bottom.push_back(r.y[i]);
  std::vector<Arc> out = arcs_leaving(s, to_mask(s.order(), top));
  std::vector<Arc> in = arcs_entering(s, to_mask(s.order(), bottom));
  if (out.size() != 1 || in != out) return std::nullopt;
  std::vector<Arc> between = out;
  r.bridge = between.front();
  return r;
}

std::optional<BranchingPair> almost_good_pair(const Digraph& s, Vertex a, Vertex b, const LayerWitness& w,
                                              std::optional<Arc> chosen) {
  PairSearchOptions opt;
  if (w.kind == LayerKind::A) {
    Arc e = chosen.value_or(w.backward.front());
    if (std::find(w.backward.begin(), w.backward.end(), e) == w.backward.end())
      throw PreconditionError("chosen arc is not a backward arc");
    opt.forced_shared = {e};
  } else {
    opt.forced_shared = w.backward;
  }
  return search_good_pair(s, a, b, opt);
}

std::string describe(const ScVerdict& v) {
  if (v.yes) return "good pair exists";
  switch (v.reason) {
    case ScReason::SmallException:
      return "small exception (" + to_string(*v.exception) + ")";
    case ScReason::RootComponent:
      return "root outside initial/terminal component";
    case ScReason::ArcObstruction:
      return "arc obstruction at " + to_string(*v.arc);
    case ScReason::Layered:
      return "layered obstruction with " + std::to_string(v.witness->layers.size()) + " layers";
    case ScReason::None:
      break;
  }
  return "no good pair";
}

ScVerdict classify_semicomplete(const Digraph& s, Vertex u, Vertex v) {
  const int n = s.order();
  if (u < 0 || u >= n || v < 0 || v >= n) throw PreconditionError("root out of range");
  if (!is_semicomplete(s)) throw PreconditionError("digraph is not semicomplete");
  ScVerdict r;
  if (n == 1) {
    r.yes = true;
    return r;
  }
  if (auto e = match_small_exception(s, u, v)) {
    r.reason = ScReason::SmallException;
    r.exception = e;
    return r;
  }
  if (!is_strong(s)) {
    if (root_component_obstruction(s, u, v)) {
      r.reason = ScReason::RootComponent;
      return r;
    }
    r.yes = true;
    return r;
  }
  if (auto e = arc_obstruction(s, u, v)) {
    r.reason = ScReason::ArcObstruction;
    r.arc = e;
    return r;
  }
  if (auto w = detect_type_ab(s, u, v)) {
    r.reason = ScReason::Layered;
    r.witness = w;
    return r;
  }
  r.yes = true;
  return r;
}

ScVerdict decide_semicomplete(const Digraph& s, Vertex u, Vertex v) {
  ScVerdict r = classify_semicomplete(s, u, v);
  if (!r.yes) return r;
  if (s.order() == 1) {
    r.pair = BranchingPair{Branching{Orientation::Out, 0, {kNoVertex}}, Branching{Orientation::In, 0, {kNoVertex}}};
    return r;
  }
  r.pair = search_good_pair(s, u, v);
  if (!r.pair) throw InternalInconsistency("semicomplete instance classified YES but no pair was constructed");
  return r;
}

}  // namespace goodpair
