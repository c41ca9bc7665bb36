#include "goodpair/composition_engine.hpp"

#include <algorithm>
#include <set>

#include "goodpair/connectivity.hpp"

namespace goodpair {

namespace {

void check_quotient(const Composition& c) {
  c.validate();
  if (c.part_count() < 2) throw PreconditionError("composition quotient needs at least two vertices");
  if (!is_semicomplete(c.quotient) || !is_strong(c.quotient))
    throw PreconditionError("composition quotient must be strong semicomplete");
}

void check_roots(const Composition& c, Vertex u, Vertex v) {
  if (u < 0 || v < 0 || u >= c.order() || v >= c.order()) throw PreconditionError("root out of range");
}

void check_pair(const Digraph& q, const BranchingPair& p, Vertex u, Vertex v, const char* where) {
  Check ch = verify_good_pair(q, p, u, v);
  if (!ch.ok) throw InternalInconsistency(std::string(where) + " produced an invalid pair: " + ch.detail);
}

}  // namespace

BackwardEvidence backward_evidence(const Composition& c, const Digraph& q, const Arc& a) {
  BackwardEvidence e;
  e.arc = a;
  std::vector<Vertex> hx = c.part_vertices(a.tail), hy = c.part_vertices(a.head);
  e.tail_part_size = static_cast<int>(hx.size());
  e.head_part_size = static_cast<int>(hy.size());
  e.tail_all_out_degree_one = std::all_of(hx.begin(), hx.end(), [&](Vertex w) { return q.out_degree(w) == 1; });
  e.head_all_in_degree_one = std::all_of(hy.begin(), hy.end(), [&](Vertex w) { return q.in_degree(w) == 1; });
  e.blocking = (e.tail_part_size < 2 || e.tail_all_out_degree_one) && (e.head_part_size < 2 || e.head_all_in_degree_one);
  return e;
}

std::string describe(const CompVerdict& v) {
  switch (v.outcome) {
    case CompOutcome::GoodPair:
      return "good pair (" + v.route + ")";
    case CompOutcome::DegreeObstruction:
      return "root degree below two";
    case CompOutcome::KnownException:
      return "exception family (" + to_string(v.exception->family) + ")" + (v.exception->reversed ? " on the converse" : "");
    case CompOutcome::TypeACondition:
      return "kind A quotient, every backward arc blocking";
    case CompOutcome::TypeBCondition:
      return "kind B quotient with a blocking backward arc";
  }
  return "";
}

BranchingPair lift_quotient_pair(const Composition& c, Vertex u, Vertex v, const BranchingPair& sp) {
  check_quotient(c);
  check_roots(c, u, v);
  CanonicalRoots roots = canonical_roots(c, u, v);
  if (roots.same_part) throw PreconditionError("lift needs u = v or roots in different parts");
  const Digraph& s = c.quotient;
  if (!verify_good_pair(s, sp, roots.u_s, roots.v_s).ok) throw PreconditionError("quotient pair is not a good pair");
  const int n = c.order();
  std::vector<Vertex> rep = representatives(c, {u, v});
  BranchingPair r{Branching{Orientation::Out, u, std::vector<Vertex>(n, kNoVertex)},
                  Branching{Orientation::In, v, std::vector<Vertex>(n, kNoVertex)}};
  for (int p = 0; p < c.part_count(); ++p) {
    for (Vertex x : c.part_vertices(p)) {
      if (p != roots.u_s) r.out.link[x] = rep[sp.out.link[p]];
      if (p != roots.v_s) r.in.link[x] = rep[sp.in.link[p]];
    }
  }
  Vertex u_in = rep[s.in_neighbors(roots.u_s).front()];
  Vertex v_out = rep[s.out_neighbors(roots.v_s).front()];
  for (Vertex x : c.part_vertices(roots.u_s))
    if (x != u) r.out.link[x] = u_in;
  for (Vertex x : c.part_vertices(roots.v_s))
    if (x != v) r.in.link[x] = v_out;
  return r;
}

namespace {

// Subtree of an in-branching hanging below `top` (vertices whose path passes through it).
std::vector<bool> in_subtree(const Branching& in, Vertex top) {
  const int n = static_cast<int>(in.link.size());
  std::vector<bool> r(n, false);
  for (Vertex w = 0; w < n; ++w) {
    for (Vertex x = w; x != kNoVertex; x = in.link[x])
      if (x == top) {
        r[w] = true;
        break;
      }
  }
  return r;
}

Composition drop_vertex(const Composition& c, Vertex x, std::vector<Vertex>& to_original) {
  Composition r = c;
  int p = c.part_of(x);
  std::vector<Vertex> keep;
  for (Vertex w : c.part_vertices(p))
    if (w != x) keep.push_back(w - c.offset(p));
  r.parts[p] = c.parts[p].induced(keep);
  to_original.clear();
  for (Vertex w = 0; w < c.order(); ++w)
    if (w != x) to_original.push_back(w);
  return r;
}

}  // namespace

BranchingPair same_part_pair_with_quotient_pair(const Composition& c, Vertex u, Vertex v) {
  check_quotient(c);
  check_roots(c, u, v);
  CanonicalRoots roots = canonical_roots(c, u, v);
  if (!roots.same_part) throw PreconditionError("roots must be distinct vertices of one part");
  const Digraph q = c.flatten();
  if (q.out_degree(u) < 2 || q.in_degree(v) < 2) throw PreconditionError("root degree below two");
  ScVerdict sv = decide_semicomplete(c.quotient, roots.u_s, roots.u_s);
  if (!sv.yes) throw PreconditionError("quotient has no good pair for the common part");

  std::vector<Vertex> keep;
  Composition cv = drop_vertex(c, v, keep);
  Vertex u_local = static_cast<Vertex>(std::find(keep.begin(), keep.end(), u) - keep.begin());
  BranchingPair base = lift_from_induced(lift_quotient_pair(cv, u_local, u_local, *sv.pair), keep, q.order());
  base.out.root = u;
  base.in.root = u;
  const int n = q.order();

  if (q.has_arc(u, v)) {
    BranchingPair r = base;
    r.out.link[v] = base.out.link[u] == kNoVertex ? q.in_neighbors(v).front() : base.out.link[u];
    for (Vertex w : q.in_neighbors(v))
      if (c.part_of(w) != roots.u_s) {
        r.out.link[v] = w;
        break;
      }
    r.in.root = v;
    r.in.link[u] = v;
    r.in.link[v] = kNoVertex;
    check_pair(q, r, u, v, "same-part splice");
    return r;
  }

  // Reroute one branch of the in-branching into v and send u into that branch.
  for (Vertex v1 = 0; v1 < n; ++v1) {
    if (v1 == v || base.in.link[v1] != u || !q.has_arc(v1, v)) continue;
    std::vector<bool> below = in_subtree(base.in, v1);
    for (Vertex u2 : q.out_neighbors(u)) {
      if (u2 == v || !below[u2]) continue;
      for (Vertex vr : q.in_neighbors(v)) {
        BranchingPair r = base;
        r.in.root = v;
        r.in.link[v] = kNoVertex;
        r.in.link[v1] = v;
        r.in.link[u] = u2;
        r.out.link[v] = vr;
        if (r.out.link[u2] == u) r.out.link[u2] = v;
        if (verify_good_pair(q, r, u, v).ok) return r;
      }
    }
  }
  if (auto r = core_construct(c, u, v, {})) {
    check_pair(q, *r, u, v, "same-part core search");
    return *r;
  }
  throw InternalInconsistency("same-part construction failed although the quotient has a good pair");
}

std::optional<BranchingPair> core_construct(const Composition& c, Vertex u, Vertex v, std::vector<Vertex> seed) {
  const Digraph q = c.flatten();
  const int n = q.order();
  std::vector<bool> in_core(n, false);
  for (Vertex r : representatives(c, {u, v})) in_core[r] = true;
  in_core[u] = in_core[v] = true;
  for (Vertex x : seed) in_core[x] = true;
  for (;;) {
    std::vector<Vertex> core = from_mask(in_core), rest;
    for (Vertex w = 0; w < n; ++w)
      if (!in_core[w]) rest.push_back(w);
    bool extendable = true;
    for (Vertex x : rest) {
      auto ins = q.in_neighbors(x), outs = q.out_neighbors(x);
      bool has_in = std::any_of(ins.begin(), ins.end(), [&](Vertex w) { return in_core[w]; });
      bool has_out = std::any_of(outs.begin(), outs.end(), [&](Vertex w) { return in_core[w]; });
      if (!has_in || !has_out) extendable = false;
    }
    if (extendable) {
      Digraph h = q.induced(core);
      Vertex hu = static_cast<Vertex>(std::find(core.begin(), core.end(), u) - core.begin());
      Vertex hv = static_cast<Vertex>(std::find(core.begin(), core.end(), v) - core.begin());
      if (auto p = search_good_pair(h, hu, hv)) return extend_pair(q, rest, *p);
    }
    if (rest.empty()) return std::nullopt;
    in_core[rest.front()] = true;
  }
}

std::optional<BranchingPair> two_arc_strong_pair(const Composition& c, Vertex u, Vertex v) {
  check_quotient(c);
  check_roots(c, u, v);
  const Digraph q = c.flatten();
  if (!is_k_arc_strong(q, 2).ok) throw PreconditionError("composition is not 2-arc-strong");
  if (auto m = match_exception_family(q, u, v); m && m->family == ExceptionFamily::A) return std::nullopt;
  auto p = core_construct(c, u, v, {});
  if (!p) throw InternalInconsistency("2-arc-strong composition without a good pair");
  check_pair(q, *p, u, v, "2-arc-strong construction");
  return p;
}

namespace {

// Up to two vertices per part of a quotient arc: the best-degree one first.
std::vector<Vertex> arc_part_seed(const Composition& c, const Digraph& q, const Arc& a) {
  std::vector<Vertex> r;
  auto take = [&](int part, bool out) {
    std::vector<Vertex> vs = c.part_vertices(part);
    std::stable_sort(vs.begin(), vs.end(), [&](Vertex x, Vertex y) {
      return out ? q.out_degree(x) > q.out_degree(y) : q.in_degree(x) > q.in_degree(y);
    });
    for (std::size_t i = 0; i < vs.size() && i < 2; ++i) r.push_back(vs[i]);
  };
  take(a.tail, true);
  take(a.head, false);
  return r;
}

}  // namespace

std::optional<BranchingPair> same_part_type_a_pair(const Composition& c, Vertex u, Vertex v) {
  check_quotient(c);
  check_roots(c, u, v);
  CanonicalRoots roots = canonical_roots(c, u, v);
  if (roots.u_s != roots.v_s) throw PreconditionError("roots must lie in one part");
  auto st = single_root_structure(c.quotient, roots.u_s);
  if (!st) throw PreconditionError("quotient has a good pair for the common part");
  const Digraph q = c.flatten();
  if (backward_evidence(c, q, st->bridge).blocking) return std::nullopt;
  auto p = core_construct(c, u, v, arc_part_seed(c, q, st->bridge));
  if (!p) throw InternalInconsistency("same-part construction failed with a non-blocking backward arc");
  check_pair(q, *p, u, v, "same-part construction");
  return p;
}

std::optional<BranchingPair> share_one_arc_case(const Composition& c, Vertex u, Vertex v, const Arc& xy) {
  check_quotient(c);
  check_roots(c, u, v);
  const Digraph q = c.flatten();
  if (match_exception_family(q, u, v)) return std::nullopt;
  auto p = core_construct(c, u, v, arc_part_seed(c, q, xy));
  if (!p) throw InternalInconsistency("single shared arc construction failed");
  check_pair(q, *p, u, v, "single shared arc construction");
  return p;
}

BranchingPair type_b_master_construction(const Composition& c, Vertex u, Vertex v, const LayerWitness& w) {
  check_quotient(c);
  check_roots(c, u, v);
  if (w.kind != LayerKind::B) throw PreconditionError("witness must be of kind B");
  const Digraph q = c.flatten();
  std::vector<Vertex> seed;
  for (const Arc& a : w.backward) {
    if (backward_evidence(c, q, a).blocking) throw PreconditionError("a backward arc is blocking");
    for (Vertex x : arc_part_seed(c, q, a)) seed.push_back(x);
  }
  auto p = core_construct(c, u, v, seed);
  if (!p) throw InternalInconsistency("kind B construction failed");
  check_pair(q, *p, u, v, "kind B construction");
  return *p;
}

Reduction neighborhood_reduction(const Composition& c, Vertex u, Vertex v) {
  check_quotient(c);
  check_roots(c, u, v);
  const Digraph q = c.flatten();
  std::vector<bool> keep(q.order(), false);
  keep[u] = keep[v] = true;
  for (Vertex r : {u, v}) {
    for (Vertex w : q.out_neighbors(r)) keep[w] = true;
    for (Vertex w : q.in_neighbors(r)) keep[w] = true;
  }
  Reduction red;
  std::vector<Digraph> parts;
  std::vector<int> kept_parts;
  for (int p = 0; p < c.part_count(); ++p) {
    std::vector<Vertex> local;
    for (Vertex x : c.part_vertices(p))
      if (keep[x]) local.push_back(x - c.offset(p));
    if (local.empty()) continue;
    kept_parts.push_back(p);
    parts.push_back(c.parts[p].induced(local));
    for (Vertex l : local) red.to_original.push_back(c.offset(p) + l);
  }
  red.composition.quotient = c.quotient.induced(kept_parts);
  red.composition.parts = std::move(parts);
  red.u = static_cast<Vertex>(std::find(red.to_original.begin(), red.to_original.end(), u) - red.to_original.begin());
  red.v = static_cast<Vertex>(std::find(red.to_original.begin(), red.to_original.end(), v) - red.to_original.begin());
  return red;
}

CompVerdict decide_composition(const Composition& c, Vertex u, Vertex v) {
  check_quotient(c);
  check_roots(c, u, v);
  const Digraph q = c.flatten();
  CompVerdict r;
  if (u != v && (q.out_degree(u) < 2 || q.in_degree(v) < 2)) {
    r.outcome = CompOutcome::DegreeObstruction;
    return r;
  }
  if (auto m = match_exception_family(q, u, v)) {
    r.outcome = CompOutcome::KnownException;
    r.exception = m;
    return r;
  }
  auto finish = [&](std::optional<BranchingPair> p, const char* route) {
    if (!p) throw InternalInconsistency(std::string(route) + ": no pair although no obstruction applies");
    check_pair(q, *p, u, v, route);
    r.pair = p;
    r.route = route;
    return r;
  };
  if (is_k_arc_strong(q, 2).ok) return finish(two_arc_strong_pair(c, u, v), "2-arc-strong");

  CanonicalRoots roots = canonical_roots(c, u, v);
  const bool same = roots.same_part;
  ScVerdict sv = decide_semicomplete(c.quotient, roots.u_s, roots.v_s);
  if (sv.yes) {
    if (same) return finish(same_part_pair_with_quotient_pair(c, u, v), "quotient pair, same part");
    return finish(lift_quotient_pair(c, u, v, *sv.pair), "quotient pair lifted");
  }
  if (sv.reason == ScReason::SmallException) return finish(core_construct(c, u, v, {}), "small quotient exception");

  std::optional<LayerWitness> w = sv.witness;
  if (!w) w = detect_type_ab(c.quotient, roots.u_s, roots.v_s);
  if (!w) throw InternalInconsistency("quotient has no good pair but no layered witness was found");
  r.witness = w;
  for (const Arc& a : w->backward) r.evidence.push_back(backward_evidence(c, q, a));
  auto blocking = [](const BackwardEvidence& e) { return e.blocking; };
  if (w->kind == LayerKind::A) {
    if (std::all_of(r.evidence.begin(), r.evidence.end(), blocking)) {
      r.outcome = CompOutcome::TypeACondition;
      return r;
    }
    std::vector<Vertex> seed;
    for (const auto& e : r.evidence)
      if (!e.blocking)
        for (Vertex x : arc_part_seed(c, q, e.arc)) seed.push_back(x);
    if (roots.u_s == roots.v_s) return finish(same_part_type_a_pair(c, u, v), "kind A, same part");
    const Arc open = std::find_if_not(r.evidence.begin(), r.evidence.end(), blocking)->arc;
    if (w->parameter() == 1) return finish(share_one_arc_case(c, u, v, open), "kind A, single backward arc");
    return finish(core_construct(c, u, v, seed), "kind A, open backward arc");
  }
  if (std::any_of(r.evidence.begin(), r.evidence.end(), blocking)) {
    r.outcome = CompOutcome::TypeBCondition;
    return r;
  }
  if (w->parameter() == 1) return finish(share_one_arc_case(c, u, v, w->backward.front()), "kind B, single backward arc");
  return finish(type_b_master_construction(c, u, v, *w), "kind B");
}

}  // namespace goodpair
