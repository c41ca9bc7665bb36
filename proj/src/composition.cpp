#include "goodpair/composition.hpp"

#include <algorithm>
#include <numeric>

#include "goodpair/connectivity.hpp"
#include "goodpair/isomorphism.hpp"

namespace goodpair {

void Composition::validate() const {
  if (quotient.order() == 0) throw PreconditionError("composition needs a nonempty quotient");
  if (static_cast<int>(parts.size()) != quotient.order())
    throw PreconditionError("composition needs one part per quotient vertex");
  for (const Digraph& h : parts)
    if (h.order() == 0) throw PreconditionError("composition parts must be nonempty");
}

int Composition::order() const {
  int n = 0;
  for (const Digraph& h : parts) n += h.order();
  return n;
}

int Composition::offset(int part) const {
  int o = 0;
  for (int i = 0; i < part; ++i) o += parts[i].order();
  return o;
}

int Composition::part_of(Vertex x) const {
  for (int i = 0; i < part_count(); ++i) {
    if (x < parts[i].order()) return i;
    x -= parts[i].order();
  }
  throw PreconditionError("vertex " + std::to_string(x) + " not in composition");
}

std::vector<Vertex> Composition::part_vertices(int part) const {
  std::vector<Vertex> r(parts[part].order());
  std::iota(r.begin(), r.end(), offset(part));
  return r;
}

Digraph Composition::flatten() const {
  validate();
  Digraph g(order());
  std::vector<int> off(part_count());
  for (int i = 0, o = 0; i < part_count(); o += parts[i].order(), ++i) off[i] = o;
  for (int i = 0; i < part_count(); ++i)
    for (const Arc& a : parts[i].arcs()) g.add_arc(off[i] + a.tail, off[i] + a.head);
  for (const Arc& q : quotient.arcs())
    for (Vertex x = 0; x < parts[q.tail].order(); ++x)
      for (Vertex y = 0; y < parts[q.head].order(); ++y) g.add_arc(off[q.tail] + x, off[q.head] + y);
  return g;
}

std::vector<Vertex> representatives(const Composition& c, const std::vector<Vertex>& pinned) {
  std::vector<Vertex> r(c.part_count(), kNoVertex);
  for (Vertex p : pinned) {
    int i = c.part_of(p);
    if (r[i] == kNoVertex) r[i] = p;
  }
  for (int i = 0; i < c.part_count(); ++i)
    if (r[i] == kNoVertex) r[i] = c.offset(i);
  return r;
}

CanonicalRoots canonical_roots(const Composition& c, Vertex u, Vertex v) {
  CanonicalRoots r{c.part_of(u), c.part_of(v), false};
  r.same_part = r.u_s == r.v_s && u != v;
  return r;
}

bool is_quasi_transitive(const Digraph& g) {
  for (const Arc& a : g.arcs())
    for (Vertex z : g.out_neighbors(a.head))
      if (z != a.tail && !g.adjacent(a.tail, z)) return false;
  return true;
}

bool is_transitive(const Digraph& g) {
  for (const Arc& a : g.arcs())
    for (Vertex z : g.out_neighbors(a.head))
      if (z != a.tail && !g.has_arc(a.tail, z)) return false;
  return true;
}

bool is_module(const Digraph& g, const std::vector<Vertex>& set) {
  std::vector<bool> inside = to_mask(g.order(), set);
  for (Vertex w = 0; w < g.order(); ++w) {
    if (inside[w]) continue;
    for (Vertex x : set) {
      if (g.has_arc(w, x) != g.has_arc(w, set.front())) return false;
      if (g.has_arc(x, w) != g.has_arc(set.front(), w)) return false;
    }
  }
  return true;
}

Recognition recognize(const Digraph& g) {
  return {is_semicomplete(g), is_tournament(g), is_strong(g), is_quasi_transitive(g), is_transitive(g)};
}

PartitionedComposition composition_from_partition(const Digraph& g, const std::vector<std::vector<Vertex>>& blocks) {
  const int k = static_cast<int>(blocks.size());
  PartitionedComposition r;
  r.to_flat.assign(g.order(), kNoVertex);
  std::vector<int> block_of(g.order(), -1);
  for (int i = 0; i < k; ++i) {
    if (blocks[i].empty()) throw PreconditionError("empty block");
    if (!is_module(g, blocks[i])) throw PreconditionError("block " + std::to_string(i) + " is not a module");
    for (Vertex x : blocks[i]) {
      if (block_of[x] != -1) throw PreconditionError("blocks overlap");
      block_of[x] = i;
      r.to_flat[x] = static_cast<Vertex>(r.to_original.size());
      r.to_original.push_back(x);
    }
    r.composition.parts.push_back(g.induced(blocks[i]));
  }
  if (static_cast<int>(r.to_original.size()) != g.order()) throw PreconditionError("blocks do not cover the digraph");
  r.composition.quotient = Digraph(k);
  for (const Arc& a : g.arcs())
    if (block_of[a.tail] != block_of[a.head]) r.composition.quotient.add_arc(block_of[a.tail], block_of[a.head]);
  return r;
}

namespace {

std::vector<std::vector<Vertex>> complement_components(const Digraph& g) {
  const int n = g.order();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<Vertex>> r;
  for (Vertex s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    std::vector<Vertex> members{s};
    comp[s] = static_cast<int>(r.size());
    for (std::size_t i = 0; i < members.size(); ++i)
      for (Vertex y = 0; y < n; ++y)
        if (comp[y] == -1 && y != members[i] && !g.adjacent(members[i], y)) {
          comp[y] = comp[s];
          members.push_back(y);
        }
    std::sort(members.begin(), members.end());
    r.push_back(std::move(members));
  }
  return r;
}

}  // namespace

QtDecomposition qt_decompose(const Digraph& g) {
  if (!is_quasi_transitive(g)) throw PreconditionError("digraph is not quasi-transitive");
  QtDecomposition d;
  if (g.order() <= 1) {
    d.quotient = Digraph(g.order());
    if (g.order() == 1) d.children = {{0}};
    return d;
  }
  Components comps = strong_components(g);
  if (!comps.strong()) {
    d.kind = QtKind::NonStrong;
    d.children = comps.members;
  } else {
    d.kind = QtKind::Strong;
    d.children = complement_components(g);
  }
  PartitionedComposition pc = composition_from_partition(g, d.children);
  d.quotient = pc.composition.quotient;
  if (d.kind == QtKind::Strong && !is_semicomplete(d.quotient))
    throw PreconditionError("strong decomposition produced a non-semicomplete quotient");
  if (d.kind == QtKind::NonStrong && !is_transitive(d.quotient))
    throw PreconditionError("non-strong decomposition produced a non-transitive quotient");
  if (pc.composition.flatten() != relabel(g, pc.to_flat))
    throw InternalInconsistency("decomposition does not recompose");
  for (const auto& child : d.children) d.sub.push_back(qt_decompose(g.induced(child)));
  return d;
}

}  // namespace goodpair
