#pragma once

#include <vector>

#include "goodpair/digraph.hpp"

namespace goodpair {

// S[H_1, ..., H_s]: part i replaces quotient vertex i. Flattened vertices are
// numbered part by part, keeping each part's local order.
struct Composition {
  Digraph quotient;
  std::vector<Digraph> parts;

  void validate() const;
  int order() const;
  int part_count() const { return quotient.order(); }
  int offset(int part) const;
  int part_of(Vertex x) const;
  Vertex local(Vertex x) const { return x - offset(part_of(x)); }
  Vertex vertex(int part, Vertex local) const { return offset(part) + local; }
  std::vector<Vertex> part_vertices(int part) const;
  Digraph flatten() const;
};

// One vertex per part: the pinned vertex of its part if any, else the lowest.
std::vector<Vertex> representatives(const Composition& c, const std::vector<Vertex>& pinned);

struct CanonicalRoots {
  Vertex u_s = kNoVertex;
  Vertex v_s = kNoVertex;
  bool same_part = false;  // distinct roots in one part
};

CanonicalRoots canonical_roots(const Composition& c, Vertex u, Vertex v);

bool is_quasi_transitive(const Digraph& g);
bool is_transitive(const Digraph& g);
// Every outside vertex sees the whole set the same way.
bool is_module(const Digraph& g, const std::vector<Vertex>& set);

struct Recognition {
  bool semicomplete = false;
  bool tournament = false;
  bool strong = false;
  bool quasi_transitive = false;
  bool transitive = false;
};

Recognition recognize(const Digraph& g);

// A composition built from a vertex partition of g, with the map from
// flattened vertices back to g. Throws PreconditionError if some block is not a module.
struct PartitionedComposition {
  Composition composition;
  std::vector<Vertex> to_original;
  std::vector<Vertex> to_flat;
};

PartitionedComposition composition_from_partition(const Digraph& g, const std::vector<std::vector<Vertex>>& blocks);

enum class QtKind { Trivial, Strong, NonStrong };

struct QtDecomposition {
  QtKind kind = QtKind::Trivial;
  Digraph quotient;
  std::vector<std::vector<Vertex>> children;  // vertex sets of g, in quotient order
  std::vector<QtDecomposition> sub;            // decomposition of each child (in child-local numbering)
};

QtDecomposition qt_decompose(const Digraph& g);

}  // namespace goodpair
