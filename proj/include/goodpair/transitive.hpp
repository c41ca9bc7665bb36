#pragma once

#include <optional>
#include <string>
#include <vector>

#include "goodpair/branching.hpp"
#include "goodpair/composition.hpp"
#include "goodpair/composition_engine.hpp"

namespace goodpair {

enum class TransOutcome { GoodPair, RootComponent, Degree, TT3Middle, C2Degree, TreeSide };

std::string to_string(TransOutcome o);

struct TransVerdict {
  TransOutcome outcome = TransOutcome::GoodPair;
  std::optional<BranchingPair> pair;
  // TT3Middle: the middle set. C2Degree: the vertex joined both ways to all others.
  // TreeSide: the vertices of the tree side.
  std::vector<Vertex> pattern;
  bool reversed = false;  // tree side matched as P_2[u, T_v]
  std::string route;

  bool yes() const { return outcome == TransOutcome::GoodPair; }
};

std::string describe(const TransVerdict& v);

// Flat structural tests.
bool is_tt3_middle(const Digraph& q, Vertex u, Vertex v);
std::optional<Vertex> c2_hub(const Digraph& q, Vertex u, Vertex v);
// P_2[T_u, v] (reversed = false) or P_2[u, T_v] (reversed = true).
std::optional<bool> tree_side(const Digraph& q, Vertex u, Vertex v);

// A non-strong semicomplete quotient becomes a transitive tournament over its
// strong components; the map goes from the new flattened numbering to the old one.
struct TransitiveForm {
  Composition composition;
  std::vector<Vertex> to_original;
  std::vector<Vertex> to_flat;
};

TransitiveForm transitive_form(const Composition& c);

TransVerdict decide_transitive_composition(const Composition& c, Vertex u, Vertex v);

enum class QtRoute { Trivial, RootComponent, Degree, Strong, NonStrong };

struct QtVerdict {
  bool yes = false;
  QtRoute route = QtRoute::Trivial;
  std::optional<BranchingPair> pair;  // in the input numbering
  std::optional<CompVerdict> composition;
  std::optional<TransVerdict> transitive;
  std::vector<std::vector<Vertex>> parts;  // top-level blocks of the decomposition
};

std::string describe(const QtVerdict& v);

QtVerdict decide_quasi_transitive(const Digraph& g, Vertex u, Vertex v);

}  // namespace goodpair
