#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "goodpair/composition.hpp"
#include "goodpair/composition_engine.hpp"
#include "goodpair/semicomplete.hpp"

namespace goodpair {

// A generated input. Roots are flattened vertices; without roots every ordered
// pair is meant. Random generators are deterministic in `seed`.
struct Instance {
  std::string tag;
  std::uint64_t seed = 0;
  Composition composition;
  std::optional<Vertex> u;
  std::optional<Vertex> v;
  std::optional<LayerWitness> witness;  // layered generators: witness on the quotient
};

// Semicomplete digraphs of order n up to isomorphism (n <= 5).
std::vector<Digraph> semicomplete_digraphs(int n, bool tournaments_only = false, bool strong_only = false);

// Members of one exception family with at most max_order vertices, parameters
// swept over t in {1,2,3} and up to three arcs inside the free parts.
std::vector<Instance> exception_family_members(ExceptionFamily f, int max_order);
// TT_3[u, independent middle of n-2 vertices, v], optionally with the arc vu.
Instance independent_middle_member(int n, bool with_vu);

Digraph random_strong_semicomplete(std::uint64_t seed, int n, double two_cycle_probability = 0.3);
Digraph random_two_arc_strong_semicomplete(std::uint64_t seed, int n);

struct RandomCompositionSpec {
  int min_quotient = 2;
  int max_quotient = 4;
  int min_part = 1;
  int max_part = 2;
  int max_order = 8;
  double part_arc_probability = 0.4;
  double independent_probability = 0.0;  // chance that a part gets no arcs at all
};

Instance random_composition(std::uint64_t seed, const RandomCompositionSpec& spec = {});
// Flattened digraph 2-arc-strong.
Instance random_two_arc_strong_composition(std::uint64_t seed, int max_order);

// Strong semicomplete digraph with a planted kind A (alpha) or kind B (beta)
// witness for roots a (= u) and b (= v). Layers get 1..max_layer vertices.
Instance layered_instance(std::uint64_t seed, LayerKind kind, int parameter, int max_layer = 2);

// The kind A, alpha = 2 family with singleton outer layers whose x_1 and y_3
// parts are doubled. Members have no good pair, yet every vertex has a branching
// arc-disjoint from a path to or from it, so those path conditions alone do not
// decide the problem. Member index selects inner layer sizes and orientations.
int path_separation_member_count();
Instance path_separation_member(int index);

// Random quasi-transitive digraph of order n, built recursively from strong
// semicomplete and transitive acyclic quotients.
Digraph random_quasi_transitive(std::uint64_t seed, int n);

// All quasi-transitive digraphs on n labelled vertices (n <= 4).
std::vector<Digraph> quasi_transitive_digraphs(int n);

}  // namespace goodpair
