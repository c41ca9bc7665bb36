#pragma once

#include <optional>
#include <string>
#include <vector>

#include "goodpair/branching.hpp"
#include "goodpair/digraph.hpp"

namespace goodpair {

// The six small semicomplete digraphs without a good pair that no general
// obstruction explains. Roots are vertex 0 (u) and the last vertex (v).
enum class SmallException { A, B, C, D, E, F };

std::string to_string(SmallException e);
Digraph small_exception_digraph(SmallException e);
std::optional<SmallException> match_small_exception(const Digraph& s, Vertex u, Vertex v);

// Non-strong with u outside the initial or v outside the terminal component.
bool root_component_obstruction(const Digraph& s, Vertex u, Vertex v);
// Strong, and deleting some arc leaves u outside the initial and v outside
// the terminal component. Returns the lowest such arc.
std::optional<Arc> arc_obstruction(const Digraph& s, Vertex u, Vertex v);
std::vector<Arc> all_arc_obstructions(const Digraph& s, Vertex u, Vertex v);

enum class LayerKind { A, B };

// Ordered vertex partition V_1..V_p (index 0 holds V_1) with its backward arcs.
// Kind A: p = 2*alpha+1, b in V_2, a in V_{2 alpha}; backward arc i runs from
//   V_{2 alpha + 2 - i} to V_{2 alpha - i}.
// Kind B: p = beta+1, b in V_1, a in V_{beta+1}; backward arc i runs from
//   V_{beta + 2 - i} to V_{beta + 1 - i}.
// `backward` is listed by i = 1, 2, ...
struct LayerWitness {
  LayerKind kind = LayerKind::A;
  std::vector<std::vector<Vertex>> layers;
  std::vector<Arc> backward;

  int parameter() const {
    return kind == LayerKind::A ? static_cast<int>(layers.size() - 1) / 2 : static_cast<int>(layers.size()) - 1;
  }
};

// Empty string when the witness is valid for (s, a, b), else the first violated condition.
std::string validate_layers(const Digraph& s, Vertex a, Vertex b, const LayerWitness& w);

// Looks for a layered witness; kind A with alpha >= 2 only when no arc obstruction exists.
std::optional<LayerWitness> detect_type_ab(const Digraph& s, Vertex a, Vertex b);

// Structure around u when there is no good (u,u)-pair.
struct SingleRootStructure {
  std::vector<Vertex> x;  // out-neighbours not on a 2-cycle with u
  std::vector<Vertex> y;  // in-neighbours not on a 2-cycle with u
  std::vector<Vertex> z;  // 2-cycle partners of u
  Arc bridge;             // the unique arc from x to y
};

std::optional<SingleRootStructure> single_root_structure(const Digraph& s, Vertex u);

// Pair sharing exactly `chosen` (kind A) or exactly the backward arcs (kind B).
std::optional<BranchingPair> almost_good_pair(const Digraph& s, Vertex a, Vertex b, const LayerWitness& w,
                                              std::optional<Arc> chosen = std::nullopt);

enum class ScReason { None, SmallException, RootComponent, ArcObstruction, Layered };

struct ScVerdict {
  bool yes = false;
  std::optional<BranchingPair> pair;
  ScReason reason = ScReason::None;
  std::optional<SmallException> exception;
  std::optional<Arc> arc;
  std::optional<LayerWitness> witness;
};

std::string describe(const ScVerdict& v);

// Decides only; no pair is built for YES instances.
ScVerdict classify_semicomplete(const Digraph& s, Vertex u, Vertex v);
ScVerdict decide_semicomplete(const Digraph& s, Vertex u, Vertex v);

}  // namespace goodpair
