#pragma once

#include <optional>
#include <string>

#include "goodpair/branching.hpp"
#include "goodpair/composition.hpp"
#include "goodpair/composition_engine.hpp"
#include "goodpair/semicomplete.hpp"
#include "goodpair/transitive.hpp"

namespace goodpair {

enum class InputClass { Auto, Semicomplete, Composition, Transitive, QuasiTransitive };

std::string to_string(InputClass c);
std::optional<InputClass> parse_input_class(const std::string& s);

// Engine answer for any supported input. `pair` and the transitive pattern use
// flattened numbering; other verdict fields keep the engine's own numbering.
struct Decision {
  bool yes = false;
  InputClass engine = InputClass::Auto;
  std::string reason;
  std::optional<BranchingPair> pair;
  std::optional<ScVerdict> semicomplete;
  std::optional<CompVerdict> composition;
  std::optional<TransVerdict> transitive;
  std::optional<QtVerdict> quasi_transitive;
};

// Auto picks, in order: semicomplete (all parts single vertices), composition
// (strong semicomplete quotient), transitive (non-strong semicomplete quotient,
// regrouped by its strong components, or transitive quotient), quasi-transitive
// (flattened digraph). Throws PreconditionError when no engine accepts the input.
InputClass detect_class(const Composition& c);
Decision decide(const Composition& c, Vertex u, Vertex v, InputClass cls = InputClass::Auto);

Composition singleton_composition(const Digraph& g);

}  // namespace goodpair
