#include "goodpair/dispatch.hpp"

#include <algorithm>

#include "goodpair/connectivity.hpp"

namespace goodpair {

std::string to_string(InputClass c) {
  switch (c) {
    case InputClass::Auto: return "auto";
    case InputClass::Semicomplete: return "semicomplete";
    case InputClass::Composition: return "composition";
    case InputClass::Transitive: return "transitive";
    case InputClass::QuasiTransitive: return "qt";
  }
  return "";
}

std::optional<InputClass> parse_input_class(const std::string& s) {
  for (InputClass c : {InputClass::Auto, InputClass::Semicomplete, InputClass::Composition, InputClass::Transitive,
                       InputClass::QuasiTransitive})
    if (to_string(c) == s) return c;
  return std::nullopt;
}

Composition singleton_composition(const Digraph& g) {
  return Composition{g, std::vector<Digraph>(g.order(), Digraph(1))};
}

namespace {

bool all_singletons(const Composition& c) {
  return std::all_of(c.parts.begin(), c.parts.end(), [](const Digraph& h) { return h.order() == 1; });
}

Decision from_transitive(const Composition& c, Vertex u, Vertex v) {
  Decision d;
  d.engine = InputClass::Transitive;
  if (is_transitive(c.quotient) && c.part_count() >= 2) {
    d.transitive = decide_transitive_composition(c, u, v);
    if (d.transitive->pair) d.pair = d.transitive->pair;
  } else {
    TransitiveForm tf = transitive_form(c);
    if (tf.composition.part_count() < 2) throw PreconditionError("quotient is strong; use the composition engine");
    d.transitive = decide_transitive_composition(tf.composition, tf.to_flat[u], tf.to_flat[v]);
    if (d.transitive->pair) d.pair = lift_from_induced(*d.transitive->pair, tf.to_original, c.order());
    for (Vertex& x : d.transitive->pattern) x = tf.to_original[x];
  }
  d.yes = d.transitive->yes();
  d.reason = describe(*d.transitive);
  return d;
}

}  // namespace

InputClass detect_class(const Composition& c) {
  c.validate();
  if (is_semicomplete(c.quotient)) {
    if (all_singletons(c)) return InputClass::Semicomplete;
    if (c.part_count() >= 2 && is_strong(c.quotient)) return InputClass::Composition;
    if (c.part_count() >= 2) return InputClass::Transitive;
  }
  if (c.part_count() >= 2 && is_transitive(c.quotient)) return InputClass::Transitive;
  if (is_quasi_transitive(c.flatten())) return InputClass::QuasiTransitive;
  throw PreconditionError("input is not semicomplete, a semicomplete or transitive composition, or quasi-transitive");
}

Decision decide(const Composition& c, Vertex u, Vertex v, InputClass cls) {
  c.validate();
  const int n = c.order();
  if (u < 0 || v < 0 || u >= n || v >= n) throw PreconditionError("root out of range");
  if (cls == InputClass::Auto) cls = detect_class(c);
  Decision d;
  switch (cls) {
    case InputClass::Semicomplete: {
      Digraph s = c.flatten();
      if (!is_semicomplete(s)) throw PreconditionError("digraph is not semicomplete");
      d.semicomplete = decide_semicomplete(s, u, v);
      d.yes = d.semicomplete->yes;
      d.pair = d.semicomplete->pair;
      d.reason = describe(*d.semicomplete);
      break;
    }
    case InputClass::Composition:
      if (c.part_count() >= 2 && is_semicomplete(c.quotient) && !is_strong(c.quotient)) return from_transitive(c, u, v);
      d.composition = decide_composition(c, u, v);
      d.yes = d.composition->yes();
      d.pair = d.composition->pair;
      d.reason = describe(*d.composition);
      break;
    case InputClass::Transitive:
      return from_transitive(c, u, v);
    case InputClass::QuasiTransitive:
      d.quasi_transitive = decide_quasi_transitive(c.flatten(), u, v);
      d.yes = d.quasi_transitive->yes;
      d.pair = d.quasi_transitive->pair;
      d.reason = describe(*d.quasi_transitive);
      break;
    case InputClass::Auto:
      break;
  }
  d.engine = cls;
  return d;
}

}  // namespace goodpair
