#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "goodpair/digraph.hpp"

namespace goodpair {

inline constexpr int kDefaultMatchBound = 8;

// Finds an isomorphism from `pattern` onto `g` extending `pinned`
// (pairs pattern-vertex -> g-vertex). Result maps pattern vertices to g vertices.
std::optional<std::vector<Vertex>> small_digraph_match(const Digraph& g, const Digraph& pattern,
                                                       const std::vector<std::pair<Vertex, Vertex>>& pinned,
                                                       int bound = kDefaultMatchBound);

// Lexicographically smallest adjacency string over all relabelings that keep
// the listed vertices fixed in front (in the given order). Exponential; small n only.
std::vector<bool> canonical_code(const Digraph& g, const std::vector<Vertex>& fixed = {});

Digraph relabel(const Digraph& g, const std::vector<Vertex>& new_label);

}  // namespace goodpair
