#pragma once

#include <optional>
#include <vector>

#include "goodpair/branching.hpp"
#include "goodpair/digraph.hpp"

namespace goodpair {

struct OracleLimits {
  int max_order = 9;
  long budget = 200'000'000;
};

struct OracleResult {
  bool has_pair = false;
  std::optional<BranchingPair> pair;
  long nodes = 0;
};

// Exhaustive reference: enumerates out-branchings rooted at u and looks for an
// in-branching rooted at v in what is left. Throws ResourceExceeded past the limits.
OracleResult oracle_good_pair(const Digraph& g, Vertex u, Vertex v, const OracleLimits& limits = {});

// Same enumeration, but the two branchings may share arcs from `shareable`.
// The returned pair then need not be good.
OracleResult oracle_pair_sharing_only(const Digraph& g, Vertex u, Vertex v, const std::vector<Arc>& shareable,
                                      const OracleLimits& limits = {});

}  // namespace goodpair
