#pragma once

#include <optional>
#include <string>
#include <vector>

#include "goodpair/connectivity.hpp"
#include "goodpair/digraph.hpp"

namespace goodpair {

enum class Orientation { Out, In };

// Out-branching: link[w] is the tail of the arc entering w.
// In-branching: link[w] is the head of the arc leaving w.
// The root has link kNoVertex.
struct Branching {
  Orientation orientation = Orientation::Out;
  Vertex root = kNoVertex;
  std::vector<Vertex> link;

  std::vector<Arc> arcs() const;
  bool contains(const Arc& a) const;
  static Branching from_arcs(Orientation o, Vertex root, int n, const std::vector<Arc>& arcs);
};

struct BranchingPair {
  Branching out;
  Branching in;

  std::vector<Arc> shared_arcs() const;
};

enum class Defect { None, WrongOrientation, WrongRoot, WrongOrder, MissingArc, Cycle, SharedArc };

struct Check {
  bool ok = true;
  Defect defect = Defect::None;
  std::string detail;
  std::optional<Arc> arc;
  std::optional<Vertex> vertex;
};

Check verify_branching(const Digraph& g, const Branching& b, Orientation o, Vertex root);
Check verify_good_pair(const Digraph& g, const BranchingPair& p, Vertex u, Vertex v);

// Breadth-first branching, lowest vertex id first.
std::optional<Branching> find_branching(const Digraph& g, Vertex root, Orientation o);

// A vertex set avoiding the root with fewer than k entering arcs.
struct DeficientSet {
  std::vector<Vertex> vertices;
  std::vector<Arc> entering;
};

struct EdmondsResult {
  std::vector<Branching> branchings;
  std::optional<DeficientSet> violation;
};

EdmondsResult edmonds_branchings(const Digraph& g, Vertex root, int k);

struct BranchingWithPath {
  Branching branching;
  std::vector<Vertex> path;
};

inline constexpr long kDefaultSearchBudget = 2'000'000;

// Out-branching rooted at `root` together with an arc-disjoint (from,to)-path.
std::optional<BranchingWithPath> branching_with_disjoint_path(const Digraph& g, Vertex root, Vertex from, Vertex to,
                                                              long budget = kDefaultSearchBudget);
// The case from == root.
std::optional<BranchingWithPath> branching_avoiding_path(const Digraph& g, Vertex y, Vertex b,
                                                         long budget = kDefaultSearchBudget);

// `core` lives on g minus `removed` (vertices renumbered in increasing order);
// every removed vertex needs an in- and an out-neighbour outside `removed`.
BranchingPair extend_pair(const Digraph& g, const std::vector<Vertex>& removed, const BranchingPair& core);

// Maps a pair on g.induced(keep) back to g's numbering (only defined on keep).
BranchingPair lift_from_induced(const BranchingPair& p, const std::vector<Vertex>& keep, int n);

BranchingPair converse_pair(const BranchingPair& p);

struct PairSearchOptions {
  std::vector<Arc> forced_shared;  // arcs both branchings must contain; no other arc may be shared
  long budget = kDefaultSearchBudget;
};

// Backtracking over in-branchings rooted at v, pruned by residual reachability from u.
std::optional<BranchingPair> search_good_pair(const Digraph& g, Vertex u, Vertex v, const PairSearchOptions& opt = {});

}  // namespace goodpair
