#pragma once

#include <optional>
#include <string>
#include <vector>

#include "goodpair/branching.hpp"
#include "goodpair/composition.hpp"
#include "goodpair/semicomplete.hpp"

namespace goodpair {

enum class ExceptionFamily { A, B, C, D, E, F, G };

std::string to_string(ExceptionFamily f);

struct ExceptionMatch {
  ExceptionFamily family = ExceptionFamily::A;
  bool reversed = false;                    // matched on the converse with the roots swapped
  std::vector<std::vector<Vertex>> blocks;  // vertex sets of the family's pattern positions
  std::string parameters;
};

// Structural membership test on the flattened digraph, for (q,u,v) and for the
// converse with roots swapped.
std::optional<ExceptionMatch> match_exception_family(const Digraph& q, Vertex u, Vertex v);
std::optional<ExceptionMatch> match_exception_family(const Composition& c, Vertex u, Vertex v);

// Evidence for one backward arc xy of the quotient.
struct BackwardEvidence {
  Arc arc;
  int tail_part_size = 0;
  int head_part_size = 0;
  bool tail_all_out_degree_one = false;
  bool head_all_in_degree_one = false;
  // Every pair of branchings that uses xy in both must share an arc between H(x) and H(y).
  bool blocking = false;
};

BackwardEvidence backward_evidence(const Composition& c, const Digraph& q, const Arc& quotient_arc);

enum class CompOutcome { GoodPair, DegreeObstruction, KnownException, TypeACondition, TypeBCondition };

struct CompVerdict {
  CompOutcome outcome = CompOutcome::GoodPair;
  std::optional<BranchingPair> pair;
  std::optional<ExceptionMatch> exception;
  std::optional<LayerWitness> witness;
  std::vector<BackwardEvidence> evidence;
  std::string route;

  bool yes() const { return outcome == CompOutcome::GoodPair; }
};

std::string describe(const CompVerdict& v);

// Good pair from a good (u_S,v_S)-pair of the quotient; uses no part-internal arcs.
BranchingPair lift_quotient_pair(const Composition& c, Vertex u, Vertex v, const BranchingPair& quotient_pair);

// u != v in the same part and the quotient has a good (u_S,u_S)-pair.
BranchingPair same_part_pair_with_quotient_pair(const Composition& c, Vertex u, Vertex v);

// Flattened digraph is 2-arc-strong. Returns nullopt exactly on exception family (a).
std::optional<BranchingPair> two_arc_strong_pair(const Composition& c, Vertex u, Vertex v);

// Roots in one part (or equal), quotient without a good (u_S,u_S)-pair: either a
// good pair or nullopt when the single backward arc is blocking.
std::optional<BranchingPair> same_part_type_a_pair(const Composition& c, Vertex u, Vertex v);

// Roots in different parts; the quotient has branchings sharing exactly `xy`.
// Returns nullopt when the instance is one of the exception families (d)-(f).
std::optional<BranchingPair> share_one_arc_case(const Composition& c, Vertex u, Vertex v, const Arc& xy);

// Kind B witness with no blocking backward arc.
BranchingPair type_b_master_construction(const Composition& c, Vertex u, Vertex v, const LayerWitness& w);

// Searches the subdigraph induced by a core containing one vertex of every part,
// growing the core until a pair appears, then extends it to all of q.
std::optional<BranchingPair> core_construct(const Composition& c, Vertex u, Vertex v, std::vector<Vertex> seed);

struct Reduction {
  Composition composition;
  std::vector<Vertex> to_original;  // reduced flattened vertex -> original flattened vertex
  Vertex u = kNoVertex;
  Vertex v = kNoVertex;
};

// Induced composition on {u,v} and the neighbours of u and v.
Reduction neighborhood_reduction(const Composition& c, Vertex u, Vertex v);

CompVerdict decide_composition(const Composition& c, Vertex u, Vertex v);

}  // namespace goodpair
