#include <gtest/gtest.h>

#include "goodpair/composition_engine.hpp"
#include "goodpair/generators.hpp"
#include "goodpair/oracle.hpp"
#include "goodpair/semicomplete.hpp"
#include "support.hpp"

using namespace goodpair;
using namespace goodpair::testing;

namespace {

Digraph independent(int n) { return Digraph(n); }
Digraph path2() { return make(2, {{0, 1}}); }

Composition converse(const Composition& c) {
  Composition r{c.quotient.converse(), {}};
  for (const Digraph& h : c.parts) r.parts.push_back(h.converse());
  return r;
}

int internal_arcs(const Composition& c, const BranchingPair& p) {
  int k = 0;
  for (const Branching* b : {&p.out, &p.in})
    for (const Arc& a : b->arcs())
      if (c.part_of(a.tail) == c.part_of(a.head)) ++k;
  return k;
}

void expect_verified(const Composition& c, const CompVerdict& d, Vertex u, Vertex v) {
  ASSERT_TRUE(d.yes());
  ASSERT_TRUE(d.pair);
  EXPECT_TRUE(verify_good_pair(c.flatten(), *d.pair, u, v).ok) << d.route;
}

}  // namespace

TEST(ExceptionMatch, CycleOfIndependentPairsWithRootsInOnePart) {
  Composition c = compose(cycle(3), {independent(2), independent(2), independent(2)});
  auto m = match_exception_family(c, 4, 5);
  ASSERT_TRUE(m);
  EXPECT_EQ(m->family, ExceptionFamily::A);
  CompVerdict d = decide_composition(c, 4, 5);
  EXPECT_EQ(d.outcome, CompOutcome::KnownException);
  EXPECT_FALSE(oracle_good_pair(c.flatten(), 4, 5).has_pair);
}

TEST(ExceptionMatch, TransitiveTripleWithReturnArc) {
  Digraph g = tt3_middle(3);
  g.add_arc(4, 0);
  auto m = match_exception_family(g, 0, 4);
  ASSERT_TRUE(m);
  EXPECT_EQ(m->family, ExceptionFamily::B);
  Instance gen = independent_middle_member(5, true);
  auto mg = match_exception_family(gen.composition, *gen.u, *gen.v);
  ASSERT_TRUE(mg);
  EXPECT_EQ(mg->family, ExceptionFamily::B);
}

TEST(ExceptionMatch, NoneWhenRootsInDifferentParts) {
  Composition c = compose(cycle(3), {independent(2), independent(2), independent(2)});
  EXPECT_FALSE(match_exception_family(c, 0, 2));
  CompVerdict d = decide_composition(c, 0, 2);
  expect_verified(c, d, 0, 2);
  EXPECT_TRUE(oracle_good_pair(c.flatten(), 0, 2).has_pair);
}

TEST(ExceptionMatch, CycleWithSingletonEnds) {
  for (bool with_arc : {false, true}) {
    Digraph h = with_arc ? path2() : independent(2);
    Composition c = compose(cycle(3), {Digraph(1), h, Digraph(1)});
    auto m = match_exception_family(c, 0, 3);
    ASSERT_TRUE(m);
    EXPECT_EQ(m->family, ExceptionFamily::C);
    EXPECT_EQ(decide_composition(c, 0, 3).outcome, CompOutcome::KnownException);
    EXPECT_FALSE(oracle_good_pair(c.flatten(), 0, 3).has_pair);
  }
}

TEST(ExceptionMatch, CycleWithDegreeOneCopies) {
  Composition c = compose(cycle(3), {independent(2), independent(2), Digraph(1)});
  auto m = match_exception_family(c, 0, 2);
  ASSERT_TRUE(m);
  EXPECT_EQ(m->family, ExceptionFamily::D);
  EXPECT_FALSE(oracle_good_pair(c.flatten(), 0, 2).has_pair);
}

TEST(ExceptionMatch, EveryGeneratedMemberMatchesItsFamily) {
  for (ExceptionFamily f : {ExceptionFamily::A, ExceptionFamily::B, ExceptionFamily::C, ExceptionFamily::D, ExceptionFamily::E,
                        ExceptionFamily::F, ExceptionFamily::G})
    for (const Instance& in : exception_family_members(f, 7)) {
      auto m = match_exception_family(in.composition, *in.u, *in.v);
      ASSERT_TRUE(m) << in.tag;
      // RT_4 members whose independent end joins v's part are also C_3 members of family (d).
      if (f == ExceptionFamily::E && m->family == ExceptionFamily::D) {
        EXPECT_EQ(m->blocks.size(), 3u);
        continue;
      }
      EXPECT_EQ(m->family, f) << in.tag;
    }
}

TEST(Lift, SingletonPartsGiveTheQuotientPair) {
  Composition c = compose(complete(3), {Digraph(1), Digraph(1), Digraph(1)});
  BranchingPair sp = *decide_semicomplete(complete(3), 0, 1).pair;
  BranchingPair p = lift_quotient_pair(c, 0, 1, sp);
  EXPECT_EQ(p.out.arcs().size(), 2u);
  EXPECT_TRUE(verify_good_pair(c.flatten(), p, 0, 1).ok);
}

TEST(Lift, UsesNoInternalArcs) {
  Composition c = compose(complete(3), {complete(2), Digraph(1), Digraph(1)});
  BranchingPair same = lift_quotient_pair(c, 0, 0, *decide_semicomplete(complete(3), 0, 0).pair);
  EXPECT_TRUE(verify_good_pair(c.flatten(), same, 0, 0).ok);
  EXPECT_EQ(internal_arcs(c, same), 0);
  BranchingPair apart = lift_quotient_pair(c, 1, 3, *decide_semicomplete(complete(3), 0, 2).pair);
  EXPECT_TRUE(verify_good_pair(c.flatten(), apart, 1, 3).ok);
  EXPECT_EQ(internal_arcs(c, apart), 0);
}

TEST(Lift, ZeroInternalArcsOnRandomCompositions) {
  RandomCompositionSpec spec;
  spec.part_arc_probability = 0.7;
  int lifted = 0;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Instance in = random_composition(seed, spec);
    const Composition& c = in.composition;
    const Digraph q = c.flatten();
    for (Vertex u = 0; u < q.order(); ++u)
      for (Vertex v = 0; v < q.order(); ++v) {
        if (u != v && c.part_of(u) == c.part_of(v)) continue;
        ScVerdict sv = decide_semicomplete(c.quotient, c.part_of(u), c.part_of(v));
        if (!sv.yes) continue;
        BranchingPair p = lift_quotient_pair(c, u, v, *sv.pair);
        ASSERT_TRUE(verify_good_pair(q, p, u, v).ok);
        EXPECT_EQ(internal_arcs(c, p), 0);
        ++lifted;
      }
  }
  EXPECT_GT(lifted, 0);
}

TEST(SamePart, TwoCycleQuotient) {
  // With a single vertex on the other side the roots have degree one.
  Composition small = compose(complete(2), {independent(2), Digraph(1)});
  EXPECT_THROW(same_part_pair_with_quotient_pair(small, 0, 1), PreconditionError);
  EXPECT_FALSE(oracle_good_pair(small.flatten(), 0, 1).has_pair);
  EXPECT_FALSE(decide_composition(small, 0, 1).yes());
  Composition c = compose(complete(2), {independent(2), independent(2)});
  BranchingPair p = same_part_pair_with_quotient_pair(c, 0, 1);
  EXPECT_TRUE(verify_good_pair(c.flatten(), p, 0, 1).ok);
  EXPECT_TRUE(oracle_good_pair(c.flatten(), 0, 1).has_pair);
}

TEST(SamePart, RejectsLowRootDegree) {
  Composition c = compose(cycle(3), {independent(2), Digraph(1), Digraph(1)});
  EXPECT_THROW(same_part_pair_with_quotient_pair(c, 0, 1), PreconditionError);
}

TEST(SamePart, KindAQuotientWithDoubledTail) {
  // Quotient u -> x -> y -> u, H(x) = {x', x} with the arc x'x.
  Composition c = compose(cycle(3), {Digraph(1), path2(), Digraph(1)});
  auto p = same_part_type_a_pair(c, 0, 0);
  ASSERT_TRUE(p);
  EXPECT_TRUE(verify_good_pair(c.flatten(), *p, 0, 0).ok);
  EXPECT_TRUE(decide_composition(c, 0, 0).yes());
}

TEST(SamePart, BlockedWhenBackwardArcPartsAreSingletons) {
  Composition c = compose(cycle(3), {Digraph(1), Digraph(1), Digraph(1)});
  EXPECT_FALSE(same_part_type_a_pair(c, 0, 0));
  EXPECT_FALSE(oracle_good_pair(c.flatten(), 0, 0).has_pair);
}

TEST(TwoArcStrong, PairUnlessExceptionA) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Instance in = random_two_arc_strong_composition(seed, 7);
    const Composition& c = in.composition;
    const int n = c.order();
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = 0; v < n; ++v) {
        auto m = match_exception_family(c, u, v);
        auto p = two_arc_strong_pair(c, u, v);
        EXPECT_EQ(p.has_value(), !(m && m->family == ExceptionFamily::A));
        if (p) EXPECT_TRUE(verify_good_pair(c.flatten(), *p, u, v).ok);
      }
  }
}

TEST(DecideComposition, KindAWithSingletonBackwardParts) {
  Digraph s = make(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}, {3, 0}});
  Composition c = compose(s, {Digraph(1), Digraph(1), Digraph(1), Digraph(1)});
  CompVerdict d = decide_composition(c, 1, 2);
  EXPECT_EQ(d.outcome, CompOutcome::TypeACondition);
  ASSERT_TRUE(d.witness);
  EXPECT_EQ(validate_layers(s, 1, 2, *d.witness), "");
}

TEST(DecideComposition, PathPartWithEqualRoots) {
  Composition c = compose(cycle(3), {independent(2), independent(2), path2()});
  for (Vertex u : {4, 5}) {
    CompVerdict d = decide_composition(c, u, u);
    EXPECT_EQ(d.yes(), oracle_good_pair(c.flatten(), u, u).has_pair);
    if (d.yes()) expect_verified(c, d, u, u);
  }
}

TEST(DecideComposition, RejectsNonStrongQuotient) {
  Composition c = compose(transitive_tournament(3), {Digraph(1), Digraph(1), Digraph(1)});
  EXPECT_THROW(decide_composition(c, 0, 2), PreconditionError);
}

TEST(DecideComposition, AgreesWithOracleOnRandomCompositions) {
  RandomCompositionSpec spec;
  spec.max_order = 7;
  spec.independent_probability = 0.3;
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    Instance in = random_composition(seed, spec);
    const Composition& c = in.composition;
    const Digraph q = c.flatten();
    for (Vertex u = 0; u < q.order(); ++u)
      for (Vertex v = 0; v < q.order(); ++v) {
        CompVerdict d = decide_composition(c, u, v);
        ASSERT_EQ(d.yes(), oracle_good_pair(q, u, v).has_pair) << "seed " << seed << " u " << u << " v " << v;
        if (d.yes()) expect_verified(c, d, u, v);
      }
  }
}

TEST(DecideComposition, ConverseSymmetry) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Instance in = random_composition(seed);
    const Composition& c = in.composition;
    Composition r = converse(c);
    for (Vertex u = 0; u < c.order(); ++u)
      for (Vertex v = 0; v < c.order(); ++v)
        EXPECT_EQ(decide_composition(c, u, v).yes(), decide_composition(r, v, u).yes());
  }
}

TEST(DecideComposition, NoAnswersCarryEvidence) {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    Instance in = random_composition(seed);
    const Composition& c = in.composition;
    for (Vertex u = 0; u < c.order(); ++u)
      for (Vertex v = 0; v < c.order(); ++v) {
        CompVerdict d = decide_composition(c, u, v);
        switch (d.outcome) {
          case CompOutcome::KnownException: EXPECT_TRUE(d.exception); break;
          case CompOutcome::TypeACondition:
          case CompOutcome::TypeBCondition: {
            ASSERT_TRUE(d.witness);
            EXPECT_EQ(validate_layers(c.quotient, c.part_of(u), c.part_of(v), *d.witness), "");
            bool any_blocking = false;
            for (const BackwardEvidence& e : d.evidence) any_blocking |= e.blocking;
            EXPECT_TRUE(any_blocking);
            break;
          }
          default: break;
        }
      }
  }
}

TEST(Reduction, IdentityWhenEverythingIsAdjacent) {
  Composition c = compose(complete(3), {Digraph(1), Digraph(1), Digraph(1)});
  Reduction r = neighborhood_reduction(c, 0, 1);
  EXPECT_EQ(r.composition.order(), 3);
}

TEST(Reduction, DropsNonNeighboursAndKeepsTheVerdict) {
  // H(u) = {u, a, b} with a and b not adjacent to u or v.
  Digraph h(4);
  h.add_arc(0, 1);
  Composition c = compose(cycle(3), {h, independent(2), Digraph(1)});
  Reduction r = neighborhood_reduction(c, 0, 1);
  EXPECT_LT(r.composition.order(), c.order());
  EXPECT_EQ(decide_composition(r.composition, r.u, r.v).yes(), decide_composition(c, 0, 1).yes());
  EXPECT_EQ(decide_composition(c, 0, 1).yes(), oracle_good_pair(c.flatten(), 0, 1).has_pair);
}
