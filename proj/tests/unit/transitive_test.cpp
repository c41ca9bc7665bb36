#include <gtest/gtest.h>

#include <algorithm>

#include "goodpair/connectivity.hpp"
#include "goodpair/dispatch.hpp"
#include "goodpair/generators.hpp"
#include "goodpair/oracle.hpp"
#include "goodpair/transitive.hpp"
#include "support.hpp"

using namespace goodpair;
using namespace goodpair::testing;

namespace {

// P_2[T, v] with T the path 0 -> 1 -> 2; v = 3. An out-star here would be the independent middle.
Composition path_then_sink() { return compose(make(2, {{0, 1}}), {make(3, {{0, 1}, {1, 2}}), Digraph(1)}); }

Composition c3_of(int a, int b, int c) { return compose(cycle(3), {Digraph(a), Digraph(b), Digraph(c)}); }

}  // namespace

TEST(Transitive, IndependentMiddle) {
  Composition c = compose(transitive_tournament(3), {Digraph(1), Digraph(2), Digraph(1)});
  EXPECT_TRUE(is_tt3_middle(c.flatten(), 0, 3));
  TransVerdict d = decide_transitive_composition(c, 0, 3);
  EXPECT_EQ(d.outcome, TransOutcome::TT3Middle);
  EXPECT_EQ(d.pattern, (std::vector<Vertex>{1, 2}));
  EXPECT_FALSE(oracle_good_pair(c.flatten(), 0, 3).has_pair);
}

TEST(Transitive, TreeSide) {
  Composition c = path_then_sink();
  EXPECT_EQ(c.flatten().size(), 2 * c.order() - 3);
  EXPECT_EQ(tree_side(c.flatten(), 0, 3), false);
  TransVerdict d = decide_transitive_composition(c, 0, 3);
  EXPECT_EQ(d.outcome, TransOutcome::TreeSide);
  EXPECT_FALSE(d.reversed);
  EXPECT_FALSE(oracle_good_pair(c.flatten(), 0, 3).has_pair);

  // P_2[u, T] with T the path 2 -> 1 -> 0 into v = 1.
  Composition r = compose(make(2, {{0, 1}}), {Digraph(1), make(3, {{2, 1}, {1, 0}})});
  EXPECT_EQ(tree_side(r.flatten(), 0, 1), true);
  EXPECT_FALSE(oracle_good_pair(r.flatten(), 0, 1).has_pair);
}

TEST(Transitive, RootOutsideInitialComponent) {
  Composition c = compose(transitive_tournament(3), {Digraph(1), complete(2), Digraph(1)});
  TransVerdict d = decide_transitive_composition(c, 1, 3);
  EXPECT_EQ(d.outcome, TransOutcome::RootComponent);
  EXPECT_FALSE(oracle_good_pair(c.flatten(), 1, 3).has_pair);
}

TEST(Transitive, CompleteMiddleHasPair) {
  Composition c = compose(transitive_tournament(3), {Digraph(1), complete(2), Digraph(1)});
  TransVerdict d = decide_transitive_composition(c, 0, 3);
  ASSERT_TRUE(d.yes());
  EXPECT_TRUE(verify_good_pair(c.flatten(), *d.pair, 0, 3).ok);
  EXPECT_TRUE(oracle_good_pair(c.flatten(), 0, 3).has_pair);
}

TEST(Transitive, RegroupsNonStrongSemicompleteQuotient) {
  // A 3-cycle that dominates a sink; the cycle becomes one strong component.
  Digraph q = make(4, {{0, 1}, {1, 2}, {2, 0}});
  q.add_arc(0, 3);
  q.add_arc(1, 3);
  q.add_arc(2, 3);
  Composition c = compose(q, {Digraph(1), Digraph(1), Digraph(1), Digraph(1)});
  TransitiveForm tf = transitive_form(c);
  EXPECT_EQ(tf.composition.part_count(), 2);
  for (Vertex x = 0; x < c.order(); ++x) EXPECT_EQ(tf.to_original[tf.to_flat[x]], x);
  for (Vertex u = 0; u < c.order(); ++u)
    for (Vertex v = 0; v < c.order(); ++v)
      EXPECT_EQ(decide(c, u, v, InputClass::Transitive).yes, oracle_good_pair(c.flatten(), u, v).has_pair);
}

TEST(Transitive, AgreesWithOracleOnSmallTransitiveQuotients) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 150; ++trial) {
    const int s = 2 + trial % 3;
    std::vector<Digraph> parts;
    int n = 0;
    for (int i = 0; i < s; ++i) {
      const int size = 1 + static_cast<int>(rng() % 3);
      if (n + size > 7) {
        parts.push_back(Digraph(1));
        ++n;
        continue;
      }
      parts.push_back(random_digraph(rng, size, 0.5));
      n += size;
    }
    Composition c = compose(transitive_tournament(s), parts);
    const Digraph g = c.flatten();
    for (Vertex u = 0; u < g.order(); ++u)
      for (Vertex v = 0; v < g.order(); ++v) {
        TransVerdict d = decide_transitive_composition(c, u, v);
        ASSERT_EQ(d.yes(), oracle_good_pair(g, u, v).has_pair) << "trial " << trial << " u " << u << " v " << v;
        if (d.yes()) EXPECT_TRUE(verify_good_pair(g, *d.pair, u, v).ok);
      }
  }
}

TEST(QuasiTransitive, FlatTransitiveTriple) {
  QtVerdict d = decide_quasi_transitive(transitive_tournament(3), 0, 2);
  EXPECT_FALSE(d.yes);
  EXPECT_EQ(d.route, QtRoute::NonStrong);
  EXPECT_FALSE(oracle_good_pair(transitive_tournament(3), 0, 2).has_pair);
}

TEST(QuasiTransitive, CycleWithOneDoubledPartHasNoPair) {
  const Digraph g = c3_of(2, 1, 1).flatten();
  EXPECT_EQ(g.size(), 5);
  for (Vertex u = 0; u < 4; ++u)
    for (Vertex v = 0; v < 4; ++v) EXPECT_FALSE(decide_quasi_transitive(g, u, v).yes);
}

TEST(QuasiTransitive, CycleOfDoubledPartsRoutesStrong) {
  const Composition c = c3_of(2, 2, 2);
  const Digraph g = c.flatten();
  QtVerdict d = decide_quasi_transitive(g, 0, 2);
  ASSERT_TRUE(d.yes);
  EXPECT_EQ(d.route, QtRoute::Strong);
  EXPECT_TRUE(verify_good_pair(g, *d.pair, 0, 2).ok);
}

TEST(QuasiTransitive, RootComponentAndDegree) {
  Digraph g = transitive_tournament(3);
  EXPECT_EQ(decide_quasi_transitive(g, 1, 2).route, QtRoute::RootComponent);
  EXPECT_FALSE(decide_quasi_transitive(g, 1, 2).yes);
  EXPECT_THROW(decide_quasi_transitive(cycle(4), 0, 1), PreconditionError);
}

TEST(QuasiTransitive, ExhaustiveUpToThreeVertices) {
  for (int n = 1; n <= 3; ++n)
    for (const Digraph& g : quasi_transitive_digraphs(n))
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v) {
          QtVerdict d = decide_quasi_transitive(g, u, v);
          ASSERT_EQ(d.yes, oracle_good_pair(g, u, v).has_pair);
          if (d.yes) EXPECT_TRUE(verify_good_pair(g, *d.pair, u, v).ok);
        }
}

TEST(QuasiTransitive, SampledAgreesWithOracle) {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const int n = 3 + static_cast<int>(seed % 4);
    Digraph g = random_quasi_transitive(seed, n);
    ASSERT_TRUE(is_quasi_transitive(g));
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = 0; v < n; ++v) {
        QtVerdict d = decide_quasi_transitive(g, u, v);
        ASSERT_EQ(d.yes, oracle_good_pair(g, u, v).has_pair) << "seed " << seed;
        if (d.yes) EXPECT_TRUE(verify_good_pair(g, *d.pair, u, v).ok);
      }
  }
}

TEST(QuasiTransitive, TwoArcStrongHasPairs) {
  int seen = 0;
  for (std::uint64_t seed = 0; seed < 200 && seen < 15; ++seed) {
    const int n = 3 + static_cast<int>(seed % 4);
    Digraph g = random_quasi_transitive(seed, n);
    if (!is_k_arc_strong(g, 2).ok) continue;
    ++seen;
    for (Vertex u = 0; u < n; ++u) EXPECT_TRUE(decide_quasi_transitive(g, u, u).yes) << "seed " << seed;
  }
  EXPECT_GT(seen, 0);
}
