#include <gtest/gtest.h>

#include <algorithm>

#include "goodpair/connectivity.hpp"
#include "goodpair/generators.hpp"
#include "goodpair/isomorphism.hpp"
#include "goodpair/oracle.hpp"
#include "support.hpp"

using namespace goodpair;
using namespace goodpair::testing;

namespace {

bool quasi_transitive_by_definition(const Digraph& g) {
  for (Vertex a = 0; a < g.order(); ++a)
    for (Vertex b : g.out_neighbors(a))
      for (Vertex c : g.out_neighbors(b))
        if (c != a && !g.has_arc(a, c) && !g.has_arc(c, a)) return false;
  return true;
}

bool same_instance(const Instance& a, const Instance& b) {
  return a.tag == b.tag && a.composition.flatten().arcs() == b.composition.flatten().arcs() &&
         a.composition.part_count() == b.composition.part_count() && a.u == b.u && a.v == b.v;
}

}  // namespace

TEST(Generators, SemicompleteCountsUpToIsomorphism) {
  EXPECT_EQ(semicomplete_digraphs(1).size(), 1u);
  EXPECT_EQ(semicomplete_digraphs(2).size(), 2u);
  EXPECT_EQ(semicomplete_digraphs(3).size(), 7u);
  EXPECT_EQ(semicomplete_digraphs(4).size(), 42u);
  EXPECT_EQ(semicomplete_digraphs(3, true).size(), 2u);
  EXPECT_EQ(semicomplete_digraphs(4, true).size(), 4u);
  EXPECT_EQ(semicomplete_digraphs(5, true).size(), 12u);
}

TEST(Generators, SemicompleteListIsCanonicallyDistinct) {
  for (int n = 2; n <= 4; ++n) {
    std::vector<std::vector<bool>> codes;
    for (const Digraph& s : semicomplete_digraphs(n)) {
      EXPECT_TRUE(is_semicomplete(s));
      codes.push_back(canonical_code(s));
    }
    std::sort(codes.begin(), codes.end());
    EXPECT_EQ(std::adjacent_find(codes.begin(), codes.end()), codes.end());
  }
  for (const Digraph& s : semicomplete_digraphs(4, false, true)) EXPECT_TRUE(is_strong(s));
}

TEST(Generators, RandomOnesAreDeterministic) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    EXPECT_TRUE(same_instance(random_composition(seed), random_composition(seed)));
    EXPECT_EQ(random_strong_semicomplete(seed, 6).arcs(), random_strong_semicomplete(seed, 6).arcs());
    EXPECT_EQ(random_quasi_transitive(seed, 6).arcs(), random_quasi_transitive(seed, 6).arcs());
    EXPECT_TRUE(same_instance(layered_instance(seed, LayerKind::A, 2), layered_instance(seed, LayerKind::A, 2)));
  }
  EXPECT_NE(random_strong_semicomplete(1, 6).arcs(), random_strong_semicomplete(2, 6).arcs());
}

TEST(Generators, RandomOnesHaveTheirPromisedShape) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Digraph s = random_strong_semicomplete(seed, 5);
    EXPECT_TRUE(is_semicomplete(s) && is_strong(s));
    Digraph t = random_two_arc_strong_semicomplete(seed, 6);
    EXPECT_TRUE(is_semicomplete(t));
    EXPECT_TRUE(is_k_arc_strong(t, 2).ok);
    Instance c = random_two_arc_strong_composition(seed, 8);
    EXPECT_LE(c.composition.order(), 8);
    EXPECT_TRUE(is_k_arc_strong(c.composition.flatten(), 2).ok);
    Instance r = random_composition(seed);
    EXPECT_NO_THROW(r.composition.validate());
    EXPECT_TRUE(is_strong(r.composition.quotient) && is_semicomplete(r.composition.quotient));
    Digraph q = random_quasi_transitive(seed, 3 + static_cast<int>(seed % 4));
    EXPECT_TRUE(quasi_transitive_by_definition(q));
  }
}

TEST(Generators, LayeredWitnessesValidate) {
  for (LayerKind kind : {LayerKind::A, LayerKind::B})
    for (int parameter = 1; parameter <= 4; ++parameter)
      for (std::uint64_t seed = 0; seed < 5; ++seed) {
        Instance in = layered_instance(seed, kind, parameter);
        ASSERT_TRUE(in.witness);
        EXPECT_EQ(in.witness->kind, kind);
        EXPECT_EQ(in.witness->parameter(), parameter);
        EXPECT_EQ(validate_layers(in.composition.quotient, *in.u, *in.v, *in.witness), "");
      }
}

TEST(Generators, QuasiTransitiveEnumeration) {
  for (int n = 1; n <= 3; ++n) {
    long expected = 0;
    const int pairs = n * (n - 1);
    for (long mask = 0; mask < (1L << pairs); ++mask) {
      Digraph g(n);
      int bit = 0;
      for (Vertex a = 0; a < n; ++a)
        for (Vertex b = 0; b < n; ++b)
          if (a != b && (mask >> bit++ & 1)) g.add_arc(a, b);
      expected += quasi_transitive_by_definition(g);
    }
    auto listed = quasi_transitive_digraphs(n);
    EXPECT_EQ(static_cast<long>(listed.size()), expected);
    for (const Digraph& g : listed) EXPECT_TRUE(quasi_transitive_by_definition(g));
  }
}

TEST(Generators, ExceptionFamilyMembersHaveRoots) {
  for (ExceptionFamily f : {ExceptionFamily::A, ExceptionFamily::B, ExceptionFamily::C, ExceptionFamily::D, ExceptionFamily::E,
                        ExceptionFamily::F, ExceptionFamily::G}) {
    auto members = exception_family_members(f, 7);
    EXPECT_FALSE(members.empty()) << to_string(f);
    for (const Instance& in : members) {
      ASSERT_TRUE(in.u && in.v);
      EXPECT_LE(in.composition.order(), 7);
    }
  }
  Instance b = independent_middle_member(5, false);
  EXPECT_EQ(b.composition.flatten().size(), 2 * 3 + 1);
  EXPECT_EQ(independent_middle_member(5, true).composition.flatten().size(), 2 * 3 + 2);
}

TEST(Generators, PathSeparationFamily) {
  EXPECT_EQ(path_separation_member_count(), 64);
  Instance first = path_separation_member(0);
  EXPECT_EQ(first.composition.order(), 10);
  ASSERT_TRUE(first.witness);
  EXPECT_EQ(first.witness->kind, LayerKind::A);
  EXPECT_EQ(first.witness->parameter(), 2);
  EXPECT_EQ(validate_layers(first.composition.quotient, first.composition.part_of(*first.u),
                            first.composition.part_of(*first.v), *first.witness),
            "");
  EXPECT_FALSE(oracle_good_pair(first.composition.flatten(), *first.u, *first.v, OracleLimits{10, 2'000'000'000})
                   .has_pair);
}
