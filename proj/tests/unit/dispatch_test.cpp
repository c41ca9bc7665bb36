#include <gtest/gtest.h>

#include <algorithm>

#include "goodpair/crosscheck.hpp"
#include "goodpair/dispatch.hpp"
#include "goodpair/generators.hpp"
#include "goodpair/oracle.hpp"
#include "support.hpp"

using namespace goodpair;
using namespace goodpair::testing;

namespace {

Instance whole(const Digraph& g, const std::string& tag) {
  Instance in;
  in.tag = tag;
  in.composition = singleton_composition(g);
  return in;
}

}  // namespace

TEST(Dispatch, ClassNames) {
  for (InputClass c : {InputClass::Auto, InputClass::Semicomplete, InputClass::Composition, InputClass::Transitive,
                       InputClass::QuasiTransitive})
    EXPECT_EQ(parse_input_class(to_string(c)), c);
  EXPECT_FALSE(parse_input_class("tournament"));
}

TEST(Dispatch, DetectsClasses) {
  EXPECT_EQ(detect_class(singleton_composition(complete(3))), InputClass::Semicomplete);
  EXPECT_EQ(detect_class(compose(cycle(3), {Digraph(2), Digraph(1), Digraph(1)})), InputClass::Composition);
  EXPECT_EQ(detect_class(compose(transitive_tournament(3), {Digraph(1), Digraph(2), Digraph(1)})),
            InputClass::Transitive);
  Digraph qt = compose(cycle(3), {Digraph(2), Digraph(2), Digraph(2)}).flatten();
  EXPECT_EQ(detect_class(singleton_composition(qt)), InputClass::QuasiTransitive);
  EXPECT_THROW(detect_class(singleton_composition(cycle(4))), PreconditionError);
}

TEST(Dispatch, ForcedClassMustFit) {
  Composition c = compose(cycle(3), {Digraph(2), Digraph(1), Digraph(1)});
  EXPECT_THROW(decide(c, 0, 2, InputClass::Semicomplete), PreconditionError);
  EXPECT_THROW(decide(c, 0, 2, InputClass::Transitive), PreconditionError);
  EXPECT_EQ(decide(c, 0, 2, InputClass::QuasiTransitive).yes, decide(c, 0, 2).yes);
}

TEST(Dispatch, PatternUsesFlattenedNumbering) {
  // The quotient lists v's part first, so regrouping reorders the parts.
  Composition c = compose(make(3, {{2, 1}, {1, 0}, {2, 0}}), {Digraph(1), Digraph(2), Digraph(1)});
  Decision d = decide(c, 3, 0);
  EXPECT_FALSE(d.yes);
  ASSERT_TRUE(d.transitive);
  std::vector<Vertex> pattern = d.transitive->pattern;
  std::sort(pattern.begin(), pattern.end());
  EXPECT_EQ(pattern, (std::vector<Vertex>{1, 2}));
}

TEST(Dispatch, PairsUseFlattenedNumbering) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Instance in = random_composition(seed);
    const Digraph g = in.composition.flatten();
    for (Vertex u = 0; u < g.order(); ++u)
      for (Vertex v = 0; v < g.order(); ++v) {
        Decision d = decide(in.composition, u, v);
        ASSERT_EQ(d.yes, d.pair.has_value());
        if (d.yes) EXPECT_TRUE(verify_good_pair(g, *d.pair, u, v).ok);
        EXPECT_FALSE(d.reason.empty());
      }
  }
}

TEST(Dispatch, EnginesAgreeOnSemicompleteInputs) {
  for (const Digraph& s : semicomplete_digraphs(4, false, true))
    for (Vertex u = 0; u < 4; ++u)
      for (Vertex v = 0; v < 4; ++v) {
        const Composition c = singleton_composition(s);
        const bool sc = decide(c, u, v, InputClass::Semicomplete).yes;
        EXPECT_EQ(decide(c, u, v, InputClass::Composition).yes, sc);
        EXPECT_EQ(decide(c, u, v, InputClass::QuasiTransitive).yes, sc);
      }
}

TEST(Crosscheck, SemicompleteUpToFourVertices) {
  std::vector<Instance> instances;
  for (const Digraph& s : semicomplete_digraphs(4)) instances.push_back(whole(s, "semicomplete/4"));
  CrossReport r = crosscheck(instances);
  // Frozen from the oracle run.
  EXPECT_EQ(r.instances, 42);
  EXPECT_EQ(r.checked, 672);
  EXPECT_EQ(r.yes, 367);
  EXPECT_EQ(r.mismatches, 0);
  EXPECT_TRUE(r.failures.empty());
}

TEST(Crosscheck, UsesInstanceRootsAndReportsRefusals) {
  Instance big = path_separation_member(0);
  CrossReport r = crosscheck({big});
  EXPECT_EQ(r.checked, 1);
  ASSERT_EQ(r.failures.size(), 1u);
  EXPECT_FALSE(r.failures[0].error.empty());
  CrossReport wide = crosscheck({big}, InputClass::Auto, OracleLimits{10, 2'000'000'000});
  EXPECT_EQ(wide.mismatches, 0);
  EXPECT_EQ(wide.yes, 0);
}

TEST(Crosscheck, RecordFormatIsDeterministic) {
  Instance in = whole(cycle(3), "cycle");
  CrossRecord a = crosscheck_one(in, 0, 0), b = crosscheck_one(in, 0, 0);
  EXPECT_EQ(format_record(a), format_record(b));
  EXPECT_EQ(format_record(a).find("_ms"), std::string::npos);
  EXPECT_NE(format_record(a, true).find("ms"), std::string::npos);
  EXPECT_TRUE(a.ok());
}
