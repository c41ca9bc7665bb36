#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "goodpair/document.hpp"
#include "support.hpp"

using namespace goodpair;
using namespace goodpair::testing;

namespace {

std::string fixture(const std::string& name) {
  std::ifstream in(std::string(GOODPAIR_TEST_DATA) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int parse_error_line(const std::string& text) {
  try {
    parse_document(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST(Document, FlatExample) {
  Document d = parse_document("vertices a b c  # three\narc a b\narc b c\nroots a c\n");
  EXPECT_TRUE(d.flat());
  EXPECT_EQ(d.composition.order(), 3);
  EXPECT_EQ(d.composition.flatten().arcs(), (std::vector<Arc>{{0, 1}, {1, 2}}));
  EXPECT_EQ(d.u, 0);
  EXPECT_EQ(d.v, 2);
  EXPECT_EQ(d.find("b"), 1);
  EXPECT_EQ(d.find("z"), kNoVertex);
  EXPECT_EQ(d.arc_name({1, 2}), "b c");
}

TEST(Document, CompositionExample) {
  Document d = parse_document(
      "quotient {\n vertices P Q\n arc P Q\n arc Q P\n}\n"
      "part P {\n vertices a b\n arc a b\n}\n"
      "part Q {\n vertices c\n}\n");
  EXPECT_FALSE(d.flat());
  EXPECT_EQ(d.part_names, (std::vector<std::string>{"P", "Q"}));
  EXPECT_EQ(d.composition.part_count(), 2);
  EXPECT_EQ(d.composition.parts[0].arcs(), (std::vector<Arc>{{0, 1}}));
  EXPECT_EQ(d.composition.flatten().size(), 5);
  EXPECT_FALSE(d.u);
}

TEST(Document, FixturesRoundTrip) {
  for (const char* name : {"complete3.txt", "exception_a.txt", "exception_b_n5.txt", "exception_e_t2.txt",
                           "path_separation_0.txt", "qt_c3.txt", "qt_c3_doubled.txt"}) {
    Document d = parse_document(fixture(name));
    std::string text = emit_document(d);
    EXPECT_EQ(parse_document(text), d) << name;
    EXPECT_EQ(emit_document(parse_document(text)), text) << name;
  }
}

TEST(Document, NumberedRoundTrip) {
  Composition c = compose(cycle(3), {Digraph(2), make(2, {{0, 1}}), Digraph(1)});
  for (bool flat : {false, true}) {
    Document d = numbered_document(c, flat, 1, 4);
    EXPECT_EQ(d.names.front(), "0");
    EXPECT_EQ(parse_document(emit_document(d)), d);
    EXPECT_EQ(parse_document(emit_document(d)).composition.flatten().arcs(), c.flatten().arcs());
  }
  EXPECT_EQ(numbered_document(c, false).part_names, (std::vector<std::string>{"P0", "P1", "P2"}));
}

TEST(Document, ErrorsCarryLineNumbers) {
  EXPECT_EQ(parse_error_line(fixture("bad_parse.txt")), 2);
  EXPECT_EQ(parse_error_line("vertices a a\n"), 1);
  EXPECT_EQ(parse_error_line("vertices a b\n\nroots a\n"), 3);
  EXPECT_EQ(parse_error_line("vertices a b\nedge a b\n"), 2);
  EXPECT_EQ(parse_error_line("vertices a b\narc a a\n"), 2);
  EXPECT_EQ(parse_error_line("quotient {\n vertices P\n"), 1);
  EXPECT_EQ(parse_error_line("part P {\n vertices a\n}\n"), 1);
  EXPECT_EQ(parse_error_line("quotient {\n vertices P Q\n}\npart P {\n vertices a\n}\npart Q {\n vertices a\n}\n"), 8);
}

TEST(Document, PairParsesDecideOutput) {
  Document d = parse_document(fixture("complete3.txt"));
  PairDocument p = parse_pair(fixture("complete3.pair"), d);
  EXPECT_EQ(p.u, 0);
  EXPECT_EQ(p.v, 0);
  EXPECT_TRUE(verify_good_pair(d.composition.flatten(), p.pair, 0, 0).ok);
  PairDocument again = parse_pair(emit_pair(d, p.pair), d);
  EXPECT_EQ(again.pair.out.arcs(), p.pair.out.arcs());
  EXPECT_EQ(again.pair.in.arcs(), p.pair.in.arcs());
}

TEST(Document, PairDefectsAreVisible) {
  Document d = parse_document(fixture("complete3.txt"));
  const Digraph g = d.composition.flatten();
  PairDocument missing = parse_pair(fixture("complete3_missing.pair"), d);
  Check m = verify_good_pair(g, missing.pair, 0, 0);
  EXPECT_FALSE(m.ok);
  EXPECT_EQ(m.vertex, d.find("c"));
  PairDocument shared = parse_pair(fixture("complete3_shared.pair"), d);
  Check s = verify_good_pair(g, shared.pair, 0, 1);
  EXPECT_FALSE(s.ok);
  EXPECT_THROW(parse_pair("out-branching a\narc a zz\n", d), ParseError);
}
