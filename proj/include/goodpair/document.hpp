#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "goodpair/branching.hpp"
#include "goodpair/composition.hpp"

namespace goodpair {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what);
  int line() const { return line_; }

 private:
  int line_;
};

// Text form of an input digraph with named vertices.
//
// Flat:                      Composition:
//   vertices a b c             quotient {
//   arc a b                      vertices P Q
//   arc b c                      arc P Q
//   roots a c                  }
//                              part P {
//                                vertices a b
//                                arc a b
//                              }
//                              part Q {
//                                vertices c
//                              }
//                              roots a c
//
// `#` starts a comment. Names are any whitespace-free tokens other than the
// braces, unique across the document (part names form their own namespace).
struct Document {
  Composition composition;
  std::vector<std::string> names;       // flattened vertex -> name
  std::vector<std::string> part_names;  // empty for a flat document
  std::optional<Vertex> u;
  std::optional<Vertex> v;

  bool flat() const { return part_names.empty(); }
  // kNoVertex when absent.
  Vertex find(const std::string& name) const;
  std::string arc_name(const Arc& a) const;
};

Document parse_document(std::istream& in);
Document parse_document(const std::string& text);
// Normalized form: declaration order, arcs sorted; parse(emit(d)) == d.
std::string emit_document(const Document& d);

// Vertices named by their flattened index, parts P0, P1, ...
Document numbered_document(const Composition& c, bool flat, std::optional<Vertex> u = std::nullopt,
                           std::optional<Vertex> v = std::nullopt);
Document flat_document(const Digraph& g, std::optional<Vertex> u = std::nullopt,
                       std::optional<Vertex> v = std::nullopt);

// A claimed pair:
//   out-branching u
//   arc u a
//   ...
//   in-branching v
//   arc a v
//   ...
// Lines with other keywords are skipped, so decide output parses as a pair.
struct PairDocument {
  Vertex u = kNoVertex;
  Vertex v = kNoVertex;
  BranchingPair pair;
};

std::string emit_pair(const Document& d, const BranchingPair& p);
PairDocument parse_pair(std::istream& in, const Document& d);
PairDocument parse_pair(const std::string& text, const Document& d);

bool operator==(const Document& a, const Document& b);

}  // namespace goodpair
