#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace goodpair {

using Vertex = int;
inline constexpr Vertex kNoVertex = -1;

struct Arc {
  Vertex tail = kNoVertex;
  Vertex head = kNoVertex;
  auto operator<=>(const Arc&) const = default;
};

std::string to_string(const Arc& a);

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ResourceExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Simple digraph on vertices 0..n-1: no loops, no parallel arcs.
// Adjacency is kept as row bitsets in both directions plus a sorted arc list.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int n);
  Digraph(int n, std::span<const Arc> arcs);

  int order() const { return n_; }
  int size() const { return static_cast<int>(arcs_.size()); }

  bool has_arc(Vertex x, Vertex y) const;
  bool has_arc(const Arc& a) const { return has_arc(a.tail, a.head); }
  bool adjacent(Vertex x, Vertex y) const { return has_arc(x, y) || has_arc(y, x); }

  // Throws PreconditionError on loops or out-of-range ends; returns false if already present.
  bool add_arc(Vertex x, Vertex y);
  bool add_arc(const Arc& a) { return add_arc(a.tail, a.head); }
  bool remove_arc(Vertex x, Vertex y);
  bool remove_arc(const Arc& a) { return remove_arc(a.tail, a.head); }

  const std::vector<Arc>& arcs() const { return arcs_; }
  std::vector<Vertex> out_neighbors(Vertex x) const;
  std::vector<Vertex> in_neighbors(Vertex x) const;
  int out_degree(Vertex x) const;
  int in_degree(Vertex x) const;

  Digraph converse() const;
  // Subdigraph induced by `vs`; vertex vs[i] becomes i.
  Digraph induced(std::span<const Vertex> vs) const;
  Digraph without_arcs(std::span<const Arc> drop) const;
  Digraph without_arc(const Arc& a) const { return without_arcs(std::span<const Arc>(&a, 1)); }

  bool operator==(const Digraph& other) const { return n_ == other.n_ && arcs_ == other.arcs_; }

 private:
  void check_vertex(Vertex x) const;
  std::size_t word(Vertex x, Vertex y) const { return static_cast<std::size_t>(x) * words_ + (y >> 6); }
  static std::uint64_t bit(Vertex y) { return std::uint64_t{1} << (y & 63); }

  int n_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> out_;
  std::vector<std::uint64_t> in_;
  std::vector<Arc> arcs_;
};

bool is_semicomplete(const Digraph& g);
bool is_tournament(const Digraph& g);
std::vector<Vertex> all_vertices(int n);

}  // namespace goodpair
