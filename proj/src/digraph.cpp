#include "goodpair/digraph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace goodpair {

std::string to_string(const Arc& a) { return std::to_string(a.tail) + "->" + std::to_string(a.head); }

Digraph::Digraph(int n) : n_(n), words_((n + 63) / 64) {
  if (n < 0) throw PreconditionError("negative order");
  out_.assign(static_cast<std::size_t>(n) * words_, 0);
  in_.assign(static_cast<std::size_t>(n) * words_, 0);
}

Digraph::Digraph(int n, std::span<const Arc> arcs) : Digraph(n) {
  for (const Arc& a : arcs) add_arc(a);
}

void Digraph::check_vertex(Vertex x) const {
  if (x < 0 || x >= n_) throw PreconditionError("vertex " + std::to_string(x) + " out of range");
}

bool Digraph::has_arc(Vertex x, Vertex y) const {
  if (x < 0 || x >= n_ || y < 0 || y >= n_) return false;
  return (out_[word(x, y)] & bit(y)) != 0;
}

bool Digraph::add_arc(Vertex x, Vertex y) {
  check_vertex(x);
  check_vertex(y);
  if (x == y) throw PreconditionError("loop at vertex " + std::to_string(x));
  if (has_arc(x, y)) return false;
  out_[word(x, y)] |= bit(y);
  in_[word(y, x)] |= bit(x);
  Arc a{x, y};
  arcs_.insert(std::lower_bound(arcs_.begin(), arcs_.end(), a), a);
  return true;
}

bool Digraph::remove_arc(Vertex x, Vertex y) {
  if (!has_arc(x, y)) return false;
  out_[word(x, y)] &= ~bit(y);
  in_[word(y, x)] &= ~bit(x);
  arcs_.erase(std::lower_bound(arcs_.begin(), arcs_.end(), Arc{x, y}));
  return true;
}

std::vector<Vertex> Digraph::out_neighbors(Vertex x) const {
  check_vertex(x);
  std::vector<Vertex> r;
  for (int w = 0; w < words_; ++w) {
    std::uint64_t m = out_[static_cast<std::size_t>(x) * words_ + w];
    while (m) {
      r.push_back(w * 64 + std::countr_zero(m));
      m &= m - 1;
    }
  }
  return r;
}

std::vector<Vertex> Digraph::in_neighbors(Vertex x) const {
  check_vertex(x);
  std::vector<Vertex> r;
  for (int w = 0; w < words_; ++w) {
    std::uint64_t m = in_[static_cast<std::size_t>(x) * words_ + w];
    while (m) {
      r.push_back(w * 64 + std::countr_zero(m));
      m &= m - 1;
    }
  }
  return r;
}

int Digraph::out_degree(Vertex x) const {
  check_vertex(x);
  int d = 0;
  for (int w = 0; w < words_; ++w) d += std::popcount(out_[static_cast<std::size_t>(x) * words_ + w]);
  return d;
}

int Digraph::in_degree(Vertex x) const {
  check_vertex(x);
  int d = 0;
  for (int w = 0; w < words_; ++w) d += std::popcount(in_[static_cast<std::size_t>(x) * words_ + w]);
  return d;
}

Digraph Digraph::converse() const {
  Digraph r(n_);
  for (const Arc& a : arcs_) r.add_arc(a.head, a.tail);
  return r;
}

Digraph Digraph::induced(std::span<const Vertex> vs) const {
  std::vector<int> pos(n_, -1);
  for (std::size_t i = 0; i < vs.size(); ++i) {
    check_vertex(vs[i]);
    if (pos[vs[i]] != -1) throw PreconditionError("repeated vertex in induced()");
    pos[vs[i]] = static_cast<int>(i);
  }
  Digraph r(static_cast<int>(vs.size()));
  for (const Arc& a : arcs_)
    if (pos[a.tail] >= 0 && pos[a.head] >= 0) r.add_arc(pos[a.tail], pos[a.head]);
  return r;
}

Digraph Digraph::without_arcs(std::span<const Arc> drop) const {
  Digraph r = *this;
  for (const Arc& a : drop) r.remove_arc(a);
  return r;
}

bool is_semicomplete(const Digraph& g) {
  for (Vertex x = 0; x < g.order(); ++x)
    for (Vertex y = x + 1; y < g.order(); ++y)
      if (!g.adjacent(x, y)) return false;
  return true;
}

bool is_tournament(const Digraph& g) {
  for (Vertex x = 0; x < g.order(); ++x)
    for (Vertex y = x + 1; y < g.order(); ++y)
      if (g.has_arc(x, y) == g.has_arc(y, x)) return false;
  return true;
}

std::vector<Vertex> all_vertices(int n) {
  std::vector<Vertex> r(n);
  std::iota(r.begin(), r.end(), 0);
  return r;
}

}  // namespace goodpair
