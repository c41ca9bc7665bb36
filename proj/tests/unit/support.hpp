#pragma once

#include <algorithm>
#include <initializer_list>
#include <random>
#include <utility>
#include <vector>

#include "goodpair/composition.hpp"
#include "goodpair/digraph.hpp"

namespace goodpair::testing {

inline Digraph make(int n, std::initializer_list<std::pair<int, int>> arcs) {
  Digraph g(n);
  for (auto [x, y] : arcs) g.add_arc(x, y);
  return g;
}

inline Digraph cycle(int n) {
  Digraph g(n);
  for (int i = 0; i < n; ++i) g.add_arc(i, (i + 1) % n);
  return g;
}

inline Digraph complete(int n) {
  Digraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) g.add_arc(i, j);
  return g;
}

inline Digraph transitive_tournament(int n) {
  Digraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_arc(i, j);
  return g;
}

inline Composition compose(const Digraph& q, std::vector<Digraph> parts) { return Composition{q, std::move(parts)}; }

// TT_3[u, independent middle of `middle` vertices, v]: u = 0, v = middle + 1.
inline Digraph tt3_middle(int middle) {
  Digraph g(middle + 2);
  for (int i = 1; i <= middle; ++i) {
    g.add_arc(0, i);
    g.add_arc(i, middle + 1);
  }
  g.add_arc(0, middle + 1);
  return g;
}

inline Digraph random_digraph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  Digraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && coin(rng)) g.add_arc(i, j);
  return g;
}

inline Digraph random_semicomplete_digraph(std::mt19937_64& rng, int n, double two_cycles) {
  std::bernoulli_distribution both(two_cycles), dir(0.5);
  Digraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (both(rng)) {
        g.add_arc(i, j);
        g.add_arc(j, i);
      } else if (dir(rng)) {
        g.add_arc(i, j);
      } else {
        g.add_arc(j, i);
      }
    }
  return g;
}

// Leaving-arc count of every set containing x but not y, minimised.
inline int brute_force_min_cut(const Digraph& g, Vertex x, Vertex y) {
  const int n = g.order();
  int best = g.size();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (!(mask >> x & 1) || (mask >> y & 1)) continue;
    int leaving = 0;
    for (const Arc& a : g.arcs())
      if ((mask >> a.tail & 1) && !(mask >> a.head & 1)) ++leaving;
    best = std::min(best, leaving);
  }
  return best;
}

}  // namespace goodpair::testing
