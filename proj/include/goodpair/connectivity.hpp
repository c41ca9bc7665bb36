#pragma once

#include <optional>
#include <vector>

#include "goodpair/digraph.hpp"

namespace goodpair {

// Strong components listed in acyclic order: every arc between two
// components goes from a lower index to a higher one.
struct Components {
  std::vector<int> component_of;
  std::vector<std::vector<Vertex>> members;

  int count() const { return static_cast<int>(members.size()); }
  bool strong() const { return members.size() <= 1; }
  const std::vector<Vertex>& initial() const { return members.front(); }
  const std::vector<Vertex>& terminal() const { return members.back(); }
  bool in_initial(Vertex v) const { return component_of[v] == 0; }
  bool in_terminal(Vertex v) const { return component_of[v] == count() - 1; }
};

Components strong_components(const Digraph& g);
bool is_strong(const Digraph& g);

std::vector<bool> reachable_from(const Digraph& g, Vertex s);
std::vector<bool> reaching(const Digraph& g, Vertex t);

// A set containing the source but not the sink, and the arcs leaving it.
struct CutWitness {
  std::vector<Vertex> source_side;
  std::vector<Arc> arcs;
};

struct LocalConnectivity {
  int value = 0;
  CutWitness cut;  // minimum cut; only meaningful when value < limit
};

// Maximum number of arc-disjoint (x,y)-paths, capped at `limit` (< 0 means no cap).
LocalConnectivity local_arc_connectivity(const Digraph& g, Vertex x, Vertex y, int limit = -1);

// k arc-disjoint (x,y)-paths as vertex sequences, or nullopt when fewer exist.
std::optional<std::vector<std::vector<Vertex>>> arc_disjoint_paths(const Digraph& g, Vertex x, Vertex y, int k);

struct StrengthCheck {
  bool ok = true;
  std::optional<CutWitness> cut;  // a set with fewer than k leaving arcs
};

StrengthCheck is_k_arc_strong(const Digraph& g, int k);

std::vector<Arc> arcs_leaving(const Digraph& g, const std::vector<bool>& in_set);
std::vector<Arc> arcs_entering(const Digraph& g, const std::vector<bool>& in_set);
std::vector<bool> to_mask(int n, const std::vector<Vertex>& vs);
std::vector<Vertex> from_mask(const std::vector<bool>& mask);

}  // namespace goodpair
