#include "goodpair/generators.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <set>

#include "goodpair/connectivity.hpp"
#include "goodpair/isomorphism.hpp"

namespace goodpair {

namespace {

using Rng = std::mt19937_64;

Digraph transitive_tournament(int k) {
  Digraph g(k);
  for (Vertex i = 0; i < k; ++i)
    for (Vertex j = i + 1; j < k; ++j) g.add_arc(i, j);
  return g;
}

// Path arcs i -> i+1; every other pair points from the larger index to the smaller.
Digraph reverse_path_tournament(int k) {
  Digraph g(k);
  for (Vertex i = 0; i + 1 < k; ++i) g.add_arc(i, i + 1);
  for (Vertex j = 0; j < k; ++j)
    for (Vertex i = 0; i + 2 <= j; ++i) g.add_arc(j, i);
  return g;
}

Digraph directed_cycle(int k) {
  Digraph g(k);
  for (Vertex i = 0; i < k; ++i) g.add_arc(i, (i + 1) % k);
  return g;
}

// First m arcs of a fixed list on k vertices.
Digraph part_with_arcs(int k, int m) {
  static const std::vector<Arc> order{{0, 1}, {1, 2}, {2, 0}, {1, 0}, {2, 1}, {0, 2}};
  Digraph g(k);
  for (const Arc& a : order) {
    if (g.size() == m) break;
    if (a.tail < k && a.head < k) g.add_arc(a.tail, a.head);
  }
  return g;
}

int max_arcs_listed(int k) { return k <= 1 ? 0 : k == 2 ? 2 : 6; }

// Arcs w -> 0 for w = 1..m (the root keeps extra in-arcs; the others stay at in-degree one).
Digraph into_root(int k, int m) {
  Digraph g(k);
  for (Vertex w = 1; w <= m; ++w) g.add_arc(w, 0);
  return g;
}

Digraph out_of_root(int k, int m) {
  Digraph g(k);
  for (Vertex w = 1; w <= m; ++w) g.add_arc(0, w);
  return g;
}

Instance make(std::string tag, Digraph quotient, std::vector<Digraph> parts, int part_u, int part_v, Vertex local_u = 0,
              Vertex local_v = 0) {
  Instance in;
  in.tag = std::move(tag);
  in.composition = Composition{std::move(quotient), std::move(parts)};
  in.composition.validate();
  in.u = in.composition.vertex(part_u, local_u);
  in.v = in.composition.vertex(part_v, local_v);
  return in;
}

std::string sizes_tag(std::initializer_list<std::pair<const char*, int>> kv) {
  std::string s;
  for (const auto& [k, v] : kv) s += std::string(s.empty() ? "" : ",") + k + "=" + std::to_string(v);
  return s;
}

std::vector<Instance> family_a() {
  std::vector<Instance> r;
  for (int vu = 0; vu <= 1; ++vu) {
    Digraph h(2);
    if (vu) h.add_arc(1, 0);
    r.push_back(make("exception-a/" + sizes_tag({{"vu", vu}}), directed_cycle(3), {Digraph(2), Digraph(2), h}, 2, 2, 0, 1));
  }
  return r;
}

std::vector<Instance> family_b(int max_order) {
  std::vector<Instance> r;
  for (int n = 3; n <= max_order; ++n)
    for (int vu = 0; vu <= 1; ++vu) r.push_back(independent_middle_member(n, vu != 0));
  return r;
}

std::vector<Instance> family_c(int max_order) {
  std::vector<Instance> r;
  for (int k = 1; k + 2 <= max_order; ++k)
    for (int m = 0; m <= std::min(1, k - 1); ++m)
      r.push_back(make("exception-c/" + sizes_tag({{"h", k}, {"arcs", m}}), directed_cycle(3),
                       {Digraph(1), part_with_arcs(k, m), Digraph(1)}, 0, 2));
  return r;
}

std::vector<Instance> family_d(int max_order) {
  std::vector<Instance> r;
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b) {
      if (a + b + 1 > max_order) continue;
      for (int ku = 0; ku < a; ++ku)
        for (int kv = 0; kv < b; ++kv)
          r.push_back(make("exception-d/" + sizes_tag({{"hu", a}, {"hv", b}, {"into_u", ku}, {"out_of_v", kv}}),
                           directed_cycle(3), {into_root(a, ku), out_of_root(b, kv), Digraph(1)}, 0, 1));
    }
  return r;
}

std::vector<Instance> family_e(int max_order) {
  std::vector<Instance> r;
  for (int t = 1; t <= 3; ++t)
    for (int a = 1; a <= 3; ++a) {
      if (t + a + 2 > max_order) continue;
      for (int ku = 0; ku < a; ++ku)
        r.push_back(make("exception-e/rt4/" + sizes_tag({{"t", t}, {"hu", a}, {"into_u", ku}}), reverse_path_tournament(4),
                         {Digraph(t), Digraph(1), into_root(a, ku), Digraph(1)}, 2, 3));
    }
  for (int h = 1; h <= 3; ++h)
    for (int m = 0; m <= std::min(3, max_arcs_listed(h)); ++m)
      for (int t = 1; t <= 3; ++t)
        for (int a = 1; a <= 2; ++a) {
          if (h + t + a + 2 > max_order) continue;
          for (int ku = 0; ku < a; ++ku)
            r.push_back(make("exception-e/rt5/" + sizes_tag({{"h", h}, {"arcs", m}, {"t", t}, {"hu", a}, {"into_u", ku}}),
                             reverse_path_tournament(5),
                             {part_with_arcs(h, m), Digraph(t), Digraph(1), into_root(a, ku), Digraph(1)}, 3, 4));
        }
  return r;
}

std::vector<Instance> family_f(int max_order) {
  std::vector<Instance> r;
  // The free part H as one block, every H-vertex on a 2-cycle with the K_1 vertex.
  for (int h = 1; h <= 3; ++h)
    for (int m = 0; m <= std::min(3, max_arcs_listed(h)); ++m)
      for (int a = 1; a <= 2; ++a) {
        if (h + a + 3 > max_order) continue;
        Digraph s = reverse_path_tournament(5);
        s.add_arc(1, 0);
        for (int ku = 0; ku < a; ++ku)
          r.push_back(make("exception-f/block/" + sizes_tag({{"h", h}, {"arcs", m}, {"hu", a}, {"into_u", ku}}), s,
                           {part_with_arcs(h, m), Digraph(1), Digraph(1), into_root(a, ku), Digraph(1)}, 3, 4));
      }
  // H a tournament or complete digraph on singleton parts; each H-vertex keeps,
  // reverses or doubles its arc to the K_1 vertex.
  for (int h = 1; h <= 3; ++h)
    for (int complete = 0; complete <= (h >= 2 ? 1 : 0); ++complete) {
      int combos = 1;
      for (int i = 0; i < h; ++i) combos *= 3;
      for (int code = 1; code < combos; ++code)
        for (int a = 1; a <= 2; ++a) {
          if (h + a + 3 > max_order) continue;
          const int k = h, z = h + 1, hu = h + 2, v = h + 3;
          Digraph s(h + 4);
          Digraph inner = transitive_tournament(h);
          for (const Arc& e : inner.arcs()) {
            s.add_arc(e.tail, e.head);
            if (complete) s.add_arc(e.head, e.tail);
          }
          int c = code;
          for (Vertex x = 0; x < h; ++x, c /= 3) {
            int mode = c % 3;  // 0 keep, 1 reverse, 2 both
            if (mode != 1) s.add_arc(x, k);
            if (mode != 0) s.add_arc(k, x);
            s.add_arc(z, x);
            s.add_arc(hu, x);
            s.add_arc(v, x);
          }
          s.add_arc(k, z);
          s.add_arc(z, hu);
          s.add_arc(hu, v);
          s.add_arc(hu, k);
          s.add_arc(v, k);
          s.add_arc(v, z);
          if (!is_strong(s)) continue;
          std::vector<Digraph> parts(h + 4, Digraph(1));
          for (int ku = 0; ku < a; ++ku) {
            parts[hu] = into_root(a, ku);
            r.push_back(make("exception-f/split/" + sizes_tag({{"h", h}, {"complete", complete}, {"code", code}, {"hu", a},
                                                            {"into_u", ku}}),
                             s, parts, hu, v));
          }
        }
    }
  return r;
}

std::vector<Instance> family_g() {
  Digraph e = small_exception_digraph(SmallException::E);
  return {make("exception-g", e, std::vector<Digraph>(e.order(), Digraph(1)), 0, e.order() - 1)};
}

Digraph random_semicomplete(Rng& rng, int n, double p2) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  Digraph g(n);
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) {
      double r = coin(rng);
      if (r < p2) {
        g.add_arc(i, j);
        g.add_arc(j, i);
      } else if (r < p2 + (1 - p2) / 2) {
        g.add_arc(i, j);
      } else {
        g.add_arc(j, i);
      }
    }
  return g;
}

Digraph random_part(Rng& rng, int k, double p) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  Digraph g(k);
  for (Vertex i = 0; i < k; ++i)
    for (Vertex j = 0; j < k; ++j)
      if (i != j && coin(rng) < p) g.add_arc(i, j);
  return g;
}

std::uint64_t mix(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

std::vector<Digraph> semicomplete_digraphs(int n, bool tournaments_only, bool strong_only) {
  if (n < 1 || n > 5) throw PreconditionError("exhaustive semicomplete generation supports 1 <= n <= 5");
  std::vector<Arc> pairs;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) pairs.push_back({i, j});
  const int base = tournaments_only ? 2 : 3;
  long total = 1;
  for (std::size_t k = 0; k < pairs.size(); ++k) total *= base;
  std::set<std::vector<bool>> seen;
  std::vector<Digraph> r;
  for (long code = 0; code < total; ++code) {
    Digraph g(n);
    long c = code;
    for (const Arc& p : pairs) {
      int t = static_cast<int>(c % base);
      c /= base;
      if (t != 1) g.add_arc(p.tail, p.head);
      if (t != 0) g.add_arc(p.head, p.tail);
    }
    if (strong_only && !is_strong(g)) continue;
    if (seen.insert(canonical_code(g)).second) r.push_back(std::move(g));
  }
  return r;
}

Instance independent_middle_member(int n, bool with_vu) {
  if (n < 3) throw PreconditionError("TT3 family needs at least 3 vertices");
  Digraph q = transitive_tournament(3);
  if (with_vu) q.add_arc(2, 0);
  return make("exception-b/" + sizes_tag({{"n", n}, {"vu", with_vu ? 1 : 0}}), q, {Digraph(1), Digraph(n - 2), Digraph(1)},
              0, 2);
}

std::vector<Instance> exception_family_members(ExceptionFamily f, int max_order) {
  switch (f) {
    case ExceptionFamily::A: return max_order >= 6 ? family_a() : std::vector<Instance>{};
    case ExceptionFamily::B: return family_b(max_order);
    case ExceptionFamily::C: return family_c(max_order);
    case ExceptionFamily::D: return family_d(max_order);
    case ExceptionFamily::E: return family_e(max_order);
    case ExceptionFamily::F: return family_f(max_order);
    case ExceptionFamily::G: return max_order >= 4 ? family_g() : std::vector<Instance>{};
  }
  return {};
}

Digraph random_strong_semicomplete(std::uint64_t seed, int n, double p2) {
  if (n < 1) throw PreconditionError("order must be positive");
  Rng rng(seed);
  for (;;) {
    Digraph g = random_semicomplete(rng, n, n == 2 ? 1.0 : p2);
    if (is_strong(g)) return g;
  }
}

Digraph random_two_arc_strong_semicomplete(std::uint64_t seed, int n) {
  if (n < 3) throw PreconditionError("2-arc-strong semicomplete digraphs need at least 3 vertices");
  Rng rng(seed);
  for (;;) {
    Digraph g = random_semicomplete(rng, n, n <= 4 ? 0.7 : 0.4);
    if (is_k_arc_strong(g, 2).ok) return g;
  }
}

Instance random_composition(std::uint64_t seed, const RandomCompositionSpec& spec) {
  if (spec.min_quotient < 2 || spec.max_quotient < spec.min_quotient || spec.min_part < 1 ||
      spec.max_part < spec.min_part || spec.max_order < spec.min_quotient * spec.min_part)
    throw PreconditionError("invalid random composition parameters");
  Rng rng(seed);
  int s = std::uniform_int_distribution<int>(spec.min_quotient,
                                             std::min(spec.max_quotient, spec.max_order / spec.min_part))(rng);
  Instance in;
  in.tag = "random-composition";
  in.seed = seed;
  in.composition.quotient = random_strong_semicomplete(rng(), s);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  int room = spec.max_order;
  for (int i = 0; i < s; ++i) {
    int left = s - i - 1;
    int hi = std::min(spec.max_part, room - left * spec.min_part);
    int k = std::uniform_int_distribution<int>(spec.min_part, hi)(rng);
    room -= k;
    double p = coin(rng) < spec.independent_probability ? 0.0 : spec.part_arc_probability;
    in.composition.parts.push_back(random_part(rng, k, p));
  }
  return in;
}

Instance random_two_arc_strong_composition(std::uint64_t seed, int max_order) {
  RandomCompositionSpec spec;
  spec.max_order = max_order;
  for (std::uint64_t attempt = 0;; ++attempt) {
    Instance in = random_composition(mix(seed, attempt), spec);
    if (is_k_arc_strong(in.composition.flatten(), 2).ok) {
      in.tag = "random-2-arc-strong-composition";
      in.seed = seed;
      return in;
    }
  }
}

Instance layered_instance(std::uint64_t seed, LayerKind kind, int parameter, int max_layer) {
  if (parameter < 1 || max_layer < 1) throw PreconditionError("invalid layered instance parameters");
  const int p = kind == LayerKind::A ? 2 * parameter + 1 : parameter + 1;
  const int count = kind == LayerKind::A ? 2 * parameter - 1 : parameter;
  for (std::uint64_t attempt = 0;; ++attempt) {
    Rng rng(mix(seed, attempt));
    std::vector<std::vector<Vertex>> layers(p);
    int n = 0;
    for (auto& layer : layers) {
      int k = std::uniform_int_distribution<int>(1, max_layer)(rng);
      for (int i = 0; i < k; ++i) layer.push_back(n++);
    }
    if (n < std::min(5, p * max_layer)) continue;
    std::vector<int> level(n);
    for (int i = 0; i < p; ++i)
      for (Vertex x : layers[i]) level[x] = i;
    Digraph s(n);
    for (const auto& layer : layers) {
      Digraph inner = random_semicomplete(rng, static_cast<int>(layer.size()), 0.5);
      for (const Arc& e : inner.arcs()) s.add_arc(layer[e.tail], layer[e.head]);
    }
    auto pick = [&](const std::vector<Vertex>& layer, bool terminal) {
      Digraph h = s.induced(layer);
      Components comps = strong_components(h);
      const auto& m = comps.members[terminal ? comps.count() - 1 : 0];
      return layer[m[std::uniform_int_distribution<std::size_t>(0, m.size() - 1)(rng)]];
    };
    std::vector<Arc> backward;
    for (int i = 1; i <= count; ++i) {
      int from = kind == LayerKind::A ? p + 1 - i : p + 1 - i;
      int to = kind == LayerKind::A ? p - 1 - i : p - i;
      Vertex x, y;
      if (kind == LayerKind::A || i == 1) {
        x = pick(layers[from - 1], true);
      } else {
        // Middle layers of kind B: reuse the previous head, or any vertex of a layer
        // rich enough for two arc-disjoint paths (checked by the validator below).
        Vertex prev = backward.back().head;
        x = std::uniform_int_distribution<int>(0, 1)(rng) == 0
                ? prev
                : layers[from - 1][std::uniform_int_distribution<std::size_t>(0, layers[from - 1].size() - 1)(rng)];
      }
      if (kind == LayerKind::B && i == count) {
        y = pick(layers[to - 1], false);
      } else if (kind == LayerKind::A) {
        y = pick(layers[to - 1], false);
      } else {
        y = layers[to - 1][std::uniform_int_distribution<std::size_t>(0, layers[to - 1].size() - 1)(rng)];
      }
      backward.push_back({x, y});
    }
    std::sort(backward.begin(), backward.end());
    std::vector<Arc> listed = backward;
    for (Vertex x = 0; x < n; ++x)
      for (Vertex y = 0; y < n; ++y) {
        if (level[x] >= level[y]) continue;
        bool back = std::binary_search(backward.begin(), backward.end(), Arc{y, x});
        // A backward pair keeps its forward arc half of the time.
        if (!back || std::uniform_int_distribution<int>(0, 1)(rng) == 0) s.add_arc(x, y);
      }
    for (const Arc& e : backward) s.add_arc(e.tail, e.head);
    // Restore the order i = 1, 2, ... (tails descend through the layers).
    std::sort(listed.begin(), listed.end(), [&](const Arc& a, const Arc& b) { return level[a.tail] > level[b.tail]; });
    Instance in;
    in.seed = seed;
    in.tag = std::string(kind == LayerKind::A ? "layered-a/alpha=" : "layered-b/beta=") + std::to_string(parameter);
    const auto& ua = layers[kind == LayerKind::A ? p - 2 : p - 1];
    const auto& vb = layers[kind == LayerKind::A ? 1 : 0];
    Vertex a = ua[std::uniform_int_distribution<std::size_t>(0, ua.size() - 1)(rng)];
    Vertex b = vb[std::uniform_int_distribution<std::size_t>(0, vb.size() - 1)(rng)];
    LayerWitness w{kind, layers, listed};
    if (!is_semicomplete(s) || !is_strong(s) || !validate_layers(s, a, b, w).empty()) continue;
    in.composition = Composition{s, std::vector<Digraph>(n, Digraph(1))};
    in.u = a;
    in.v = b;
    in.witness = w;
    return in;
  }
}

int path_separation_member_count() { return 64; }

Instance path_separation_member(int index) {
  if (index < 0 || index >= path_separation_member_count()) throw PreconditionError("member index out of range");
  // Members ordered by order, then by code: bits 0-2 add a middle vertex to the
  // layers holding v, y_1 and u; bits 3-5 close those layers with a back arc.
  std::vector<int> codes(64);
  for (int i = 0; i < 64; ++i) codes[i] = i;
  std::stable_sort(codes.begin(), codes.end(), [](int a, int b) {
    return std::popcount(unsigned(a & 7)) < std::popcount(unsigned(b & 7));
  });
  const int code = codes[index];
  std::vector<std::vector<std::string>> names{{"y3"}, {"y2", "v"}, {"y1", "x3"}, {"u", "x2"}, {"x1"}};
  for (int i = 0; i < 3; ++i)
    if (code >> i & 1) names[i + 1].insert(names[i + 1].begin() + 1, "m" + std::to_string(i + 2));
  std::vector<std::string> label;
  std::vector<int> level;
  for (int i = 0; i < 5; ++i)
    for (const auto& nm : names[i]) {
      label.push_back(nm);
      level.push_back(i);
    }
  const int n = static_cast<int>(label.size());
  auto id = [&](const std::string& nm) {
    return static_cast<Vertex>(std::find(label.begin(), label.end(), nm) - label.begin());
  };
  const std::vector<Arc> backward{{id("x1"), id("y1")}, {id("x2"), id("y2")}, {id("x3"), id("y3")}};
  Digraph s(n);
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = 0; y < n; ++y) {
      if (x == y) continue;
      if (level[x] < level[y]) {
        if (std::find(backward.begin(), backward.end(), Arc{y, x}) == backward.end()) s.add_arc(x, y);
      } else if (level[x] == level[y] && x < y) {
        s.add_arc(x, y);
      }
    }
  for (const Arc& e : backward) s.add_arc(e.tail, e.head);
  for (int i = 0; i < 3; ++i)
    if (code >> (i + 3) & 1) {
      const auto& layer = names[i + 1];
      s.add_arc(id(layer.back()), id(layer.front()));
    }
  std::vector<Digraph> parts(n, Digraph(1));
  parts[id("x1")] = Digraph(2);
  parts[id("y3")] = Digraph(2);
  Instance in = make("path-separation/" + std::to_string(index), s, parts, id("u"), id("v"));
  std::vector<std::vector<Vertex>> layers(5);
  for (Vertex x = 0; x < n; ++x) layers[level[x]].push_back(x);
  in.witness = LayerWitness{LayerKind::A, layers, backward};
  return in;
}

Digraph random_quasi_transitive(std::uint64_t seed, int n) {
  if (n < 1) throw PreconditionError("order must be positive");
  Rng rng(seed);
  // want: 0 any, 1 strong, 2 non-strong
  auto build = [&](auto&& self, int k, int want) -> Digraph {
    if (k == 1) return Digraph(1);
    bool strong = want == 1 || (want == 0 && std::uniform_int_distribution<int>(0, 1)(rng) == 0);
    for (;;) {
      int t = std::uniform_int_distribution<int>(2, k)(rng);
      std::vector<int> sizes(t, 1);
      for (int extra = k - t; extra > 0; --extra) ++sizes[std::uniform_int_distribution<int>(0, t - 1)(rng)];
      Composition c;
      if (strong) {
        c.quotient = random_strong_semicomplete(rng(), t);
      } else {
        // Random order, forward arcs with probability one half, then transitive closure.
        std::vector<Vertex> perm(t);
        for (int i = 0; i < t; ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        Digraph q(t);
        for (int i = 0; i < t; ++i)
          for (int j = i + 1; j < t; ++j)
            if (std::uniform_int_distribution<int>(0, 1)(rng)) q.add_arc(perm[i], perm[j]);
        for (int m = 0; m < t; ++m)
          for (int i = 0; i < t; ++i)
            for (int j = 0; j < t; ++j)
              if (i != j && q.has_arc(i, m) && q.has_arc(m, j)) q.add_arc(i, j);
        c.quotient = q;
      }
      for (int sz : sizes) c.parts.push_back(self(self, sz, strong ? 2 : 1));
      Digraph g = c.flatten();
      if (!is_quasi_transitive(g)) continue;
      if (want == 1 && !is_strong(g)) continue;
      if (want == 2 && is_strong(g)) continue;
      return g;
    }
  };
  return build(build, n, 0);
}

std::vector<Digraph> quasi_transitive_digraphs(int n) {
  if (n < 1 || n > 4) throw PreconditionError("exhaustive quasi-transitive generation supports 1 <= n <= 4");
  std::vector<Arc> pairs;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) pairs.push_back({i, j});
  long total = 1;
  for (std::size_t k = 0; k < pairs.size(); ++k) total *= 4;
  std::vector<Digraph> r;
  for (long code = 0; code < total; ++code) {
    Digraph g(n);
    long c = code;
    for (const Arc& p : pairs) {
      int t = static_cast<int>(c % 4);
      c /= 4;
      if (t & 1) g.add_arc(p.tail, p.head);
      if (t & 2) g.add_arc(p.head, p.tail);
    }
    if (is_quasi_transitive(g)) r.push_back(std::move(g));
  }
  return r;
}

}  // namespace goodpair
