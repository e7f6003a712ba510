#pragma once

// Shared fixtures and independent brute-force oracles for the test suites.
// The oracles here are plain enumerations, kept separate from the library's
// branching solvers so every equivalence claim is checked by two routes.

#include <optional>
#include <random>
#include <vector>

#include "hskern/degeneracy.hpp"
#include "hskern/digraph.hpp"
#include "hskern/generators.hpp"
#include "hskern/hypergraph.hpp"

namespace testsupport {

using hskern::Digraph;
using hskern::Edge;
using hskern::Hypergraph;
using hskern::detail::rng_below;

inline Hypergraph triangle() {
  Hypergraph h = Hypergraph::with_vertices(3);
  h.add_edge({1, 2});
  h.add_edge({2, 3});
  h.add_edge({1, 3});
  return h;
}

inline Hypergraph path2() {  // edges {1,2},{2,3}
  Hypergraph h = Hypergraph::with_vertices(3);
  h.add_edge({1, 2});
  h.add_edge({2, 3});
  return h;
}

inline Digraph directed_triangle() {  // 1->2->3->1
  Digraph d = Digraph::with_vertices(3);
  d.add_arc(1, 2);
  d.add_arc(2, 3);
  d.add_arc(3, 1);
  return d;
}

// General random hypergraph: unit edges and parallel edges both occur.
inline Hypergraph random_hypergraph(std::mt19937& gen, int max_n, int max_m) {
  int n = 1 + static_cast<int>(rng_below(gen, static_cast<uint32_t>(max_n)));
  Hypergraph h = Hypergraph::with_vertices(n);
  int m = static_cast<int>(rng_below(gen, static_cast<uint32_t>(max_m + 1)));
  for (int i = 0; i < m; ++i) {
    if (h.m() > 0 && rng_below(gen, 10) == 0) {
      h.add_edge(h.edges()[rng_below(gen, static_cast<uint32_t>(h.m()))]
                     .members);  // parallel copy
      continue;
    }
    int card = 1 + static_cast<int>(
                       rng_below(gen, static_cast<uint32_t>(std::min(n, 5))));
    std::set<int> members;
    while (static_cast<int>(members.size()) < card)
      members.insert(1 +
                     static_cast<int>(rng_below(gen, static_cast<uint32_t>(n))));
    h.add_edge(std::move(members));
  }
  return h;
}

inline std::vector<int> sorted_vertices(const Hypergraph& h) {
  return std::vector<int>(h.vertices().begin(), h.vertices().end());
}

// Minimum hitting set size by subset enumeration; nullopt when an empty
// edge makes the instance infeasible.
inline std::optional<int> enum_min_hitting_set(const Hypergraph& h) {
  if (h.has_empty_edge()) return std::nullopt;
  std::vector<int> verts = sorted_vertices(h);
  int n = static_cast<int>(verts.size());
  int best = -1;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::set<int> s;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) s.insert(verts[i]);
    if (hskern::is_hitting_set(h, s)) {
      int size = static_cast<int>(s.size());
      if (best < 0 || size < best) best = size;
    }
  }
  return best;
}

// Maximum independent set size by subset enumeration; -1 when an empty
// edge rules every set out.
inline int enum_max_independent(const Hypergraph& h) {
  std::vector<int> verts = sorted_vertices(h);
  int n = static_cast<int>(verts.size());
  int best = -1;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::set<int> s;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) s.insert(verts[i]);
    if (hskern::is_independent(h, s))
      best = std::max(best, static_cast<int>(s.size()));
  }
  return best;
}

inline int enum_min_dominating(const Digraph& d) {
  std::vector<int> verts(d.vertices().begin(), d.vertices().end());
  int n = static_cast<int>(verts.size());
  int best = n;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::set<int> s;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) s.insert(verts[i]);
    if (hskern::is_dominating_set(d, s))
      best = std::min(best, static_cast<int>(s.size()));
  }
  return best;
}

// Definitional degeneracy: the least d such that every H (-) X with a
// vertex left has one of degree at most d, maximised over all X strictly
// inside V.
inline int brute_degeneracy(const Hypergraph& h) {
  std::vector<int> verts = sorted_vertices(h);
  int n = static_cast<int>(verts.size());
  if (n == 0) return 0;
  int worst = 0;
  for (unsigned mask = 0; mask + 1 < (1u << n); ++mask) {  // X strictly in V
    std::set<int> x;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) x.insert(verts[i]);
    Hypergraph sub = hskern::shrink(h, x);
    if (sub.n() == 0) continue;
    int mindeg = -1;
    for (int v : sub.vertices()) {
      int deg = sub.degree(v);
      if (mindeg < 0 || deg < mindeg) mindeg = deg;
    }
    worst = std::max(worst, mindeg);
  }
  return worst;
}

// Chromatic number by exhaustive assignment; edges of cardinality >= 2 must
// receive two colors.
inline int exhaustive_chromatic(const Hypergraph& h) {
  std::vector<int> verts = sorted_vertices(h);
  int n = static_cast<int>(verts.size());
  if (n == 0) return 0;
  for (int t = 1; t <= n; ++t) {
    std::vector<int> color(n, 0);
    auto ok = [&]() {
      for (const Edge& e : h.edges()) {
        if (e.members.size() < 2) continue;
        bool mono = true;
        int first = -1;
        for (int v : e.members) {
          int idx =
              static_cast<int>(std::lower_bound(verts.begin(), verts.end(), v) -
                               verts.begin());
          if (first < 0)
            first = color[idx];
          else if (color[idx] != first)
            mono = false;
        }
        if (mono) return false;
      }
      return true;
    };
    auto rec = [&](auto&& self, int i) -> bool {
      if (i == n) return ok();
      for (int c = 0; c < t; ++c) {
        color[i] = c;
        if (self(self, i + 1)) return true;
      }
      return false;
    };
    if (rec(rec, 0)) return t;
  }
  return n;
}

// Does any S with |S| <= k satisfy |F[S]| >= |S| + k?
inline bool mini_exists(const Hypergraph& h, int k) {
  std::vector<int> verts = sorted_vertices(h);
  int n = static_cast<int>(verts.size());
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::set<int> s;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) s.insert(verts[i]);
    if (static_cast<int>(s.size()) > k) continue;
    if (static_cast<int>(h.covered_edges(s).size()) >=
        static_cast<int>(s.size()) + k)
      return true;
  }
  return false;
}

}  // namespace testsupport
