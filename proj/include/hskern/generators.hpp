#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "hskern/below_n.hpp"
#include "hskern/digraph.hpp"
#include "hskern/hypergraph.hpp"

namespace hskern {

namespace detail {

// mt19937 output is pinned by the standard; avoiding std distributions
// keeps generated instances identical across library implementations.
inline uint32_t rng_below(std::mt19937& gen, uint32_t bound) {
  return bound == 0 ? 0 : gen() % bound;
}

}  // namespace detail

// Reverse-peeling construction: vertices are inserted one by one and each
// new vertex receives at most d edges whose other members are already
// inserted, which caps the degeneracy at d. Requires m <= d * (n - 1).
inline Hypergraph gen_random_degenerate(int n, int d, int m, uint32_t seed) {
  if (n < 1 || d < 0 || m < 0)
    throw std::invalid_argument("gen_random_degenerate: bad parameters");
  if (m > d * (n - 1))
    throw std::invalid_argument(
        "gen_random_degenerate: m exceeds d * (n - 1)");
  std::mt19937 gen(seed);
  Hypergraph h = Hypergraph::with_vertices(n);

  std::vector<int> capacity(n + 1, 0);
  for (int v = 2; v <= n; ++v) capacity[v] = d;
  for (int edge = 0; edge < m; ++edge) {
    std::vector<int> open;
    for (int v = 2; v <= n; ++v)
      if (capacity[v] > 0) open.push_back(v);
    int host = open[detail::rng_below(gen, static_cast<uint32_t>(open.size()))];
    --capacity[host];

    int below = host - 1;
    int pick = 1 + static_cast<int>(detail::rng_below(
                       gen, static_cast<uint32_t>(std::min(below, 4))));
    std::set<int> members{host};
    while (static_cast<int>(members.size()) < pick + 1)
      members.insert(1 + static_cast<int>(detail::rng_below(
                             gen, static_cast<uint32_t>(below))));
    h.add_edge(std::move(members));
  }
  return h;
}

// Every ordered pair u != v becomes an arc with probability arc_prob.
inline Digraph gen_random_digraph(int n, double arc_prob, uint32_t seed) {
  if (n < 0 || arc_prob < 0.0 || arc_prob > 1.0)
    throw std::invalid_argument("gen_random_digraph: bad parameters");
  std::mt19937 gen(seed);
  Digraph d = Digraph::with_vertices(n);
  const uint64_t threshold =
      static_cast<uint64_t>(arc_prob * 4294967296.0);  // p * 2^32
  for (int u = 1; u <= n; ++u)
    for (int v = 1; v <= n; ++v) {
      if (u == v) continue;
      if (static_cast<uint64_t>(gen()) < threshold) d.add_arc(u, v);
    }
  return d;
}

// A graph G, viewed as a hypergraph whose edges are G's edges, has a
// hitting set of size n - k iff G has an independent set of size k. The
// digraph is read as an undirected edge list (direction and duplicates
// collapse).
inline BelowNInstance gen_from_graph_is(const Digraph& g, int k) {
  Hypergraph h;
  for (int v : g.vertices()) h.add_vertex(v);
  std::set<std::pair<int, int>> undirected;
  for (const auto& [u, v] : g.arcs())
    undirected.insert({std::min(u, v), std::max(u, v)});
  for (const auto& [u, v] : undirected) h.add_edge({u, v});
  return BelowNInstance{std::move(h), k};
}

}  // namespace hskern
