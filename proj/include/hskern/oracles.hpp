#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "hskern/digraph.hpp"
#include "hskern/hypergraph.hpp"

namespace hskern {

// Exact exponential-time solvers used as ground truth at desk scale
// (roughly n <= 25). Correctness over speed: trivial reductions only.

struct ExactResult {
  int optimum = 0;
  std::vector<int> witness;
  long long explored = 0;  // search nodes / subsets examined
};

struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(const char* what) : std::runtime_error(what) {}
};

namespace detail {

struct HittingSearch {
  const Hypergraph& h;
  long long budget;
  long long explored = 0;
  std::set<int> chosen;
  std::vector<int> best;

  explicit HittingSearch(const Hypergraph& hg, long long b) : h(hg), budget(b) {}

  const Edge* first_unhit() const {
    for (const Edge& e : h.edges()) {
      bool hit = false;
      for (int v : e.members)
        if (chosen.count(v)) {
          hit = true;
          break;
        }
      if (!hit) return &e;
    }
    return nullptr;
  }

  const Edge* unit_unhit() const {
    for (const Edge& e : h.edges()) {
      if (e.members.size() != 1) continue;
      if (!chosen.count(*e.members.begin())) return &e;
    }
    return nullptr;
  }

  void run() {
    if (++explored > budget)
      throw BudgetExceeded("min_hitting_set: node budget exhausted");
    const Edge* open = first_unhit();
    if (open == nullptr) {
      best.assign(chosen.begin(), chosen.end());
      return;
    }
    if (static_cast<int>(chosen.size()) + 1 >= static_cast<int>(best.size()))
      return;
    if (const Edge* unit = unit_unhit()) open = unit;  // forced vertex
    for (int v : open->members) {
      chosen.insert(v);
      run();
      chosen.erase(v);
    }
  }
};

}  // namespace detail

// Exact minimum hitting set by branching on an uncovered edge's vertices,
// with forced unit edges taken without branching. Deterministic: edges are
// scanned in id order and vertices in ascending order, and only strict
// improvements replace the incumbent.
inline ExactResult min_hitting_set(const Hypergraph& h,
                                   long long node_budget = 50'000'000) {
  if (h.has_empty_edge())
    throw std::invalid_argument("min_hitting_set: empty edge, infeasible");
  detail::HittingSearch search(h, node_budget);
  // Initial incumbent: the smallest vertex of every edge.
  std::set<int> greedy;
  for (const Edge& e : h.edges()) greedy.insert(*e.members.begin());
  search.best.assign(greedy.begin(), greedy.end());
  search.run();
  ExactResult r;
  r.optimum = static_cast<int>(search.best.size());
  r.witness = search.best;
  r.explored = search.explored;
  return r;
}

// Exact maximum independent set (no edge fully inside the chosen set) by
// include/exclude branching over vertices in ascending id order. When an
// empty edge is present no set is independent and optimum is -1.
inline ExactResult max_independent_set(const Hypergraph& h,
                                       long long node_budget = 50'000'000) {
  ExactResult r;
  if (h.has_empty_edge()) {
    r.optimum = -1;
    return r;
  }
  std::vector<int> verts(h.vertices().begin(), h.vertices().end());
  const int n = static_cast<int>(verts.size());
  std::vector<int> edge_size, chosen_in_edge;
  std::vector<std::vector<int>> edges_of(n);
  for (const Edge& e : h.edges()) {
    edge_size.push_back(static_cast<int>(e.members.size()));
    chosen_in_edge.push_back(0);
  }
  for (int i = 0; i < n; ++i) {
    int eidx = 0;
    for (const Edge& e : h.edges()) {
      if (e.members.count(verts[i])) edges_of[i].push_back(eidx);
      ++eidx;
    }
  }

  std::vector<int> chosen, best;
  long long explored = 0;
  int best_size = -1;

  auto rec = [&](auto&& self, int i) -> void {
    if (++explored > node_budget)
      throw BudgetExceeded("max_independent_set: node budget exhausted");
    if (i == n) {
      if (static_cast<int>(chosen.size()) > best_size) {
        best_size = static_cast<int>(chosen.size());
        best = chosen;
      }
      return;
    }
    if (static_cast<int>(chosen.size()) + (n - i) <= best_size) return;
    bool can_include = true;
    for (int eidx : edges_of[i])
      if (chosen_in_edge[eidx] + 1 == edge_size[eidx]) {
        can_include = false;
        break;
      }
    if (can_include) {
      chosen.push_back(verts[i]);
      for (int eidx : edges_of[i]) ++chosen_in_edge[eidx];
      self(self, i + 1);
      for (int eidx : edges_of[i]) --chosen_in_edge[eidx];
      chosen.pop_back();
    }
    self(self, i + 1);
  };
  rec(rec, 0);

  r.optimum = best_size;
  r.witness = best;
  r.explored = explored;
  return r;
}

namespace detail {

inline bool dominates(int n, const std::vector<std::vector<char>>& in_adj,
                      const std::vector<char>& in_set) {
  for (int i = 0; i < n; ++i) {
    if (in_set[i]) continue;
    bool ok = false;
    for (int j = 0; j < n && !ok; ++j)
      if (in_set[j] && in_adj[i][j]) ok = true;
    if (!ok) return false;
  }
  return true;
}

}  // namespace detail

// Exact minimum dominating set by enumerating vertex subsets in ascending
// size, lexicographic within a size. Fine for the desk-scale instances the
// toolkit targets.
inline ExactResult min_dominating_set(const Digraph& d,
                                      long long node_budget = 50'000'000) {
  std::vector<int> verts(d.vertices().begin(), d.vertices().end());
  const int n = static_cast<int>(verts.size());
  std::vector<std::vector<char>> in_adj(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i) {
    std::set<int> ins = d.in_neighbors(verts[i]);
    for (int j = 0; j < n; ++j)
      if (ins.count(verts[j])) in_adj[i][j] = 1;
  }

  ExactResult r;
  std::vector<char> in_set(n, 0);
  std::vector<int> pick;
  bool found = false;

  auto combos = [&](auto&& self, int start, int remaining) -> void {
    if (found) return;
    if (remaining == 0) {
      if (++r.explored > node_budget)
        throw BudgetExceeded("min_dominating_set: node budget exhausted");
      if (detail::dominates(n, in_adj, in_set)) {
        found = true;
        for (int i = 0; i < n; ++i)
          if (in_set[i]) r.witness.push_back(verts[i]);
      }
      return;
    }
    for (int i = start; i + remaining <= n && !found; ++i) {
      in_set[i] = 1;
      self(self, i + 1, remaining - 1);
      in_set[i] = 0;
    }
  };

  for (int size = 0; size <= n && !found; ++size) combos(combos, 0, size);
  r.optimum = static_cast<int>(r.witness.size());
  return r;
}

enum class WitnessKind { hitting, independent, dominating };

// Predicate plus size check; unknown witness ids fail the check rather than
// throwing, so corrupted witness files report INVALID.
inline bool verify(WitnessKind kind, const Hypergraph& h,
                   const std::vector<int>& witness, int bound) {
  if (static_cast<int>(witness.size()) > bound) return false;
  std::set<int> s;
  for (int v : witness) {
    if (!h.has_vertex(v)) return false;
    s.insert(v);
  }
  if (kind == WitnessKind::hitting) return is_hitting_set(h, s);
  if (kind == WitnessKind::independent) return is_independent(h, s);
  throw std::invalid_argument("verify: dominating requires a digraph");
}

inline bool verify(WitnessKind kind, const Digraph& d,
                   const std::vector<int>& witness, int bound) {
  if (kind != WitnessKind::dominating)
    throw std::invalid_argument("verify: hypergraph kinds require a hypergraph");
  if (static_cast<int>(witness.size()) > bound) return false;
  std::set<int> s;
  for (int v : witness) {
    if (!d.has_vertex(v)) return false;
    s.insert(v);
  }
  return is_dominating_set(d, s);
}

}  // namespace hskern
