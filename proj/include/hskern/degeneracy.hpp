#pragma once

#include <map>
#include <utility>
#include <vector>

#include "hskern/hypergraph.hpp"

namespace hskern {

// One peeling step: the picked minimum-degree vertex, its degree at pick
// time, vertices co-removed by the shrink (they lost every incident edge,
// recorded with degree 0), and the ids of the edges removed at this step.
struct PeelStep {
  int vertex = 0;
  int degree = 0;
  std::vector<int> co_removed;
  std::vector<int> removed_edges;
};

struct DegeneracyOrder {
  std::vector<std::pair<int, int>> order;  // (vertex, degree when peeled)
  int degeneracy = 0;
  std::vector<PeelStep> steps;  // replay data for proper_coloring
};

// Min-degree peeling: repeatedly pick the minimum-degree vertex (ties toward
// the smallest id), record its degree, and shrink it away. Vertices removed
// as side effects of a shrink have no surviving edge, so they enter the
// order with degree 0. The maximum recorded degree is deg(H).
inline DegeneracyOrder degeneracy_order(const Hypergraph& h) {
  DegeneracyOrder out;
  Hypergraph cur = h;
  while (cur.n() > 0) {
    int picked = 0;
    int picked_degree = -1;
    for (int v : cur.vertices()) {
      int d = cur.degree(v);
      if (picked_degree < 0 || d < picked_degree) {
        picked = v;
        picked_degree = d;
      }
    }
    Hypergraph next = shrink(cur, {picked});
    PeelStep step;
    step.vertex = picked;
    step.degree = picked_degree;
    for (const Edge& e : cur.edges())
      if (!next.has_edge(e.id)) step.removed_edges.push_back(e.id);
    for (int v : cur.vertices())
      if (v != picked && !next.has_vertex(v)) step.co_removed.push_back(v);

    out.order.emplace_back(picked, picked_degree);
    for (int v : step.co_removed) out.order.emplace_back(v, 0);
    if (picked_degree > out.degeneracy) out.degeneracy = picked_degree;
    out.steps.push_back(std::move(step));
    cur = std::move(next);
  }
  return out;
}

struct Coloring {
  std::map<int, int> assignment;  // vertex -> color in 1..color_count
  int color_count = 0;
};

// Proper coloring with at most deg(H)+1 colors, built by reinserting peeled
// vertices in reverse order. For each reappearing edge that already has a
// colored vertex, one such color goes into C (C := {1} when nothing is
// colored yet); the reinserted vertex takes the smallest color outside C and
// the co-reinserted vertices take the smallest color in C. Requires every
// edge to have cardinality >= 2.
inline Coloring proper_coloring(const Hypergraph& h,
                                const DegeneracyOrder& ord) {
  for (const Edge& e : h.edges())
    if (e.members.size() <= 1)
      throw std::invalid_argument(
          "proper_coloring requires all edges to have >= 2 vertices");

  const int d = ord.degeneracy;
  Coloring col;
  for (auto it = ord.steps.rbegin(); it != ord.steps.rend(); ++it) {
    const PeelStep& step = *it;
    std::set<int> used;  // C
    for (int eid : step.removed_edges) {
      int smallest = 0;
      for (int v : h.edge(eid).members) {
        auto found = col.assignment.find(v);
        if (found != col.assignment.end() &&
            (smallest == 0 || found->second < smallest))
          smallest = found->second;
      }
      if (smallest != 0) used.insert(smallest);
    }
    if (used.empty()) used.insert(1);

    int color = 0;
    for (int c = 1; c <= d + 1; ++c)
      if (!used.count(c)) {
        color = c;
        break;
      }
    // Only reachable when d = 0, i.e. the hypergraph is edgeless; any color
    // is proper then.
    if (color == 0) color = 1;
    col.assignment[step.vertex] = color;

    int fill = *used.begin();
    for (int v : step.co_removed) col.assignment[v] = fill;
  }
  for (const auto& [v, c] : col.assignment)
    if (c > col.color_count) col.color_count = c;
  return col;
}

}  // namespace hskern
