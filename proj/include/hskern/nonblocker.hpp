#pragma once

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "hskern/below_n.hpp"
#include "hskern/digraph.hpp"
#include "hskern/hypergraph.hpp"
#include "hskern/outcome.hpp"

namespace hskern {

// Directed Nonblocker: does D have a dominating set of size at most n - k?
struct NonblockerInstance {
  Digraph d;
  int k = 0;

  int target() const { return d.n() - k; }
};

struct IsolatedDeleted {
  int vertex = 0;
};
struct SourcesContracted {
  std::vector<int> sources;  // the contracted in-degree-0 vertices
  int new_vertex = 0;        // fresh id standing in for all of them
};

using NBStep = std::variant<IsolatedDeleted, SourcesContracted>;
using NonblockerOutcome = Outcome<NonblockerInstance, NBStep>;

// Isolated vertices belong to every dominating set; deleting them keeps the
// answer (the target n - k shrinks in step). k is unchanged.
inline std::pair<NonblockerInstance, std::vector<NBStep>> strip_isolated(
    const NonblockerInstance& inst) {
  NonblockerInstance out = inst;
  std::vector<NBStep> steps;
  std::vector<int> isolated;
  for (int v : out.d.vertices())
    if (out.d.is_isolated(v)) isolated.push_back(v);
  for (int v : isolated) {
    out.d.remove_vertex(v);
    steps.push_back(IsolatedDeleted{v});
  }
  return {std::move(out), std::move(steps)};
}

// All in-degree-0 vertices are forced into every dominating set; when there
// is more than one, contract them into a single fresh vertex s with
// out-neighborhood N+(S). Expects no isolated vertices.
inline std::optional<std::pair<NonblockerInstance, NBStep>> contract_sources(
    const NonblockerInstance& inst) {
  std::vector<int> sources;
  for (int v : inst.d.vertices())
    if (inst.d.in_degree(v) == 0) sources.push_back(v);
  if (sources.size() <= 1) return std::nullopt;

  NonblockerInstance out = inst;
  std::set<int> heads;
  for (int v : sources) {
    for (int w : out.d.out_neighbors(v)) heads.insert(w);
    out.d.remove_vertex(v);
  }
  int s = out.d.add_fresh_vertex();
  for (int w : heads) out.d.add_arc(s, w);
  return std::make_pair(std::move(out),
                        NBStep{SourcesContracted{sources, s}});
}

// If some vertex has out-degree >= k, the complement of its out-neighborhood
// dominates with at most n - k vertices.
inline std::optional<Decided> high_outdegree_rule(
    const NonblockerInstance& inst) {
  for (int v : inst.d.vertices()) {
    std::set<int> outs = inst.d.out_neighbors(v);
    if (static_cast<int>(outs.size()) >= inst.k) {
      std::set<int> witness = inst.d.vertices();
      for (int w : outs) witness.erase(w);
      return Decided{true, to_sorted_vector(witness)};
    }
  }
  return std::nullopt;
}

// Domination as hitting: one edge N^-[v] per vertex v, tagged with v as the
// edge id. S hits N^-[v] iff v is in S or dominated by S, so dominating
// sets of size s correspond exactly to hitting sets of size s.
inline Hypergraph to_hitting_set(const Digraph& d) {
  Hypergraph h;
  for (int v : d.vertices()) h.add_vertex(v);
  for (int v : d.vertices()) h.add_edge(v, d.closed_in_neighborhood(v));
  return h;
}

// Constructive hitting set of size at most floor((n + m) / 3): take the
// unit-edge vertex if present, otherwise a maximum-degree vertex (ties
// toward the smallest id), and shrink it away. Requires at most one unit
// edge whose vertex lies in another edge, and no empty edges.
inline std::vector<int> hitting_set_third(const Hypergraph& input) {
  int units = 0;
  for (const Edge& e : input.edges()) {
    if (e.members.empty())
      throw std::invalid_argument("hitting_set_third: empty edge");
    if (e.members.size() == 1) {
      ++units;
      int v = *e.members.begin();
      if (input.degree(v) < 2)
        throw std::invalid_argument(
            "hitting_set_third: unit-edge vertex must lie in another edge");
    }
  }
  if (units > 1)
    throw std::invalid_argument("hitting_set_third: more than one unit edge");

  std::set<int> s;
  Hypergraph cur = input;
  while (cur.m() > 0) {
    int picked = 0;
    for (const Edge& e : cur.edges())
      if (e.members.size() == 1) {
        picked = *e.members.begin();
        break;
      }
    if (picked == 0) {
      int best_degree = -1;
      for (int v : cur.vertices()) {
        int deg = cur.degree(v);
        if (deg > best_degree) {
          best_degree = deg;
          picked = v;
        }
      }
    }
    s.insert(picked);
    cur = shrink(cur, {picked});
  }
  return to_sorted_vector(s);
}

// Dominating set of size at most floor(2n / 3) for a digraph with no
// isolated vertices and at most one source: run hitting_set_third on the
// domination hypergraph, where |V| = |F|.
inline std::vector<int> dominating_two_thirds(const Digraph& d) {
  int sources = 0;
  for (int v : d.vertices()) {
    if (d.is_isolated(v))
      throw std::invalid_argument("dominating_two_thirds: isolated vertex");
    if (d.in_degree(v) == 0) ++sources;
  }
  if (sources > 1)
    throw std::invalid_argument(
        "dominating_two_thirds: more than one in-degree-0 vertex");
  return hitting_set_third(to_hitting_set(d));
}

// Reverse replay: a contracted source vertex is swapped back for the
// original source set (it must be in any valid witness, having in-degree 0);
// isolated vertices rejoin the witness.
inline std::vector<int> lift_witness_nb(const std::vector<NBStep>& trace,
                                        const std::vector<int>& witness) {
  std::set<int> s(witness.begin(), witness.end());
  for (auto it = trace.rbegin(); it != trace.rend(); ++it) {
    if (const auto* step = std::get_if<SourcesContracted>(&*it)) {
      if (!s.count(step->new_vertex))
        throw std::invalid_argument(
            "lift_witness_nb: witness misses the contracted source vertex");
      s.erase(step->new_vertex);
      s.insert(step->sources.begin(), step->sources.end());
    } else if (const auto* step = std::get_if<IsolatedDeleted>(&*it)) {
      s.insert(step->vertex);
    }
  }
  return to_sorted_vector(s);
}

// Strip isolated vertices, contract sources, then decide YES via the 2n/3
// bound or emit a kernel with n <= 3k - 1.
inline NonblockerOutcome kernelize_nonblocker(const NonblockerInstance& input) {
  auto [inst, trace] = strip_isolated(input);
  if (auto contracted = contract_sources(inst)) {
    inst = std::move(contracted->first);
    trace.push_back(std::move(contracted->second));
  }
  if (inst.k <= 0)
    return Decided{true,
                   lift_witness_nb(trace, to_sorted_vector(inst.d.vertices()))};
  if (inst.d.n() >= 3 * inst.k)
    return Decided{true, lift_witness_nb(trace, dominating_two_thirds(inst.d))};
  return Kernel<NonblockerInstance, NBStep>{std::move(inst), std::move(trace)};
}

// Alternate route kept for cross-validation: the out-degree rule, then the
// below-n pipeline on the domination hypergraph. Kernels have at most
// k^2 + k - 1 vertices (degeneracy <= max degree <= k there); decisions
// agree with kernelize_nonblocker.
inline BelowNOutcome kernelize_nonblocker_quadratic(
    const NonblockerInstance& inst) {
  if (auto decided = high_outdegree_rule(inst)) return *decided;
  return decide_or_kernel_below_n(
      BelowNInstance{to_hitting_set(inst.d), inst.k});
}

inline NonblockerInstance replay_nb(NonblockerInstance inst,
                                    const std::vector<NBStep>& trace) {
  for (const NBStep& step : trace) {
    if (const auto* s = std::get_if<IsolatedDeleted>(&step)) {
      inst.d.remove_vertex(s->vertex);
    } else if (const auto* s = std::get_if<SourcesContracted>(&step)) {
      std::set<int> heads;
      for (int v : s->sources) {
        for (int w : inst.d.out_neighbors(v)) heads.insert(w);
        inst.d.remove_vertex(v);
      }
      inst.d.add_vertex(s->new_vertex);
      for (int w : heads) inst.d.add_arc(s->new_vertex, w);
    }
  }
  return inst;
}

}  // namespace hskern
