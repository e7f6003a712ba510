#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hskern/degeneracy.hpp"
#include "hskern/hypergraph.hpp"
#include "hskern/outcome.hpp"

namespace hskern {

// Hitting Set parameterized below n: does H have a hitting set of size at
// most n - k? Equivalently, an independent set of size at least k. The
// hypergraph degeneracy d acts as the co-parameter.
struct BelowNInstance {
  Hypergraph h;
  int k = 0;

  int target() const { return h.n() - k; }
};

// Rule 5 application at a unit edge {v}: H := H (-) {v}. The forced vertex
// is v; co_removed lists the free vertices the shrink took with it. Every
// co-removed vertex lay only in edges containing v, so it joins any
// independent set freely: alpha(H) = alpha(H (-) {v}) + t with
// t = |co_removed|, hence k := k - t.
struct UnitEdgeShrunk {
  int forced_vertex = 0;
  std::vector<int> co_removed;

  int t() const { return static_cast<int>(co_removed.size()); }
};

using NStep = UnitEdgeShrunk;
using BelowNOutcome = Outcome<BelowNInstance, NStep>;

inline int k_delta(const NStep& step) { return -step.t(); }

// Fires on the first unit edge in edge-id order, if any.
inline std::optional<std::pair<BelowNInstance, NStep>> rule_unit_edge(
    const BelowNInstance& inst) {
  for (const Edge& e : inst.h.edges()) {
    if (e.members.size() != 1) continue;
    int v = *e.members.begin();
    Hypergraph next = shrink(inst.h, {v});
    NStep step;
    step.forced_vertex = v;
    for (int u : inst.h.vertices())
      if (u != v && !next.has_vertex(u)) step.co_removed.push_back(u);
    BelowNInstance out{std::move(next), inst.k - step.t()};
    return std::make_pair(std::move(out), std::move(step));
  }
  return std::nullopt;
}

// Reverse replay: each step adds its forced vertex back (the free
// co-removed vertices are never needed in a hitting set).
inline std::vector<int> lift_witness_n(const std::vector<NStep>& trace,
                                       const std::vector<int>& witness) {
  std::set<int> s(witness.begin(), witness.end());
  for (auto it = trace.rbegin(); it != trace.rend(); ++it)
    s.insert(it->forced_vertex);
  return to_sorted_vector(s);
}

// Decide-or-kernelize: eliminate unit edges, then either answer YES via the
// complement of a largest color class of a proper (d+1)-coloring, or emit a
// kernel with n < (d+1)k and m <= d*n.
inline BelowNOutcome decide_or_kernel_below_n(BelowNInstance inst) {
  if (inst.h.has_empty_edge()) return Decided{false, {}};
  std::vector<NStep> trace;
  while (auto fired = rule_unit_edge(inst)) {
    inst = std::move(fired->first);
    trace.push_back(std::move(fired->second));
  }
  if (inst.k <= 0)
    return Decided{true,
                   lift_witness_n(trace, to_sorted_vector(inst.h.vertices()))};
  if (inst.k > inst.h.n()) return Decided{false, {}};

  DegeneracyOrder ord = degeneracy_order(inst.h);
  const int d = ord.degeneracy;
  if (inst.h.n() >= (d + 1) * inst.k) {
    Coloring col = proper_coloring(inst.h, ord);
    // Largest color class; ties toward the class holding the smallest id.
    std::map<int, std::vector<int>> classes;
    for (int v : inst.h.vertices()) classes[col.assignment.at(v)].push_back(v);
    const std::vector<int>* best = nullptr;
    for (const auto& [color, members] : classes) {
      if (!best || members.size() > best->size() ||
          (members.size() == best->size() &&
           members.front() < best->front()))
        best = &members;
    }
    std::set<int> witness = inst.h.vertices();
    for (int v : *best) witness.erase(v);
    return Decided{true, lift_witness_n(trace, to_sorted_vector(witness))};
  }
  return Kernel<BelowNInstance, NStep>{std::move(inst), std::move(trace)};
}

inline BelowNInstance replay_n(BelowNInstance inst,
                               const std::vector<NStep>& trace) {
  for (const NStep& step : trace) {
    inst.h = shrink(inst.h, {step.forced_vertex});
    inst.k -= step.t();
  }
  return inst;
}

}  // namespace hskern
