#pragma once

#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "hskern/hypergraph.hpp"
#include "hskern/outcome.hpp"

namespace hskern {

// Hitting Set parameterized below m: does H have a hitting set of size at
// most m - k? k is the parameter.
struct BelowMInstance {
  Hypergraph h;
  int k = 0;

  int target() const { return h.m() - k; }
};

// |S_mini| <= k and |F[S_mini]| >= |S_mini| + k.
struct MiniHittingSet {
  std::set<int> vertices;
};

// Greedy localization stalled: C = F[S*], I = F \ C.
struct LocalizationState {
  std::set<int> s_star;
  std::set<int> covered;    // C, edge ids
  std::set<int> uncovered;  // I, edge ids
};

// Trace steps. Replaying them on the original instance reproduces the
// kernel exactly (same ids); replaying them in reverse lifts witnesses.
struct SupersetEdgeDeleted {  // k -= 1
  int kept_edge = 0;
  int deleted_edge = 0;
};
struct DominatedVertexDeleted {
  int deleted_vertex = 0;
  int dominating_vertex = 0;
};
struct UnitSelfDeleted {
  int vertex = 0;
  int edge = 0;
};
struct ClassVertexDeleted {
  int vertex = 0;
  std::set<int> class_signature;  // C[v], edge ids
};

using MStep = std::variant<SupersetEdgeDeleted, DominatedVertexDeleted,
                           UnitSelfDeleted, ClassVertexDeleted>;

inline int k_delta(const MStep& step) {
  return std::holds_alternative<SupersetEdgeDeleted>(step) ? -1 : 0;
}

using BelowMOutcome = Outcome<BelowMInstance, MStep>;

// Rule 1. If distinct edges e, e' satisfy e subset of e', delete the
// SUPERSET e' and set k := k - 1. (Its correctness argument: anything
// hitting e also hits e', so e' is redundant and m shrinks with the target.)
// First pair in edge-id order fires.
inline std::optional<std::pair<BelowMInstance, MStep>> rule_subset(
    const BelowMInstance& inst) {
  const auto& edges = inst.h.edges();
  for (const Edge& e : edges) {
    for (const Edge& bigger : edges) {
      if (e.id == bigger.id) continue;
      if (std::includes(bigger.members.begin(), bigger.members.end(),
                        e.members.begin(), e.members.end())) {
        BelowMInstance next{delete_edge(inst.h, bigger.id), inst.k - 1};
        return std::make_pair(std::move(next),
                              MStep{SupersetEdgeDeleted{e.id, bigger.id}});
      }
    }
  }
  return std::nullopt;
}

// Rule 2. If F[u] is a subset of F[v] for u != v, delete vertex u; k is
// unchanged. Smallest (u, v) in id order fires.
inline std::optional<std::pair<BelowMInstance, MStep>> rule_subelement(
    const BelowMInstance& inst) {
  for (int u : inst.h.vertices()) {
    std::set<int> fu = inst.h.incident_edges(u);
    for (int v : inst.h.vertices()) {
      if (u == v) continue;
      std::set<int> fv = inst.h.incident_edges(v);
      if (std::includes(fv.begin(), fv.end(), fu.begin(), fu.end())) {
        BelowMInstance next{delete_vertex(inst.h, u), inst.k};
        return std::make_pair(std::move(next),
                              MStep{DominatedVertexDeleted{u, v}});
      }
    }
  }
  return std::nullopt;
}

// Rule 3. If F[v] = {e} and e = {v}, delete both; k is unchanged (the
// target drops by one together with m).
inline std::optional<std::pair<BelowMInstance, MStep>> rule_unit_self(
    const BelowMInstance& inst) {
  for (int v : inst.h.vertices()) {
    std::set<int> fv = inst.h.incident_edges(v);
    if (fv.size() != 1) continue;
    const Edge& e = inst.h.edge(*fv.begin());
    if (e.members.size() == 1 && *e.members.begin() == v) {
      BelowMInstance next{delete_vertex(delete_edge(inst.h, e.id), v), inst.k};
      return std::make_pair(std::move(next), MStep{UnitSelfDeleted{v, e.id}});
    }
  }
  return std::nullopt;
}

struct MReduceResult {
  BelowMInstance inst;
  std::vector<MStep> steps;
  bool infeasible = false;  // empty edge seen, decide NO
};

// Rules 1-3 to fixpoint, priority 1 > 2 > 3. On a nonempty edge set the
// result has minimum degree >= 2 and minimum edge size >= 2.
inline MReduceResult reduce_m(const BelowMInstance& start) {
  MReduceResult r{start, {}, false};
  if (r.inst.h.has_empty_edge()) {
    r.infeasible = true;
    return r;
  }
  for (;;) {
    if (auto fired = rule_subset(r.inst)) {
      r.inst = std::move(fired->first);
      r.steps.push_back(fired->second);
      continue;
    }
    if (auto fired = rule_subelement(r.inst)) {
      r.inst = std::move(fired->first);
      r.steps.push_back(fired->second);
      continue;
    }
    if (auto fired = rule_unit_self(r.inst)) {
      r.inst = std::move(fired->first);
      r.steps.push_back(fired->second);
      continue;
    }
    return r;
  }
}

// Greedy localization: grow S* by the vertex covering the most new edges
// (ties toward the smallest id) while |F[S*]| < |S*| + k and some vertex
// still covers more than one new edge. Returns the mini-hitting set on
// success, otherwise the stalled state (C, I) satisfying the localization
// bounds. Expects a reduced instance.
inline std::variant<MiniHittingSet, LocalizationState> greedy_localize(
    const BelowMInstance& inst) {
  std::set<int> s_star;
  std::set<int> covered;
  for (;;) {
    if (static_cast<int>(covered.size()) >=
        static_cast<int>(s_star.size()) + inst.k)
      return MiniHittingSet{s_star};
    int best = 0, best_gain = 1;  // need strictly more than one new edge
    for (int v : inst.h.vertices()) {
      int gain = 0;
      for (int eid : inst.h.incident_edges(v))
        if (!covered.count(eid)) ++gain;
      if (gain > best_gain) {
        best = v;
        best_gain = gain;
      }
    }
    if (best == 0) {
      LocalizationState st;
      st.s_star = s_star;
      st.covered = covered;
      for (const Edge& e : inst.h.edges())
        if (!covered.count(e.id)) st.uncovered.insert(e.id);
      return st;
    }
    s_star.insert(best);
    for (int eid : inst.h.incident_edges(best)) covered.insert(eid);
  }
}

// Mini-hitting set -> full hitting set of size <= m - k: add the smallest
// vertex of every edge not yet hit.
inline std::set<int> expand_mini(const BelowMInstance& inst,
                                 const MiniHittingSet& mini) {
  std::set<int> s = mini.vertices;
  for (const Edge& e : inst.h.edges()) {
    bool hit = false;
    for (int v : e.members)
      if (s.count(v)) {
        hit = true;
        break;
      }
    if (!hit) {
      if (e.members.empty())
        throw std::invalid_argument("expand_mini: unhit empty edge");
      s.insert(*e.members.begin());
    }
  }
  return s;
}

// Hitting set of size <= m - k -> mini-hitting set: if |S| <= k, S itself;
// otherwise k greedy steps of maximum marginal coverage inside S.
inline MiniHittingSet compress_to_mini(const BelowMInstance& inst,
                                       const std::set<int>& s) {
  if (!is_hitting_set(inst.h, s) ||
      static_cast<int>(s.size()) > inst.target())
    throw std::invalid_argument(
        "compress_to_mini: input must be a hitting set of size <= m - k");
  if (static_cast<int>(s.size()) <= inst.k) return MiniHittingSet{s};
  std::set<int> si;
  std::set<int> covered;
  for (int step = 0; step < inst.k; ++step) {
    int best = 0, best_gain = -1;
    for (int v : s) {
      if (si.count(v)) continue;
      int gain = 0;
      for (int eid : inst.h.incident_edges(v))
        if (!covered.count(eid)) ++gain;
      if (gain > best_gain) {
        best = v;
        best_gain = gain;
      }
    }
    si.insert(best);
    for (int eid : inst.h.incident_edges(best)) covered.insert(eid);
  }
  return MiniHittingSet{si};
}

// Rule 4. Partition vertices by class signature C[v]; if some class has
// more than k members, delete its smallest-id vertex (H - v). The instance
// must be reduced and the state must come from a stalled greedy_localize.
inline std::optional<std::pair<BelowMInstance, MStep>> rule_c_neighbourhood(
    const BelowMInstance& inst, const LocalizationState& state) {
  std::map<std::set<int>, int> class_size;
  std::map<int, std::set<int>> signature;
  for (int v : inst.h.vertices()) {
    std::set<int> sig;
    for (int eid : inst.h.incident_edges(v))
      if (state.covered.count(eid)) sig.insert(eid);
    ++class_size[sig];
    signature.emplace(v, std::move(sig));
  }
  for (int v : inst.h.vertices()) {
    const std::set<int>& sig = signature[v];
    if (class_size[sig] > inst.k) {
      BelowMInstance next{delete_vertex(inst.h, v), inst.k};
      return std::make_pair(std::move(next),
                            MStep{ClassVertexDeleted{v, sig}});
    }
  }
  return std::nullopt;
}

// Reverse replay: Rule 3 deletions force their vertex back into the
// witness; every other step passes the witness through unchanged.
inline std::vector<int> lift_witness_m(const std::vector<MStep>& trace,
                                       const std::vector<int>& witness) {
  std::set<int> s(witness.begin(), witness.end());
  for (auto it = trace.rbegin(); it != trace.rend(); ++it)
    if (const auto* step = std::get_if<UnitSelfDeleted>(&*it))
      s.insert(step->vertex);
  return to_sorted_vector(s);
}

// Full pipeline: reduce, localize, expand a mini into a YES witness, or
// apply Rule 4 and restart. Every restart shrinks n or m, so this
// terminates; the emitted kernel has at most k * 4^k vertices and edges.
inline BelowMOutcome kernelize_below_m(BelowMInstance inst) {
  std::vector<MStep> trace;
  for (;;) {
    if (inst.h.has_empty_edge()) return Decided{false, {}};
    if (inst.k <= 0) {
      std::set<int> w;
      for (const Edge& e : inst.h.edges()) w.insert(*e.members.begin());
      return Decided{true, lift_witness_m(trace, to_sorted_vector(w))};
    }
    if (inst.k > inst.h.m()) return Decided{false, {}};

    MReduceResult red = reduce_m(inst);
    inst = std::move(red.inst);
    for (MStep& s : red.steps) trace.push_back(std::move(s));
    if (inst.k <= 0 || inst.k > inst.h.m()) continue;

    auto local = greedy_localize(inst);
    if (const auto* mini = std::get_if<MiniHittingSet>(&local)) {
      std::set<int> s = expand_mini(inst, *mini);
      return Decided{true, lift_witness_m(trace, to_sorted_vector(s))};
    }
    auto fired =
        rule_c_neighbourhood(inst, std::get<LocalizationState>(local));
    if (!fired) return Kernel<BelowMInstance, MStep>{std::move(inst), trace};
    inst = std::move(fired->first);
    trace.push_back(fired->second);
  }
}

// Applies recorded steps mechanically; used to check that traces reproduce
// kernels id-for-id.
inline BelowMInstance replay_m(BelowMInstance inst,
                               const std::vector<MStep>& trace) {
  for (const MStep& step : trace) {
    if (const auto* s = std::get_if<SupersetEdgeDeleted>(&step)) {
      inst.h = delete_edge(inst.h, s->deleted_edge);
      inst.k -= 1;
    } else if (const auto* s = std::get_if<DominatedVertexDeleted>(&step)) {
      inst.h = delete_vertex(inst.h, s->deleted_vertex);
    } else if (const auto* s = std::get_if<UnitSelfDeleted>(&step)) {
      inst.h = delete_vertex(delete_edge(inst.h, s->edge), s->vertex);
    } else if (const auto* s = std::get_if<ClassVertexDeleted>(&step)) {
      inst.h = delete_vertex(inst.h, s->vertex);
    }
  }
  return inst;
}

}  // namespace hskern
