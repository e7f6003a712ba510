#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <utility>

namespace hskern {

// Simple digraph with stable positive vertex ids. Self-loops are dropped on
// insertion (normalization: a vertex outside a dominating set cannot
// dominate itself). Arc endpoints must be present in the vertex set.
class Digraph {
public:
  Digraph() = default;

  static Digraph with_vertices(int n) {
    Digraph d;
    for (int v = 1; v <= n; ++v) d.add_vertex(v);
    return d;
  }

  int n() const { return static_cast<int>(vertices_.size()); }
  int arc_count() const { return static_cast<int>(arcs_.size()); }

  const std::set<int>& vertices() const { return vertices_; }
  const std::set<std::pair<int, int>>& arcs() const { return arcs_; }

  bool has_vertex(int v) const { return vertices_.count(v) > 0; }
  bool has_arc(int u, int v) const { return arcs_.count({u, v}) > 0; }

  void add_vertex(int v) {
    if (v <= 0) throw std::invalid_argument("vertex ids must be positive");
    vertices_.insert(v);
    if (v >= next_vertex_id_) next_vertex_id_ = v + 1;
  }

  // Allocates an id never used by this instance before.
  int add_fresh_vertex() {
    int v = next_vertex_id_;
    add_vertex(v);
    return v;
  }

  // Returns false when the arc is a self-loop and was dropped.
  bool add_arc(int u, int v) {
    require_vertex(u);
    require_vertex(v);
    if (u == v) return false;
    arcs_.insert({u, v});
    return true;
  }

  void remove_vertex(int v) {
    require_vertex(v);
    vertices_.erase(v);
    for (auto it = arcs_.begin(); it != arcs_.end();) {
      if (it->first == v || it->second == v)
        it = arcs_.erase(it);
      else
        ++it;
    }
  }

  int in_degree(int v) const {
    require_vertex(v);
    int d = 0;
    for (const auto& [a, b] : arcs_)
      if (b == v) ++d;
    return d;
  }

  int out_degree(int v) const {
    require_vertex(v);
    int d = 0;
    for (const auto& [a, b] : arcs_)
      if (a == v) ++d;
    return d;
  }

  std::set<int> in_neighbors(int v) const {
    require_vertex(v);
    std::set<int> ns;
    for (const auto& [a, b] : arcs_)
      if (b == v) ns.insert(a);
    return ns;
  }

  std::set<int> out_neighbors(int v) const {
    require_vertex(v);
    std::set<int> ns;
    for (const auto& [a, b] : arcs_)
      if (a == v) ns.insert(b);
    return ns;
  }

  // N^-[v] = {v} union in-neighbors.
  std::set<int> closed_in_neighborhood(int v) const {
    std::set<int> ns = in_neighbors(v);
    ns.insert(v);
    return ns;
  }

  bool is_isolated(int v) const {
    require_vertex(v);
    for (const auto& [a, b] : arcs_)
      if (a == v || b == v) return false;
    return true;
  }

  void require_vertex(int v) const {
    if (!has_vertex(v))
      throw std::invalid_argument("unknown vertex id " + std::to_string(v));
  }

private:
  std::set<int> vertices_;
  std::set<std::pair<int, int>> arcs_;
  int next_vertex_id_ = 1;
};

// X dominates D: every vertex outside X has an in-neighbor in X.
inline bool is_dominating_set(const Digraph& d, const std::set<int>& x) {
  for (int v : d.vertices()) {
    if (x.count(v)) continue;
    bool dominated = false;
    for (int u : d.in_neighbors(v))
      if (x.count(u)) {
        dominated = true;
        break;
      }
    if (!dominated) return false;
  }
  return true;
}

}  // namespace hskern
