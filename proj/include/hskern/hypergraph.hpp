#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace hskern {

// An edge is a set of vertex ids plus a stable id. Parallel edges (equal
// member sets under distinct ids) are allowed.
struct Edge {
  int id = 0;
  std::set<int> members;
};

// Vertex/edge ids are positive and never reused within one instance's
// lifetime, so reduction traces can reference removed objects unambiguously.
// An edge with an empty member set marks the instance infeasible; it is only
// ever produced by delete_vertex and is retained (flagged via
// has_empty_edge) so callers decide what to do with it.
class Hypergraph {
public:
  Hypergraph() = default;

  static Hypergraph with_vertices(int n) {
    Hypergraph h;
    for (int v = 1; v <= n; ++v) h.add_vertex(v);
    return h;
  }

  int n() const { return static_cast<int>(vertices_.size()); }
  int m() const { return static_cast<int>(edges_.size()); }

  const std::set<int>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }

  bool has_vertex(int v) const { return vertices_.count(v) > 0; }

  bool has_edge(int id) const {
    for (const Edge& e : edges_)
      if (e.id == id) return true;
    return false;
  }

  const Edge& edge(int id) const {
    for (const Edge& e : edges_)
      if (e.id == id) return e;
    throw std::invalid_argument("unknown edge id " + std::to_string(id));
  }

  void add_vertex(int v) {
    if (v <= 0) throw std::invalid_argument("vertex ids must be positive");
    vertices_.insert(v);
  }

  int add_edge(std::set<int> members) {
    return add_edge(next_edge_id_, std::move(members));
  }

  int add_edge(int id, std::set<int> members) {
    if (id < next_edge_id_)
      throw std::invalid_argument("edge id " + std::to_string(id) +
                                  " already used");
    if (members.empty())
      throw std::invalid_argument("edges must be nonempty");
    for (int v : members)
      if (!has_vertex(v))
        throw std::invalid_argument("edge references unknown vertex " +
                                    std::to_string(v));
    edges_.push_back(Edge{id, std::move(members)});
    next_edge_id_ = id + 1;
    return id;
  }

  int degree(int v) const {
    require_vertex(v);
    int d = 0;
    for (const Edge& e : edges_)
      if (e.members.count(v)) ++d;
    return d;
  }

  // F[v]: ids of the edges containing v.
  std::set<int> incident_edges(int v) const {
    require_vertex(v);
    std::set<int> ids;
    for (const Edge& e : edges_)
      if (e.members.count(v)) ids.insert(e.id);
    return ids;
  }

  // F[T] = union of F[v] over v in T.
  std::set<int> covered_edges(const std::set<int>& t) const {
    std::set<int> ids;
    for (const Edge& e : edges_)
      for (int v : e.members)
        if (t.count(v)) {
          ids.insert(e.id);
          break;
        }
    return ids;
  }

  bool has_empty_edge() const {
    for (const Edge& e : edges_)
      if (e.members.empty()) return true;
    return false;
  }

  void require_vertex(int v) const {
    if (!has_vertex(v))
      throw std::invalid_argument("unknown vertex id " + std::to_string(v));
  }

private:
  friend Hypergraph delete_edge(const Hypergraph&, int);
  friend Hypergraph delete_vertex(const Hypergraph&, int);
  friend Hypergraph shrink(const Hypergraph&, const std::set<int>&);

  std::set<int> vertices_;
  std::vector<Edge> edges_;
  int next_edge_id_ = 1;
};

// H - e: remove one edge, vertices unchanged.
inline Hypergraph delete_edge(const Hypergraph& h, int edge_id) {
  if (!h.has_edge(edge_id))
    throw std::invalid_argument("unknown edge id " + std::to_string(edge_id));
  Hypergraph out = h;
  out.edges_.erase(
      std::remove_if(out.edges_.begin(), out.edges_.end(),
                     [&](const Edge& e) { return e.id == edge_id; }),
      out.edges_.end());
  return out;
}

// H - v: remove v from the vertex set and from every edge. Edges that become
// empty are retained; callers must check has_empty_edge().
inline Hypergraph delete_vertex(const Hypergraph& h, int v) {
  h.require_vertex(v);
  Hypergraph out = h;
  out.vertices_.erase(v);
  for (Edge& e : out.edges_) e.members.erase(v);
  return out;
}

// H (-) X: remove every edge hit by X, then every vertex whose incident
// edges were all removed (members of X with no incident edge included).
// Surviving edges keep their ids and contents, so no empty edge can appear.
inline Hypergraph shrink(const Hypergraph& h, const std::set<int>& removed) {
  for (int v : removed) h.require_vertex(v);
  Hypergraph out;
  out.next_edge_id_ = h.next_edge_id_;
  for (const Edge& e : h.edges_) {
    bool hit = false;
    for (int v : e.members)
      if (removed.count(v)) {
        hit = true;
        break;
      }
    if (!hit) out.edges_.push_back(e);
  }
  for (int v : h.vertices_) {
    bool survives_edge = false;
    for (const Edge& e : out.edges_)
      if (e.members.count(v)) {
        survives_edge = true;
        break;
      }
    if (survives_edge || (h.degree(v) == 0 && !removed.count(v)))
      out.vertices_.insert(v);
  }
  return out;
}

// S hits F: every edge intersects S. False whenever an empty edge exists.
inline bool is_hitting_set(const Hypergraph& h, const std::set<int>& s) {
  for (const Edge& e : h.edges()) {
    bool hit = false;
    for (int v : e.members)
      if (s.count(v)) {
        hit = true;
        break;
      }
    if (!hit) return false;
  }
  return true;
}

// S is independent: no edge is fully contained in S.
inline bool is_independent(const Hypergraph& h, const std::set<int>& s) {
  for (const Edge& e : h.edges()) {
    bool contained = true;
    for (int v : e.members)
      if (!s.count(v)) {
        contained = false;
        break;
      }
    if (contained) return false;
  }
  return true;
}

inline std::set<int> to_set(const std::vector<int>& xs) {
  return std::set<int>(xs.begin(), xs.end());
}

inline std::vector<int> to_sorted_vector(const std::set<int>& xs) {
  return std::vector<int>(xs.begin(), xs.end());
}

}  // namespace hskern
