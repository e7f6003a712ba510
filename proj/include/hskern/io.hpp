#pragma once

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "hskern/below_m.hpp"
#include "hskern/below_n.hpp"
#include "hskern/digraph.hpp"
#include "hskern/hypergraph.hpp"
#include "hskern/nonblocker.hpp"

namespace hskern {

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

inline std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

inline int parse_int(const std::string& tok, const char* what) {
  try {
    size_t pos = 0;
    int value = std::stoi(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument(tok);
    return value;
  } catch (const std::exception&) {
    throw ParseError(std::string("bad ") + what + ": '" + tok + "'");
  }
}

inline bool is_comment(const std::string& line) {
  for (char c : line) {
    if (c == ' ' || c == '\t') continue;
    return c == 'c';
  }
  return false;
}

inline bool is_blank(const std::string& line) {
  for (char c : line)
    if (c != ' ' && c != '\t' && c != '\r') return false;
  return true;
}

// Lines of the input with comments stripped; blank lines survive so the
// parser can reject empty edge lines.
inline std::vector<std::string> content_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (is_comment(line)) continue;
    out.push_back(line);
  }
  return out;
}

}  // namespace detail

// Format: header `p hg <n> <m>`, then m lines of space-separated 1-based
// vertex ids. `c` lines are comments. Duplicate ids within a line, ids out
// of [1..n], empty edge lines and malformed headers are errors.
inline Hypergraph parse_hypergraph(const std::string& text) {
  auto lines = detail::content_lines(text);
  size_t i = 0;
  while (i < lines.size() && detail::is_blank(lines[i])) ++i;
  if (i == lines.size()) throw ParseError("missing 'p hg' header");
  auto head = detail::split_ws(lines[i]);
  if (head.size() != 4 || head[0] != "p" || head[1] != "hg")
    throw ParseError("malformed header: '" + lines[i] + "'");
  int n = detail::parse_int(head[2], "vertex count");
  int m = detail::parse_int(head[3], "edge count");
  if (n < 0 || m < 0) throw ParseError("negative counts in header");
  ++i;

  Hypergraph h = Hypergraph::with_vertices(n);
  for (int read = 0; read < m; ++read, ++i) {
    if (i >= lines.size()) throw ParseError("missing edge lines");
    auto toks = detail::split_ws(lines[i]);
    if (toks.empty()) throw ParseError("empty edge line");
    std::set<int> members;
    for (const std::string& tok : toks) {
      int v = detail::parse_int(tok, "vertex id");
      if (v < 1 || v > n)
        throw ParseError("vertex id " + std::to_string(v) +
                         " out of range 1.." + std::to_string(n));
      if (!members.insert(v).second)
        throw ParseError("duplicate vertex " + std::to_string(v) +
                         " in edge line");
    }
    h.add_edge(std::move(members));
  }
  for (; i < lines.size(); ++i)
    if (!detail::is_blank(lines[i]))
      throw ParseError("trailing content: '" + lines[i] + "'");
  return h;
}

// Format: header `p dg <n> <a>`, then a lines `u v` meaning the arc u -> v.
// Self-loops are dropped with a warning rather than rejected.
inline Digraph parse_digraph(const std::string& text,
                             std::vector<std::string>* warnings = nullptr) {
  auto lines = detail::content_lines(text);
  size_t i = 0;
  while (i < lines.size() && detail::is_blank(lines[i])) ++i;
  if (i == lines.size()) throw ParseError("missing 'p dg' header");
  auto head = detail::split_ws(lines[i]);
  if (head.size() != 4 || head[0] != "p" || head[1] != "dg")
    throw ParseError("malformed header: '" + lines[i] + "'");
  int n = detail::parse_int(head[2], "vertex count");
  int a = detail::parse_int(head[3], "arc count");
  if (n < 0 || a < 0) throw ParseError("negative counts in header");
  ++i;

  Digraph d = Digraph::with_vertices(n);
  for (int read = 0; read < a; ++read, ++i) {
    if (i >= lines.size()) throw ParseError("missing arc lines");
    auto toks = detail::split_ws(lines[i]);
    if (toks.size() != 2)
      throw ParseError("arc line must be 'u v': '" + lines[i] + "'");
    int u = detail::parse_int(toks[0], "vertex id");
    int v = detail::parse_int(toks[1], "vertex id");
    for (int x : {u, v})
      if (x < 1 || x > n)
        throw ParseError("vertex id " + std::to_string(x) +
                         " out of range 1.." + std::to_string(n));
    if (!d.add_arc(u, v) && warnings)
      warnings->push_back("self-loop " + std::to_string(u) + " " +
                          std::to_string(v) + " dropped");
  }
  for (; i < lines.size(); ++i)
    if (!detail::is_blank(lines[i]))
      throw ParseError("trailing content: '" + lines[i] + "'");
  return d;
}

namespace detail {

// 1-based contiguous renumbering in ascending id order. Emits `c map` lines
// only when ids actually move.
inline std::map<int, int> renumber(const std::set<int>& vertices,
                                   std::string* comments) {
  std::map<int, int> map;
  int next = 1;
  for (int v : vertices) map[v] = next++;
  bool identity = true;
  for (const auto& [old_id, new_id] : map)
    if (old_id != new_id) identity = false;
  if (!identity && comments) {
    std::ostringstream out;
    for (const auto& [old_id, new_id] : map)
      out << "c map " << new_id << " " << old_id << "\n";
    *comments += out.str();
  }
  return map;
}

}  // namespace detail

inline std::string serialize_hypergraph(const Hypergraph& h) {
  std::string comments;
  std::map<int, int> map = detail::renumber(h.vertices(), &comments);
  std::ostringstream out;
  out << comments << "p hg " << h.n() << " " << h.m() << "\n";
  for (const Edge& e : h.edges()) {
    std::set<int> renamed;
    for (int v : e.members) renamed.insert(map.at(v));
    bool first = true;
    for (int v : renamed) {
      if (!first) out << " ";
      out << v;
      first = false;
    }
    out << "\n";
  }
  return out.str();
}

inline std::string serialize_digraph(const Digraph& d) {
  std::string comments;
  std::map<int, int> map = detail::renumber(d.vertices(), &comments);
  std::set<std::pair<int, int>> renamed;
  for (const auto& [u, v] : d.arcs()) renamed.insert({map.at(u), map.at(v)});
  std::ostringstream out;
  out << comments << "p dg " << d.n() << " " << renamed.size() << "\n";
  for (const auto& [u, v] : renamed) out << u << " " << v << "\n";
  return out.str();
}

// Witness files: whitespace-separated vertex ids, `c` comment lines allowed.
inline std::vector<int> parse_witness(const std::string& text) {
  std::vector<int> out;
  for (const std::string& line : detail::content_lines(text))
    for (const std::string& tok : detail::split_ws(line))
      out.push_back(detail::parse_int(tok, "witness vertex id"));
  return out;
}

inline std::string serialize_witness(const std::vector<int>& witness) {
  std::ostringstream out;
  bool first = true;
  for (int v : witness) {
    if (!first) out << " ";
    out << v;
    first = false;
  }
  out << "\n";
  return out.str();
}

// DIMACS CNF with only negative literals: one clause per edge, plus a
// `c k <k>` comment. A hitting set of size n - k exists iff the formula has
// a satisfying assignment with exactly k variables true.
inline std::string export_cnf(const BelowNInstance& inst) {
  std::string comments;
  std::map<int, int> map = detail::renumber(inst.h.vertices(), &comments);
  std::ostringstream out;
  out << "c k " << inst.k << "\n"
      << comments << "p cnf " << inst.h.n() << " " << inst.h.m() << "\n";
  for (const Edge& e : inst.h.edges()) {
    std::set<int> renamed;
    for (int v : e.members) renamed.insert(map.at(v));
    for (int v : renamed) out << "-" << v << " ";
    out << "0\n";
  }
  return out.str();
}

// Trace files: one rule application per line, `tag ids... k-delta`.

inline std::string serialize_trace(const std::vector<MStep>& trace) {
  std::ostringstream out;
  for (const MStep& step : trace) {
    if (const auto* s = std::get_if<SupersetEdgeDeleted>(&step)) {
      out << "superset " << s->kept_edge << " " << s->deleted_edge << " -1\n";
    } else if (const auto* s = std::get_if<DominatedVertexDeleted>(&step)) {
      out << "subelement " << s->deleted_vertex << " " << s->dominating_vertex
          << " 0\n";
    } else if (const auto* s = std::get_if<UnitSelfDeleted>(&step)) {
      out << "unitself " << s->vertex << " " << s->edge << " 0\n";
    } else if (const auto* s = std::get_if<ClassVertexDeleted>(&step)) {
      out << "classdel " << s->vertex << " " << s->class_signature.size();
      for (int eid : s->class_signature) out << " " << eid;
      out << " 0\n";
    }
  }
  return out.str();
}

inline std::string serialize_trace(const std::vector<NStep>& trace) {
  std::ostringstream out;
  for (const NStep& step : trace) {
    out << "unitshrink " << step.forced_vertex << " " << step.t();
    for (int v : step.co_removed) out << " " << v;
    out << " " << -step.t() << "\n";
  }
  return out.str();
}

inline std::string serialize_trace(const std::vector<NBStep>& trace) {
  std::ostringstream out;
  for (const NBStep& step : trace) {
    if (const auto* s = std::get_if<IsolatedDeleted>(&step)) {
      out << "isolated " << s->vertex << " 0\n";
    } else if (const auto* s = std::get_if<SourcesContracted>(&step)) {
      out << "contract " << s->new_vertex << " " << s->sources.size();
      for (int v : s->sources) out << " " << v;
      out << " 0\n";
    }
  }
  return out.str();
}

namespace detail {

inline std::vector<std::vector<std::string>> trace_rows(
    const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  for (const std::string& line : content_lines(text)) {
    if (is_blank(line)) continue;
    rows.push_back(split_ws(line));
  }
  return rows;
}

inline void expect_tokens(const std::vector<std::string>& row, size_t count) {
  if (row.size() != count)
    throw ParseError("trace line has wrong arity: '" + row[0] + "'");
}

}  // namespace detail

inline std::vector<MStep> parse_m_trace(const std::string& text) {
  std::vector<MStep> out;
  for (const auto& row : detail::trace_rows(text)) {
    const std::string& tag = row[0];
    if (tag == "superset") {
      detail::expect_tokens(row, 4);
      out.push_back(SupersetEdgeDeleted{
          detail::parse_int(row[1], "edge id"),
          detail::parse_int(row[2], "edge id")});
    } else if (tag == "subelement") {
      detail::expect_tokens(row, 4);
      out.push_back(DominatedVertexDeleted{
          detail::parse_int(row[1], "vertex id"),
          detail::parse_int(row[2], "vertex id")});
    } else if (tag == "unitself") {
      detail::expect_tokens(row, 4);
      out.push_back(UnitSelfDeleted{detail::parse_int(row[1], "vertex id"),
                                    detail::parse_int(row[2], "edge id")});
    } else if (tag == "classdel") {
      if (row.size() < 3) throw ParseError("classdel line too short");
      int count = detail::parse_int(row[2], "signature size");
      detail::expect_tokens(row, static_cast<size_t>(count) + 4);
      ClassVertexDeleted step;
      step.vertex = detail::parse_int(row[1], "vertex id");
      for (int j = 0; j < count; ++j)
        step.class_signature.insert(
            detail::parse_int(row[3 + j], "edge id"));
      out.push_back(std::move(step));
    } else {
      throw ParseError("unknown trace tag '" + tag + "'");
    }
  }
  return out;
}

inline std::vector<NStep> parse_n_trace(const std::string& text) {
  std::vector<NStep> out;
  for (const auto& row : detail::trace_rows(text)) {
    if (row[0] != "unitshrink")
      throw ParseError("unknown trace tag '" + row[0] + "'");
    if (row.size() < 3) throw ParseError("unitshrink line too short");
    int t = detail::parse_int(row[2], "co-removed count");
    detail::expect_tokens(row, static_cast<size_t>(t) + 4);
    NStep step;
    step.forced_vertex = detail::parse_int(row[1], "vertex id");
    for (int j = 0; j < t; ++j)
      step.co_removed.push_back(detail::parse_int(row[3 + j], "vertex id"));
    out.push_back(std::move(step));
  }
  return out;
}

inline std::vector<NBStep> parse_nb_trace(const std::string& text) {
  std::vector<NBStep> out;
  for (const auto& row : detail::trace_rows(text)) {
    if (row[0] == "isolated") {
      detail::expect_tokens(row, 3);
      out.push_back(IsolatedDeleted{detail::parse_int(row[1], "vertex id")});
    } else if (row[0] == "contract") {
      if (row.size() < 3) throw ParseError("contract line too short");
      int count = detail::parse_int(row[2], "source count");
      detail::expect_tokens(row, static_cast<size_t>(count) + 4);
      SourcesContracted step;
      step.new_vertex = detail::parse_int(row[1], "vertex id");
      for (int j = 0; j < count; ++j)
        step.sources.push_back(detail::parse_int(row[3 + j], "vertex id"));
      out.push_back(std::move(step));
    } else {
      throw ParseError("unknown trace tag '" + row[0] + "'");
    }
  }
  return out;
}

}  // namespace hskern
