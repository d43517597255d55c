#pragma once

// A second ground truth, written without bit tricks, for cross-checking the
// library oracle and the solvers. Plain recursion over explicit value vectors.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <set>
#include <vector>

#include "freevertex/instance.hpp"

namespace naive {

using freevertex::Clause;
using freevertex::Hypergraph;
using freevertex::NaeInstance;
using freevertex::VarId;
using freevertex::VertexId;

// value: -1 unassigned, 0 false, 1 true.
inline bool clause_ok(const Clause& c, const std::vector<int>& value) {
  bool t = false, f = false;
  for (const auto& l : c.literals()) {
    const int x = value[l.var];
    if (x < 0) continue;
    const bool lit = (x == 1) != l.negated;
    (lit ? t : f) = true;
  }
  return t && f;
}

inline bool all_ok(const NaeInstance& i, const std::vector<int>& value) {
  for (const auto& c : i.clauses())
    if (!clause_ok(c, value)) return false;
  return true;
}

// Tries every assignment of the variables not in `skip`.
inline bool exists_assignment(const NaeInstance& i, const std::set<VarId>& skip) {
  std::vector<int> value(i.var_count(), -1);
  std::function<bool(std::size_t)> rec = [&](std::size_t v) -> bool {
    if (v == i.var_count()) return all_ok(i, value);
    if (skip.count(static_cast<VarId>(v))) return rec(v + 1);
    for (int x : {0, 1}) {
      value[v] = x;
      if (rec(v + 1)) return true;
    }
    value[v] = -1;
    return false;
  };
  return rec(0);
}

inline bool satisfiable(const NaeInstance& i) { return exists_assignment(i, {}); }

inline std::vector<VarId> free_variables(const NaeInstance& i) {
  std::vector<VarId> out;
  for (VarId v = 0; v < i.var_count(); ++v)
    if (exists_assignment(i, {v})) out.push_back(v);
  return out;
}

// Edges as all-positive clauses would restrict us to size 3; colorings are
// checked directly instead.
inline bool coloring_exists(const Hypergraph& h, const std::set<VertexId>& skip) {
  std::vector<int> color(h.vertex_count(), -1);
  auto edges_ok = [&] {
    for (const auto& e : h.edges()) {
      bool one = false, two = false;
      for (VertexId u : e) {
        if (color[u] == 0) one = true;
        if (color[u] == 1) two = true;
      }
      if (!one || !two) return false;
    }
    return true;
  };
  std::function<bool(std::size_t)> rec = [&](std::size_t v) -> bool {
    if (v == h.vertex_count()) return edges_ok();
    if (skip.count(static_cast<VertexId>(v))) return rec(v + 1);
    for (int x : {0, 1}) {
      color[v] = x;
      if (rec(v + 1)) return true;
    }
    color[v] = -1;
    return false;
  };
  return rec(0);
}

inline std::vector<VertexId> free_vertices(const Hypergraph& h) {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < h.vertex_count(); ++v)
    if (coloring_exists(h, {v})) out.push_back(v);
  return out;
}

inline bool contains(const std::vector<std::uint32_t>& xs, std::uint32_t x) {
  return std::find(xs.begin(), xs.end(), x) != xs.end();
}

}  // namespace naive
