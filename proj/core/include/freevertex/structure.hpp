#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "freevertex/assignment.hpp"
#include "freevertex/instance.hpp"

namespace freevertex {

// ---------------------------------------------------------------------------
// Hypergraph <-> instance correspondence
// ---------------------------------------------------------------------------

/// One all-positive clause per edge over the same index space. With
/// `require_3_uniform` an edge of another size raises NonUniformEdge; without
/// it such edges are skipped.
NaeInstance instance_from_hypergraph(const Hypergraph& h, bool require_3_uniform = true);

/// Clauses read back as edges (polarity dropped).
Hypergraph hypergraph_from_instance(const NaeInstance& i);

// ---------------------------------------------------------------------------
// Degrees, adjacency, components
// ---------------------------------------------------------------------------

std::size_t degree(const NaeInstance& i, VarId v);
std::size_t degree(const Hypergraph& h, VertexId u);
std::vector<std::size_t> degrees(const NaeInstance& i);
std::vector<std::size_t> degrees(const Hypergraph& h);

/// Sorted, duplicate-free neighbour lists of the associated graph.
std::vector<std::vector<VarId>> associated_graph(const NaeInstance& i);

/// A connectivity class: its variables (vertices) ascending, and the ids of the
/// clauses (edges) that live inside it, ascending.
struct Component {
  std::vector<std::uint32_t> members;
  std::vector<std::size_t> items;
};

/// Components ordered by their smallest member. Isolated variables form
/// singleton components without clauses.
std::vector<Component> components(const NaeInstance& i);
std::vector<Component> components(const Hypergraph& h);

bool is_connected(const NaeInstance& i);
bool is_connected(const Hypergraph& h);

// ---------------------------------------------------------------------------
// Surgery with index translation
// ---------------------------------------------------------------------------

inline constexpr std::uint32_t kNoParent = std::numeric_limits<std::uint32_t>::max();

/// to_parent[child index] = parent index (kNoParent for objects introduced by
/// the surgery itself).
struct IndexMap {
  std::vector<std::uint32_t> to_parent;

  static IndexMap identity(std::size_t n);
  std::size_t size() const noexcept { return to_parent.size(); }
  std::uint32_t operator[](std::size_t child) const { return to_parent.at(child); }

  /// Map for grandchild -> parent given `inner` (grandchild -> child).
  IndexMap compose(const IndexMap& inner) const;
  /// parent index -> child index, kNoParent where the parent index was dropped.
  std::vector<std::uint32_t> inverse(std::size_t parent_count) const;

  friend bool operator==(const IndexMap&, const IndexMap&) = default;
};

template <class T>
struct Derived {
  T value;
  IndexMap vars;   // variables / vertices
  IndexMap items;  // clauses / edges
};

Derived<NaeInstance> delete_clause(const NaeInstance& i, std::size_t clause);
/// Raises DanglingVariable if `v` still occurs in a clause.
Derived<NaeInstance> delete_variable(const NaeInstance& i, VarId v);
NaeInstance substitute_literal(const NaeInstance& i, std::size_t clause, std::size_t position, Literal lit);

Derived<Hypergraph> delete_edge(const Hypergraph& h, std::size_t edge);
Hypergraph add_edge(const Hypergraph& h, Hypergraph::Edge edge);

/// Sub-instance on `vars` (parent ids, any order; kept in ascending order)
/// holding the parent clauses `clause_ids` followed by `extra` clauses written
/// in parent indices. Every mentioned variable must be kept.
Derived<NaeInstance> restrict_instance(const NaeInstance& i, std::span<const VarId> vars,
                                       std::span<const std::size_t> clause_ids,
                                       std::span<const Clause> extra = {});

/// Sub-hypergraph on `vertices` with the parent edges `edge_ids`.
Derived<Hypergraph> restrict_hypergraph(const Hypergraph& h, std::span<const VertexId> vertices,
                                        std::span<const std::size_t> edge_ids);

/// Writes a child-indexed vector into a parent-indexed one.
template <class T>
void scatter(const std::vector<T>& child, const IndexMap& map, std::vector<T>& parent) {
  for (std::size_t c = 0; c < child.size(); ++c) parent.at(map[c]) = child[c];
}

template <class T>
std::vector<T> lift(const std::vector<T>& child, const IndexMap& map, std::size_t parent_count, T fill) {
  std::vector<T> parent(parent_count, fill);
  scatter(child, map, parent);
  return parent;
}

NaeCertificate lift(const NaeCertificate& child, const IndexMap& vars, std::size_t parent_count);
ColoringCertificate lift(const ColoringCertificate& child, const IndexMap& vertices, std::size_t parent_count);

}  // namespace freevertex
