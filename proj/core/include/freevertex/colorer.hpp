#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "freevertex/assignment.hpp"
#include "freevertex/instance.hpp"
#include "freevertex/structure.hpp"

namespace freevertex::color {

/// Total coloring with no monochromatic edge, found by backtracking. An edge
/// whose colored vertices all share one color and that has a single uncolored
/// vertex forces that vertex to the other color. Branching takes the lowest
/// uncolored vertex and tries color One first. Raises NotTwoColorable when the
/// search is exhausted.
PartialColoring two_color(const Hypergraph& h);

/// Two certificates of the same 3-uniform hypergraph with distinct free
/// vertices.
struct TwoFree {
  ColoringCertificate primary;
  VertexId alternate_free = 0;
  ColoringCertificate alternate;
};

/// Requires h connected, 3-uniform, without isolated vertices, with fewer
/// edges than vertices and maximum degree at most 3 (PreconditionViolated
/// otherwise). The primary certificate comes from the NAE solver; the alternate
/// one uncolors the smallest vertex u that is neither the primary free vertex
/// nor fixed by an edge avoiding it, and gives the primary free vertex u's
/// color.
TwoFree lemma_two_free(const Hypergraph& h);

/// Why h is outside lemma_two_free's domain, or nullopt.
std::optional<std::string> lemma_failure(const Hypergraph& h);

/// v_star[e]: the vertex whose color is unique in edge e, if any.
/// e_star[u]: the edge in which u is that vertex. When several edges qualify
/// the smallest id is kept; when all vertices of a 4-regular 4-uniform
/// hypergraph are fixed the maps are mutually inverse bijections.
struct StarMaps {
  std::vector<std::optional<VertexId>> v_star;
  std::vector<std::optional<std::size_t>> e_star;

  bool all_fixed() const noexcept;
};

StarMaps star_maps(const Hypergraph& h, const PartialColoring& c);

/// The 4-edge a derived 3-edge came from, and the vertex removed from it.
struct Provenance {
  std::size_t edge = 0;
  VertexId apex = 0;

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

/// One color class with its derived 3-uniform hypergraph. Local vertex k is
/// global vertex vertices[k]; vertices are listed in ascending order.
struct DerivedSide {
  Hypergraph graph;
  IndexMap vertices;
  std::vector<Provenance> provenance;
};

/// side[0] lives on the color One class and holds e_u = e*(u) - {u} for every
/// u of color Two; side[1] is the mirror image.
struct DerivedPair {
  DerivedSide side[2];
};

/// Requires h 4-regular and 4-uniform, c total and proper, and every vertex
/// fixed. Raises PreconditionViolated otherwise.
DerivedPair derive_pair(const Hypergraph& h, const PartialColoring& c, const StarMaps& maps);

/// One entry of the alternating walk: the component entered on `side`, the
/// free vertex chosen there, and the 4-edge of H behind the derived edge that
/// was removed to enter it (none for the starting entry).
struct WalkStep {
  int side = 0;
  std::size_t component = 0;
  VertexId free_vertex = 0;
  std::optional<std::size_t> removed_edge;
};

struct Absorption {
  VertexId via = 0;
  int side = 0;
  std::size_t component = 0;
  VertexId new_free = 0;
};

/// What happened in one connected component of the input.
struct ComponentReport {
  std::vector<VertexId> vertices;
  /// True when the base coloring already left a vertex unfixed.
  bool early_exit = false;
  std::vector<WalkStep> walk;
  /// Positions in `walk` of the repeated component: walk[cycle_end] re-enters
  /// the component of walk[cycle_start].
  std::size_t cycle_start = 0;
  std::size_t cycle_end = 0;
  std::vector<Absorption> absorptions;
};

struct WalkReport {
  std::vector<ComponentReport> components;
};

/// Certificate with exactly one free vertex for a 4-regular 4-uniform
/// hypergraph (PreconditionViolated otherwise). Components are solved
/// separately; the smallest of their free vertices stays free and the others
/// get color One.
ColoringCertificate solve_free_vertex(const Hypergraph& h, WalkReport* report = nullptr);

/// The same construction for a connected 4-regular 4-uniform h, starting from
/// the given total proper coloring instead of searching for one. Useful to
/// drive the walk from a coloring known to fix every vertex.
ColoringCertificate free_vertex_from_coloring(const Hypergraph& h, const PartialColoring& base,
                                              ComponentReport* report = nullptr);

}  // namespace freevertex::color
