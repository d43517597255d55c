#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "freevertex/assignment.hpp"
#include "freevertex/instance.hpp"

/// Exhaustive ground truth for small instances and linear-time certificate
/// verification at any size. Enumeration walks integer bitmasks in a fixed
/// variable order, so every answer and witness is reproducible.
namespace freevertex::oracle {

inline constexpr std::size_t kDefaultExhaustiveLimit = 24;

/// Enumeration works on 64-bit masks.
inline constexpr std::size_t kHardLimit = 63;

struct FreeReport {
  bool satisfiable = false;
  /// Free variables (or vertices), ascending.
  std::vector<std::uint32_t> free;
  std::size_t max_free_set_size_checked = 1;
  /// witnesses[k] leaves free[k] unassigned and satisfies everything else.
  std::vector<PartialAssignment> witnesses;
};

/// Hypergraph flavour of FreeReport with witnesses as colorings.
struct FreeVertexReport {
  bool colorable = false;
  std::vector<VertexId> free;
  std::size_t max_free_set_size_checked = 1;
  std::vector<PartialColoring> witnesses;
};

// All of the following raise TooLarge when the variable/vertex count exceeds
// `limit`.
bool is_nae_satisfiable(const NaeInstance& i, std::size_t limit = kDefaultExhaustiveLimit);
std::optional<PartialAssignment> find_nae_assignment(const NaeInstance& i,
                                                     std::size_t limit = kDefaultExhaustiveLimit);
FreeReport free_variables(const NaeInstance& i, std::size_t limit = kDefaultExhaustiveLimit);

/// Works on edges of any size; an edge is satisfied when it sees both colors.
bool is_two_colorable(const Hypergraph& h, std::size_t limit = kDefaultExhaustiveLimit);
FreeVertexReport free_vertices(const Hypergraph& h, std::size_t limit = kDefaultExhaustiveLimit);

/// Every vertex set of the given size that can be left uncolored. A set
/// swallowing a whole edge is never free.
std::vector<std::vector<VertexId>> free_sets(const Hypergraph& h, std::size_t size,
                                             std::size_t limit = kDefaultExhaustiveLimit);

/// Verification result. The boolean is the contract; reasons are for humans.
struct Verdict {
  bool ok = true;
  std::vector<std::string> reasons;

  explicit operator bool() const noexcept { return ok; }
};

Verdict verify_nae_certificate(const NaeInstance& i, const NaeCertificate& c);
Verdict verify_coloring_certificate(const Hypergraph& h, const ColoringCertificate& c);

/// Vertices that are the only vertex of their color in some scanned edge.
/// Edges listed in `excluded` are skipped; a scanned edge whose colored
/// vertices are monochromatic raises InvalidColoring.
std::vector<VertexId> fixed_vertices(const Hypergraph& h, const PartialColoring& c,
                                     std::span<const std::size_t> excluded = {});

}  // namespace freevertex::oracle
