#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "freevertex/instance.hpp"

namespace freevertex {

enum class Truth : std::uint8_t { False, True, Unassigned };
enum class Color : std::uint8_t { None = 0, One = 1, Two = 2 };

using PartialAssignment = std::vector<Truth>;
using PartialColoring = std::vector<Color>;

constexpr Truth truth(bool b) noexcept { return b ? Truth::True : Truth::False; }
constexpr Truth flip(Truth t) noexcept {
  return t == Truth::Unassigned ? t : (t == Truth::True ? Truth::False : Truth::True);
}
constexpr Color flip(Color c) noexcept {
  return c == Color::None ? c : (c == Color::One ? Color::Two : Color::One);
}

/// Value of a literal under a partial assignment; Unassigned propagates.
constexpr Truth eval(Literal lit, Truth value) noexcept { return lit.negated ? flip(value) : value; }

struct NaeCertificate {
  PartialAssignment assignment;
  std::optional<VarId> free_var;

  friend bool operator==(const NaeCertificate&, const NaeCertificate&) = default;
};

struct ColoringCertificate {
  PartialColoring coloring;
  std::optional<VertexId> free_vertex;

  friend bool operator==(const ColoringCertificate&, const ColoringCertificate&) = default;
};

// True is color 1, False is color 2.
PartialColoring coloring_from_assignment(const PartialAssignment& a);
PartialAssignment assignment_from_coloring(const PartialColoring& c);

ColoringCertificate to_coloring_certificate(const NaeCertificate& c);
NaeCertificate to_nae_certificate(const ColoringCertificate& c);

}  // namespace freevertex
