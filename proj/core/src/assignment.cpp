#include "freevertex/assignment.hpp"

namespace freevertex {

PartialColoring coloring_from_assignment(const PartialAssignment& a) {
  PartialColoring c(a.size(), Color::None);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == Truth::True) c[i] = Color::One;
    else if (a[i] == Truth::False) c[i] = Color::Two;
  }
  return c;
}

PartialAssignment assignment_from_coloring(const PartialColoring& c) {
  PartialAssignment a(c.size(), Truth::Unassigned);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == Color::One) a[i] = Truth::True;
    else if (c[i] == Color::Two) a[i] = Truth::False;
  }
  return a;
}

ColoringCertificate to_coloring_certificate(const NaeCertificate& c) {
  return {coloring_from_assignment(c.assignment), c.free_var};
}

NaeCertificate to_nae_certificate(const ColoringCertificate& c) {
  return {assignment_from_coloring(c.coloring), c.free_vertex};
}

}  // namespace freevertex
