#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include "freevertex/assignment.hpp"
#include "freevertex/instance.hpp"

namespace freevertex::io {

// Hypergraph text format:
//   # comment
//   h <vertex_count> <edge_count>
//   <v> <v> ... one edge per line, 0-based vertex indices
Hypergraph read_hypergraph(std::istream& in);
void write_hypergraph(std::ostream& out, const Hypergraph& h);

// DIMACS CNF read with not-all-equal semantics; exactly three literals per
// clause.
NaeInstance read_dimacs(std::istream& in);
void write_dimacs(std::ostream& out, const NaeInstance& i);

// Certificate JSON: {"kind": "nae"|"coloring", "values": [...], "free": idx|null}
// with an optional "fallback": true marker.
struct CertificateDocument {
  std::variant<NaeCertificate, ColoringCertificate> certificate;
  bool fallback = false;
};

std::string to_json(const NaeCertificate& c, bool fallback = false);
std::string to_json(const ColoringCertificate& c, bool fallback = false);
CertificateDocument parse_certificate(std::string_view json);

Hypergraph read_hypergraph_file(const std::string& path);
NaeInstance read_dimacs_file(const std::string& path);
CertificateDocument read_certificate_file(const std::string& path);

}  // namespace freevertex::io
