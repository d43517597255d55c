#include "freevertex/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "freevertex/error.hpp"

namespace freevertex::io {
namespace {

using nlohmann::json;

bool skippable(const std::string& line) {
  const auto first = line.find_first_not_of(" \t\r");
  return first == std::string::npos || line[first] == '#';
}

[[noreturn]] void parse_error(std::size_t line_no, const std::string& what) {
  fail(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": " + what);
}

template <class T>
bool read_exact(std::istringstream& in, T& value) {
  return static_cast<bool>(in >> value);
}

bool at_end(std::istringstream& in) {
  in >> std::ws;
  return in.eof();
}

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::ParseError, "cannot open " + path);
  return in;
}

}  // namespace

Hypergraph read_hypergraph(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  long long vertex_count = -1;
  long long edge_count = -1;
  std::vector<Hypergraph::Edge> edges;

  while (std::getline(in, line)) {
    ++line_no;
    if (skippable(line)) continue;
    std::istringstream tokens(line);
    if (vertex_count < 0) {
      std::string tag;
      if (!read_exact(tokens, tag) || tag != "h") parse_error(line_no, "expected header 'h <vertices> <edges>'");
      if (!read_exact(tokens, vertex_count) || !read_exact(tokens, edge_count) || vertex_count < 0 ||
          edge_count < 0 || !at_end(tokens)) {
        parse_error(line_no, "malformed header");
      }
      continue;
    }
    Hypergraph::Edge edge;
    long long v = 0;
    while (tokens >> v) {
      if (v < 0 || v >= vertex_count) parse_error(line_no, "vertex " + std::to_string(v) + " out of range");
      edge.push_back(static_cast<VertexId>(v));
    }
    if (!tokens.eof()) parse_error(line_no, "non-integer token in edge");
    edges.push_back(std::move(edge));
  }
  if (vertex_count < 0) fail(ErrorKind::ParseError, "missing header");
  if (static_cast<long long>(edges.size()) != edge_count) {
    fail(ErrorKind::ParseError, "header announces " + std::to_string(edge_count) + " edges, found " +
                                    std::to_string(edges.size()));
  }
  try {
    return Hypergraph(static_cast<std::size_t>(vertex_count), std::move(edges));
  } catch (const Error& e) {
    fail(ErrorKind::ParseError, e.what());
  }
}

void write_hypergraph(std::ostream& out, const Hypergraph& h) {
  out << "h " << h.vertex_count() << ' ' << h.edge_count() << '\n';
  for (const auto& e : h.edges()) {
    for (std::size_t k = 0; k < e.size(); ++k) out << (k ? " " : "") << e[k];
    out << '\n';
  }
}

NaeInstance read_dimacs(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  long long var_count = -1;
  long long clause_count = -1;
  std::vector<Clause> clauses;
  std::vector<Literal> pending;

  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == 'c' || line[first] == '%') continue;
    std::istringstream tokens(line);
    if (line[first] == 'p') {
      std::string p, fmt;
      if (var_count >= 0) parse_error(line_no, "duplicate problem line");
      if (!read_exact(tokens, p) || !read_exact(tokens, fmt) || fmt != "cnf" || !read_exact(tokens, var_count) ||
          !read_exact(tokens, clause_count) || var_count < 0 || clause_count < 0 || !at_end(tokens)) {
        parse_error(line_no, "malformed problem line, expected 'p cnf <vars> <clauses>'");
      }
      continue;
    }
    if (var_count < 0) parse_error(line_no, "clause before problem line");
    long long x = 0;
    while (tokens >> x) {
      if (x == 0) {
        if (pending.size() != 3) {
          parse_error(line_no, "clause has " + std::to_string(pending.size()) + " literals, expected 3");
        }
        try {
          clauses.emplace_back(pending[0], pending[1], pending[2]);
        } catch (const Error& e) {
          parse_error(line_no, e.what());
        }
        pending.clear();
        continue;
      }
      const long long var = x < 0 ? -x : x;
      if (var > var_count) parse_error(line_no, "variable " + std::to_string(var) + " exceeds declared count");
      pending.push_back({static_cast<VarId>(var - 1), x < 0});
    }
    if (!tokens.eof()) parse_error(line_no, "non-integer token in clause");
  }
  if (var_count < 0) fail(ErrorKind::ParseError, "missing problem line");
  if (!pending.empty()) fail(ErrorKind::ParseError, "last clause is not terminated by 0");
  if (static_cast<long long>(clauses.size()) != clause_count) {
    fail(ErrorKind::ParseError, "problem line announces " + std::to_string(clause_count) + " clauses, found " +
                                    std::to_string(clauses.size()));
  }
  return NaeInstance(static_cast<std::size_t>(var_count), std::move(clauses));
}

void write_dimacs(std::ostream& out, const NaeInstance& i) {
  out << "p cnf " << i.var_count() << ' ' << i.clause_count() << '\n';
  for (const Clause& c : i.clauses()) {
    for (const Literal& l : c.literals()) out << (l.negated ? "-" : "") << (l.var + 1) << ' ';
    out << "0\n";
  }
}

namespace {

json document(const char* kind, json values, const std::optional<std::uint32_t>& free, bool fallback) {
  json doc;
  doc["kind"] = kind;
  doc["values"] = std::move(values);
  doc["free"] = free ? json(*free) : json(nullptr);
  if (fallback) doc["fallback"] = true;
  return doc;
}

}  // namespace

std::string to_json(const NaeCertificate& c, bool fallback) {
  json values = json::array();
  for (Truth t : c.assignment) values.push_back(t == Truth::True ? "T" : t == Truth::False ? "F" : "-");
  return document("nae", std::move(values), c.free_var, fallback).dump();
}

std::string to_json(const ColoringCertificate& c, bool fallback) {
  json values = json::array();
  for (Color col : c.coloring) values.push_back(col == Color::One ? "1" : col == Color::Two ? "2" : "-");
  return document("coloring", std::move(values), c.free_vertex, fallback).dump();
}

CertificateDocument parse_certificate(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorKind::ParseError, std::string("certificate is not JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("kind") || !doc.contains("values") || !doc.contains("free")) {
    fail(ErrorKind::ParseError, "certificate needs fields kind, values, free");
  }
  if (!doc["kind"].is_string() || !doc["values"].is_array()) fail(ErrorKind::ParseError, "malformed certificate");

  std::optional<std::uint32_t> free;
  if (!doc["free"].is_null()) {
    if (!doc["free"].is_number_unsigned()) fail(ErrorKind::ParseError, "free must be an index or null");
    free = doc["free"].get<std::uint32_t>();
  }
  CertificateDocument out;
  out.fallback = doc.value("fallback", false);

  const std::string kind = doc["kind"].get<std::string>();
  auto symbol = [](const json& v) {
    if (!v.is_string()) fail(ErrorKind::ParseError, "certificate values must be strings");
    return v.get<std::string>();
  };
  if (kind == "nae") {
    NaeCertificate c;
    for (const json& v : doc["values"]) {
      const auto s = symbol(v);
      if (s == "T") c.assignment.push_back(Truth::True);
      else if (s == "F") c.assignment.push_back(Truth::False);
      else if (s == "-") c.assignment.push_back(Truth::Unassigned);
      else fail(ErrorKind::ParseError, "bad nae value '" + s + "'");
    }
    c.free_var = free;
    out.certificate = std::move(c);
  } else if (kind == "coloring") {
    ColoringCertificate c;
    for (const json& v : doc["values"]) {
      const auto s = symbol(v);
      if (s == "1") c.coloring.push_back(Color::One);
      else if (s == "2") c.coloring.push_back(Color::Two);
      else if (s == "-") c.coloring.push_back(Color::None);
      else fail(ErrorKind::ParseError, "bad coloring value '" + s + "'");
    }
    c.free_vertex = free;
    out.certificate = std::move(c);
  } else {
    fail(ErrorKind::ParseError, "unknown certificate kind '" + kind + "'");
  }
  return out;
}

Hypergraph read_hypergraph_file(const std::string& path) {
  auto in = open(path);
  return read_hypergraph(in);
}

NaeInstance read_dimacs_file(const std::string& path) {
  auto in = open(path);
  return read_dimacs(in);
}

CertificateDocument read_certificate_file(const std::string& path) {
  auto in = open(path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_certificate(buffer.str());
}

}  // namespace freevertex::io
