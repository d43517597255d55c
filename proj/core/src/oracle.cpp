#include "freevertex/oracle.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "freevertex/error.hpp"

namespace freevertex::oracle {
namespace {

// A constraint is satisfied when, among the literals over variables that are
// not ignored, at least one is true and at least one is false. Positive
// literals live in `pos`, negated ones in `neg`.
struct Constraint {
  std::uint64_t pos = 0;
  std::uint64_t neg = 0;
};

void check_limit(std::size_t n, std::size_t limit) {
  const std::size_t effective = std::min(limit, kHardLimit);
  if (n > effective) {
    fail(ErrorKind::TooLarge, std::to_string(n) + " variables exceed the exhaustive limit of " +
                                  std::to_string(effective));
  }
}

std::vector<Constraint> constraints_of(const NaeInstance& i) {
  std::vector<Constraint> out;
  out.reserve(i.clause_count());
  for (const Clause& c : i.clauses()) {
    Constraint k;
    for (const Literal& l : c.literals()) (l.negated ? k.neg : k.pos) |= std::uint64_t{1} << l.var;
    out.push_back(k);
  }
  return out;
}

std::vector<Constraint> constraints_of(const Hypergraph& h) {
  std::vector<Constraint> out;
  out.reserve(h.edge_count());
  for (const auto& e : h.edges()) {
    Constraint k;
    for (VertexId u : e) k.pos |= std::uint64_t{1} << u;
    out.push_back(k);
  }
  return out;
}

std::uint64_t full_mask(std::size_t n) { return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

// Smallest mask (in counting order over the non-ignored bits) satisfying all
// constraints, if any. Bits of ignored variables are zero in the result.
std::optional<std::uint64_t> search(const std::vector<Constraint>& all, std::size_t n, std::uint64_t ignored) {
  const std::uint64_t active = full_mask(n) & ~ignored;
  std::vector<Constraint> cs;
  cs.reserve(all.size());
  for (const Constraint& c : all) {
    const Constraint r{c.pos & active, c.neg & active};
    if (std::popcount(r.pos) + std::popcount(r.neg) < 2) return std::nullopt;
    cs.push_back(r);
  }
  std::uint64_t m = 0;
  do {
    bool ok = true;
    for (const Constraint& c : cs) {
      const std::uint64_t truthy = (m & c.pos) | (~m & c.neg);
      const std::uint64_t falsy = (~m & c.pos) | (m & c.neg);
      if (truthy == 0 || falsy == 0) {
        ok = false;
        break;
      }
    }
    if (ok) return m;
    m = (m - active) & active;
  } while (m != 0);
  return std::nullopt;
}

PartialAssignment to_assignment(std::uint64_t m, std::size_t n, std::uint64_t ignored) {
  PartialAssignment a(n, Truth::Unassigned);
  for (std::size_t v = 0; v < n; ++v) {
    if (!((ignored >> v) & 1U)) a[v] = truth((m >> v) & 1U);
  }
  return a;
}

}  // namespace

std::optional<PartialAssignment> find_nae_assignment(const NaeInstance& i, std::size_t limit) {
  check_limit(i.var_count(), limit);
  const auto m = search(constraints_of(i), i.var_count(), 0);
  if (!m) return std::nullopt;
  return to_assignment(*m, i.var_count(), 0);
}

bool is_nae_satisfiable(const NaeInstance& i, std::size_t limit) { return find_nae_assignment(i, limit).has_value(); }

FreeReport free_variables(const NaeInstance& i, std::size_t limit) {
  check_limit(i.var_count(), limit);
  const auto cs = constraints_of(i);
  FreeReport report;
  report.satisfiable = search(cs, i.var_count(), 0).has_value();
  for (std::size_t v = 0; v < i.var_count(); ++v) {
    const std::uint64_t ignored = std::uint64_t{1} << v;
    if (const auto m = search(cs, i.var_count(), ignored)) {
      report.free.push_back(static_cast<std::uint32_t>(v));
      report.witnesses.push_back(to_assignment(*m, i.var_count(), ignored));
    }
  }
  return report;
}

bool is_two_colorable(const Hypergraph& h, std::size_t limit) {
  check_limit(h.vertex_count(), limit);
  return search(constraints_of(h), h.vertex_count(), 0).has_value();
}

FreeVertexReport free_vertices(const Hypergraph& h, std::size_t limit) {
  check_limit(h.vertex_count(), limit);
  const auto cs = constraints_of(h);
  FreeVertexReport report;
  report.colorable = search(cs, h.vertex_count(), 0).has_value();
  for (std::size_t v = 0; v < h.vertex_count(); ++v) {
    const std::uint64_t ignored = std::uint64_t{1} << v;
    if (const auto m = search(cs, h.vertex_count(), ignored)) {
      report.free.push_back(static_cast<VertexId>(v));
      report.witnesses.push_back(coloring_from_assignment(to_assignment(*m, h.vertex_count(), ignored)));
    }
  }
  return report;
}

std::vector<std::vector<VertexId>> free_sets(const Hypergraph& h, std::size_t size, std::size_t limit) {
  check_limit(h.vertex_count(), limit);
  const std::size_t n = h.vertex_count();
  std::vector<std::vector<VertexId>> out;
  if (size > n) return out;
  const auto cs = constraints_of(h);

  // Lexicographic walk over size-subsets.
  std::vector<VertexId> pick(size);
  for (std::size_t k = 0; k < size; ++k) pick[k] = static_cast<VertexId>(k);
  while (true) {
    std::uint64_t ignored = 0;
    for (VertexId v : pick) ignored |= std::uint64_t{1} << v;
    if (search(cs, n, ignored)) out.push_back(pick);

    std::size_t k = size;
    while (k > 0 && pick[k - 1] == n - size + k - 1) --k;
    if (k == 0) break;
    ++pick[k - 1];
    for (std::size_t j = k; j < size; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

Verdict verify_nae_certificate(const NaeInstance& i, const NaeCertificate& c) {
  Verdict v;
  auto reject = [&v](std::string reason) {
    v.ok = false;
    v.reasons.push_back(std::move(reason));
  };
  if (c.assignment.size() != i.var_count()) {
    reject("assignment has " + std::to_string(c.assignment.size()) + " entries for " +
           std::to_string(i.var_count()) + " variables");
    return v;
  }
  if (c.free_var && *c.free_var >= i.var_count()) {
    reject("free variable " + std::to_string(*c.free_var) + " out of range");
    return v;
  }
  for (std::size_t x = 0; x < c.assignment.size(); ++x) {
    const bool is_free = c.free_var && *c.free_var == x;
    if (is_free && c.assignment[x] != Truth::Unassigned) reject("free variable " + std::to_string(x) + " is assigned");
    if (!is_free && c.assignment[x] == Truth::Unassigned) reject("variable " + std::to_string(x) + " is unassigned");
  }
  for (std::size_t k = 0; k < i.clause_count(); ++k) {
    bool seen_true = false;
    bool seen_false = false;
    for (const Literal& l : i.clause(k).literals()) {
      const Truth t = eval(l, c.assignment[l.var]);
      seen_true |= t == Truth::True;
      seen_false |= t == Truth::False;
    }
    if (!seen_true || !seen_false) reject("clause " + std::to_string(k) + " is not nae-satisfied");
  }
  return v;
}

Verdict verify_coloring_certificate(const Hypergraph& h, const ColoringCertificate& c) {
  Verdict v;
  auto reject = [&v](std::string reason) {
    v.ok = false;
    v.reasons.push_back(std::move(reason));
  };
  if (c.coloring.size() != h.vertex_count()) {
    reject("coloring has " + std::to_string(c.coloring.size()) + " entries for " + std::to_string(h.vertex_count()) +
           " vertices");
    return v;
  }
  if (c.free_vertex && *c.free_vertex >= h.vertex_count()) {
    reject("free vertex " + std::to_string(*c.free_vertex) + " out of range");
    return v;
  }
  for (std::size_t x = 0; x < c.coloring.size(); ++x) {
    const bool is_free = c.free_vertex && *c.free_vertex == x;
    if (is_free && c.coloring[x] != Color::None) reject("free vertex " + std::to_string(x) + " is colored");
    if (!is_free && c.coloring[x] == Color::None) reject("vertex " + std::to_string(x) + " is uncolored");
  }
  for (std::size_t k = 0; k < h.edge_count(); ++k) {
    bool one = false;
    bool two = false;
    for (VertexId u : h.edge(k)) {
      one |= c.coloring[u] == Color::One;
      two |= c.coloring[u] == Color::Two;
    }
    if (!one || !two) reject("edge " + std::to_string(k) + " is not bichromatic");
  }
  return v;
}

std::vector<VertexId> fixed_vertices(const Hypergraph& h, const PartialColoring& c,
                                     std::span<const std::size_t> excluded) {
  if (c.size() != h.vertex_count()) fail(ErrorKind::InvalidArgument, "coloring size does not match hypergraph");
  std::vector<bool> skip(h.edge_count(), false);
  for (std::size_t e : excluded) skip.at(e) = true;

  std::vector<bool> fixed(h.vertex_count(), false);
  for (std::size_t k = 0; k < h.edge_count(); ++k) {
    if (skip[k]) continue;
    std::size_t count[3] = {0, 0, 0};
    VertexId last[3] = {0, 0, 0};
    for (VertexId u : h.edge(k)) {
      const auto col = static_cast<std::size_t>(c[u]);
      ++count[col];
      last[col] = u;
    }
    if (count[1] == 0 || count[2] == 0) {
      fail(ErrorKind::InvalidColoring, "edge " + std::to_string(k) + " is monochromatic");
    }
    if (count[1] == 1) fixed[last[1]] = true;
    if (count[2] == 1) fixed[last[2]] = true;
  }
  std::vector<VertexId> out;
  for (std::size_t u = 0; u < fixed.size(); ++u) {
    if (fixed[u]) out.push_back(static_cast<VertexId>(u));
  }
  return out;
}

}  // namespace freevertex::oracle
