#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "freevertex/error.hpp"
#include "freevertex/generators.hpp"
#include "freevertex/oracle.hpp"
#include "freevertex/structure.hpp"
#include "naive.hpp"

using namespace freevertex;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected an exception";
  return ErrorKind::InternalInvariant;
}

// Random instance without the solver's hypotheses: any clause count, any
// degree.
NaeInstance scramble(std::size_t n, std::size_t m, std::uint64_t seed) {
  std::uint64_t x = seed * 6364136223846793005ULL + 1442695040888963407ULL;
  auto next = [&] {
    x ^= x << 13;
    x ^= x >> 7;
    x ^= x << 17;
    return x;
  };
  std::vector<Clause> clauses;
  while (clauses.size() < m) {
    const VarId a = next() % n, b = next() % n, c = next() % n;
    if (a == b || b == c || a == c) continue;
    clauses.emplace_back(Literal{a, (next() & 1) != 0}, Literal{b, (next() & 1) != 0}, Literal{c, (next() & 1) != 0});
  }
  return NaeInstance(n, clauses);
}

Hypergraph scramble_graph(std::size_t n, std::size_t m, std::uint64_t seed) {
  std::vector<Hypergraph::Edge> edges;
  const auto i = scramble(n, m, seed);
  for (const auto& c : i.clauses()) {
    Hypergraph::Edge e{c[0].var, c[1].var, c[2].var};
    if (c[0].negated) e.pop_back();  // mix in some 2-edges
    edges.push_back(e);
  }
  return Hypergraph(n, edges);
}

}  // namespace

TEST(Oracle, SatisfiabilityMatchesNaive) {
  for (std::uint64_t s = 0; s < 300; ++s) {
    const std::size_t n = 3 + s % 8;
    const auto i = scramble(n, 1 + s % (2 * n), s);
    EXPECT_EQ(oracle::is_nae_satisfiable(i), naive::satisfiable(i)) << s;
    const auto a = oracle::find_nae_assignment(i);
    EXPECT_EQ(a.has_value(), naive::satisfiable(i));
    if (a) EXPECT_TRUE(oracle::verify_nae_certificate(i, {*a, std::nullopt}).ok);
  }
}

TEST(Oracle, FreeVariablesMatchNaive) {
  for (std::uint64_t s = 0; s < 300; ++s) {
    const std::size_t n = 3 + s % 8;
    const auto i = scramble(n, 1 + s % (2 * n), s);
    const auto r = oracle::free_variables(i);
    EXPECT_EQ(r.free, naive::free_variables(i)) << s;
    ASSERT_EQ(r.witnesses.size(), r.free.size());
    for (std::size_t k = 0; k < r.free.size(); ++k)
      EXPECT_TRUE(oracle::verify_nae_certificate(i, {r.witnesses[k], r.free[k]}).ok);
  }
}

TEST(Oracle, FreeVerticesMatchNaive) {
  for (std::uint64_t s = 0; s < 300; ++s) {
    const std::size_t n = 3 + s % 8;
    const auto h = scramble_graph(n, 1 + s % (2 * n), s);
    const auto r = oracle::free_vertices(h);
    EXPECT_EQ(r.colorable, naive::coloring_exists(h, {})) << s;
    EXPECT_EQ(r.free, naive::free_vertices(h)) << s;
    EXPECT_EQ(oracle::is_two_colorable(h), r.colorable);
    for (std::size_t k = 0; k < r.free.size(); ++k)
      EXPECT_TRUE(oracle::verify_coloring_certificate(h, {r.witnesses[k], r.free[k]}).ok);
  }
}

TEST(Oracle, FreeSetsMatchNaive) {
  for (std::uint64_t s = 0; s < 60; ++s) {
    const auto h = scramble_graph(7, 4 + s % 6, s);
    for (std::size_t size = 1; size <= 3; ++size) {
      std::vector<std::vector<VertexId>> expected;
      for (std::uint32_t mask = 0; mask < (1u << 7); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcount(mask)) != size) continue;
        std::set<VertexId> skip;
        std::vector<VertexId> set;
        for (VertexId v = 0; v < 7; ++v)
          if (mask >> v & 1) skip.insert(v), set.push_back(v);
        // An edge inside the skipped set can never see both colors.
        bool swallowed = false;
        for (const auto& e : h.edges()) {
          bool inside = true;
          for (VertexId u : e) inside = inside && skip.count(u);
          swallowed = swallowed || inside;
        }
        if (!swallowed && naive::coloring_exists(h, skip)) expected.push_back(set);
      }
      auto got = oracle::free_sets(h, size);
      std::sort(got.begin(), got.end());
      std::sort(expected.begin(), expected.end());
      EXPECT_EQ(got, expected) << s << " size " << size;
    }
  }
}

TEST(Oracle, Fano) {
  const auto h = gen::fano();
  EXPECT_FALSE(oracle::is_two_colorable(h));
  EXPECT_FALSE(oracle::is_nae_satisfiable(instance_from_hypergraph(h)));
  EXPECT_TRUE(oracle::free_vertices(h).free.empty());
}

TEST(Oracle, Limits) {
  const NaeInstance big(30, {});
  EXPECT_EQ(kind_of([&] { oracle::is_nae_satisfiable(big); }), ErrorKind::TooLarge);
  EXPECT_TRUE(oracle::is_nae_satisfiable(NaeInstance(30, {}), 30));
  EXPECT_EQ(kind_of([&] { oracle::free_vertices(Hypergraph(64, {}), 100); }), ErrorKind::TooLarge);
}

TEST(Verify, NaeReasons) {
  const NaeInstance i(3, {Clause(pos(0), pos(1), pos(2))});
  EXPECT_TRUE(oracle::verify_nae_certificate(i, {{Truth::True, Truth::False, Truth::Unassigned}, VarId{2}}).ok);
  // All equal.
  EXPECT_FALSE(oracle::verify_nae_certificate(i, {{Truth::True, Truth::True, Truth::True}, std::nullopt}).ok);
  // Only one assigned literal.
  EXPECT_FALSE(
      oracle::verify_nae_certificate(i, {{Truth::True, Truth::Unassigned, Truth::Unassigned}, VarId{1}}).ok);
  // Free marker disagrees with the assignment.
  EXPECT_FALSE(oracle::verify_nae_certificate(i, {{Truth::True, Truth::False, Truth::True}, VarId{2}}).ok);
  // Wrong length.
  const auto v = oracle::verify_nae_certificate(i, {{Truth::True, Truth::False}, std::nullopt});
  EXPECT_FALSE(v.ok);
  EXPECT_FALSE(v.reasons.empty());
}

TEST(Verify, ColoringReasons) {
  const Hypergraph h(4, {{0, 1, 2, 3}});
  EXPECT_TRUE(oracle::verify_coloring_certificate(h, {{Color::One, Color::None, Color::One, Color::Two}, VertexId{1}}).ok);
  EXPECT_FALSE(oracle::verify_coloring_certificate(h, {{Color::One, Color::None, Color::One, Color::One}, VertexId{1}}).ok);
  EXPECT_FALSE(oracle::verify_coloring_certificate(h, {{Color::One, Color::None, Color::None, Color::Two}, VertexId{1}}).ok);
}

TEST(FixedVertices, Basics) {
  const Hypergraph h(5, {{0, 1, 2}, {2, 3, 4}});
  const PartialColoring c{Color::One, Color::Two, Color::Two, Color::One, Color::One};
  EXPECT_EQ(oracle::fixed_vertices(h, c), (std::vector<VertexId>{0, 2}));
  const std::vector<std::size_t> skip{1};
  EXPECT_EQ(oracle::fixed_vertices(h, c, skip), (std::vector<VertexId>{0}));
  const PartialColoring bad{Color::One, Color::One, Color::One, Color::One, Color::Two};
  EXPECT_EQ(kind_of([&] { oracle::fixed_vertices(h, bad); }), ErrorKind::InvalidColoring);
}

TEST(FixedVertices, FreeVertexIsNeverFixed) {
  // A vertex that can be left uncolored is never the unique one of its color.
  for (gen::Seed s = 0; s < 40; ++s) {
    const auto h = gen::random_regular_uniform(12, 4, s);
    const auto w = oracle::free_vertices(h);
    ASSERT_TRUE(w.colorable);
    // Filling the free vertex of a witness either way leaves it unfixed.
    for (std::size_t k = 0; k < w.free.size(); ++k) {
      auto c = w.witnesses[k];
      for (Color fill : {Color::One, Color::Two}) {
        c[w.free[k]] = fill;
        const auto fixed = oracle::fixed_vertices(h, c);
        EXPECT_FALSE(naive::contains(fixed, w.free[k]));
      }
    }
  }
}
