#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "freevertex/error.hpp"
#include "freevertex/generators.hpp"
#include "freevertex/oracle.hpp"
#include "freevertex/structure.hpp"

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

std::size_t max_degree(const std::vector<std::size_t>& d) { return d.empty() ? 0 : *std::max_element(d.begin(), d.end()); }

}  // namespace

TEST(Fano, Shape) {
  const auto h = gen::fano();
  EXPECT_EQ(h.vertex_count(), 7u);
  EXPECT_EQ(h.edge_count(), 7u);
  EXPECT_TRUE(h.is_uniform(3));
  EXPECT_TRUE(h.is_regular(3));
  // Any two lines meet in exactly one point.
  for (std::size_t a = 0; a < 7; ++a)
    for (std::size_t b = a + 1; b < 7; ++b) {
      std::vector<VertexId> common;
      std::set_intersection(h.edge(a).begin(), h.edge(a).end(), h.edge(b).begin(), h.edge(b).end(),
                            std::back_inserter(common));
      EXPECT_EQ(common.size(), 1u);
    }
}

TEST(Complement, Involution) {
  const auto c = gen::complement(gen::fano());
  EXPECT_TRUE(c.is_uniform(4));
  EXPECT_TRUE(c.is_regular(4));
  EXPECT_EQ(gen::complement(c), gen::fano());
}

TEST(CompleteUniform, CountsAndOrder) {
  const auto h = gen::complete_uniform(5, 4);
  EXPECT_EQ(h.edge_count(), 5u);
  EXPECT_TRUE(h.is_regular(4));
  EXPECT_EQ(h.edge(0), (Hypergraph::Edge{0, 1, 2, 3}));
  EXPECT_EQ(h.edge(4), (Hypergraph::Edge{1, 2, 3, 4}));
  EXPECT_EQ(gen::complete_uniform(6, 3).edge_count(), 20u);
  EXPECT_EQ(kind_of([] { gen::complete_uniform(3, 4); }), ErrorKind::InvalidParams);
  EXPECT_EQ(kind_of([] { gen::complete_uniform(3, 0); }), ErrorKind::InvalidParams);
}

TEST(PropositionFamily, Shape) {
  for (std::size_t s = 1; s <= 8; ++s) {
    const auto i = gen::proposition_family(s);
    EXPECT_EQ(i.var_count(), 3 * s);
    EXPECT_EQ(i.clause_count(), 3 * s - 1);
    EXPECT_TRUE(is_connected(i));
    const auto d = degrees(i);
    EXPECT_LE(max_degree(d), 3u);
    EXPECT_EQ(d[gen::family_var(s, 1)], 2u);
  }
  EXPECT_EQ(gen::family_var(2, 3), 5u);
  EXPECT_EQ(kind_of([] { gen::proposition_family(0); }), ErrorKind::InvalidParams);
}

TEST(RandomRegular, Shape) {
  for (std::size_t n : {5u, 12u, 16u, 20u, 28u, 40u}) {
    for (gen::Seed s = 0; s < 10; ++s) {
      const auto h = gen::random_regular_uniform(n, 4, s);
      EXPECT_EQ(h.edge_count(), n);
      EXPECT_TRUE(h.is_uniform(4));
      EXPECT_TRUE(h.is_regular(4));
      EXPECT_TRUE(is_connected(h));
    }
  }
  EXPECT_EQ(kind_of([] { gen::random_regular_uniform(4, 4, 0); }), ErrorKind::InvalidParams);
}

TEST(RandomRegular, Deterministic) {
  EXPECT_EQ(gen::random_regular_uniform(40, 4, 9), gen::random_regular_uniform(40, 4, 9));
  EXPECT_NE(gen::random_regular_uniform(40, 4, 9), gen::random_regular_uniform(40, 4, 10));
}

TEST(RandomLemma, Shape) {
  for (std::size_t n = 3; n < 60; n += 3) {
    for (gen::Seed s = 0; s < 5; ++s) {
      const auto h = gen::random_lemma_instance(n, s);
      EXPECT_TRUE(h.is_uniform(3));
      EXPECT_LT(h.edge_count(), n);
      EXPECT_LE(max_degree(degrees(h)), 3u);
      EXPECT_TRUE(is_connected(h));
    }
  }
}

TEST(RandomNae, Shape) {
  for (std::size_t n = 3; n < 80; n += 5) {
    for (std::size_t m : {n / 2, n - 1}) {
      const auto i = gen::random_nae_instance(n, m, n * 31 + m);
      EXPECT_EQ(i.clause_count(), m);
      EXPECT_LE(max_degree(degrees(i)), 3u);
      EXPECT_TRUE(is_connected(i));
    }
  }
  EXPECT_EQ(gen::random_nae_instance(1, 0, 0).var_count(), 1u);
  EXPECT_EQ(kind_of([] { gen::random_nae_instance(10, 10, 0); }), ErrorKind::InvalidParams);
  EXPECT_EQ(kind_of([] { gen::random_nae_instance(10, 3, 0); }), ErrorKind::InvalidParams);
  EXPECT_EQ(gen::random_nae_instance(25, 20, 3), gen::random_nae_instance(25, 20, 3));
}

TEST(RandomAllFixed, EveryVertexFixed) {
  for (std::size_t blocks : {1u, 2u, 3u}) {
    for (gen::Seed s = 0; s < 20; ++s) {
      const auto inst = gen::random_all_fixed(4 * blocks + s % 7, s, blocks);
      const auto& h = inst.hypergraph;
      EXPECT_TRUE(h.is_uniform(4));
      EXPECT_TRUE(h.is_regular(4));
      EXPECT_TRUE(is_connected(h));
      ASSERT_TRUE(oracle::verify_coloring_certificate(h, {inst.coloring, std::nullopt}).ok);
      EXPECT_EQ(oracle::fixed_vertices(h, inst.coloring).size(), h.vertex_count());
    }
  }
  EXPECT_EQ(kind_of([] { gen::random_all_fixed(7, 0, 2); }), ErrorKind::InvalidParams);
}
