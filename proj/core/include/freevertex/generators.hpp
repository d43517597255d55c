#pragma once

#include <cstddef>
#include <cstdint>

#include "freevertex/assignment.hpp"
#include "freevertex/instance.hpp"

namespace freevertex::gen {

/// Seeds drive std::mt19937_64. Bounded draws and shuffles are implemented
/// here rather than through <random> distributions so that outputs are
/// identical across standard library implementations.
using Seed = std::uint64_t;

/// PG(2,2) with lines {0,1,2},{0,3,4},{0,5,6},{1,3,5},{1,4,6},{2,3,6},{2,4,5}.
Hypergraph fano();

/// Same vertex set; every edge replaced by its complement.
Hypergraph complement(const Hypergraph& h);

/// All k-subsets of n vertices in lexicographic order. Requires 1 <= k <= n.
Hypergraph complete_uniform(std::size_t n, std::size_t k);

/// Index of v_i^j (i in 1..s, j in 1..3) inside proposition_family(s).
constexpr VarId family_var(std::size_t i, std::size_t j) noexcept {
  return static_cast<VarId>(3 * (i - 1) + (j - 1));
}

/// The extremal NAE family: 3s variables, 3s-1 clauses, a single free
/// variable v_s^1. Clauses (v_i^1, v_i^2, v_i^3) and (~v_i^1, v_i^2, v_i^3)
/// for every i, then (v_i^1, v_{i+1}^2, ~v_{i+1}^3) for i < s.
NaeInstance proposition_family(std::size_t s);

/// Connected k-regular k-uniform hypergraph on n vertices from a
/// configuration model: stubs are drawn k at a time, a draw repeating a vertex
/// is redrawn (10,000 tries per edge) and a stuck or disconnected result is
/// restarted (100 restarts). Requires k >= 2 and n >= k + 1.
Hypergraph random_regular_uniform(std::size_t n, std::size_t k, Seed seed);

/// Connected 3-uniform hypergraph on n >= 3 vertices with maximum degree 3 and
/// fewer edges than vertices.
Hypergraph random_lemma_instance(std::size_t n, Seed seed);

/// Connected instance with n variables, m < n clauses, maximum degree 3 and
/// uniformly random polarities. Connectivity forces n == 1 (with m == 0) or
/// n >= 3 with 2m + 1 >= n.
NaeInstance random_nae_instance(std::size_t n, std::size_t m, Seed seed);

/// A connected 4-regular 4-uniform hypergraph on 2 * half vertices together
/// with a proper 2-coloring under which every vertex is the unique vertex of
/// its color in some edge. Built from two random 3-regular 3-uniform
/// hypergraphs (one per color class) whose edges receive apexes from the
/// opposite class through random bijections. With `blocks` > 1 each class
/// hypergraph is a disjoint union of that many pieces of near-equal size, so
/// the derived hypergraphs are disconnected. Requires half >= 4 * blocks.
struct AllFixedInstance {
  Hypergraph hypergraph;
  PartialColoring coloring;
};
AllFixedInstance random_all_fixed(std::size_t half, Seed seed, std::size_t blocks = 1);

}  // namespace freevertex::gen
