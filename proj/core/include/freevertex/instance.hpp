#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace freevertex {

using VarId = std::uint32_t;
using VertexId = std::uint32_t;

struct Literal {
  VarId var = 0;
  bool negated = false;

  constexpr Literal operator~() const noexcept { return {var, !negated}; }

  /// Truth value of the literal when its variable takes `value`.
  constexpr bool eval(bool value) const noexcept { return value != negated; }

  friend constexpr bool operator==(const Literal&, const Literal&) = default;
};

constexpr Literal pos(VarId v) noexcept { return {v, false}; }
constexpr Literal neg(VarId v) noexcept { return {v, true}; }

/// Three literals over pairwise distinct variables.
class Clause {
 public:
  Clause(Literal a, Literal b, Literal c);
  explicit Clause(const std::array<Literal, 3>& literals) : Clause(literals[0], literals[1], literals[2]) {}

  const std::array<Literal, 3>& literals() const noexcept { return literals_; }
  const Literal& operator[](std::size_t i) const noexcept { return literals_[i]; }

  bool contains(VarId v) const noexcept { return position_of(v) >= 0; }
  /// Slot index of `v`, or -1.
  int position_of(VarId v) const noexcept;
  /// The literal mentioning `v`; `v` must occur.
  const Literal& literal_of(VarId v) const;

  /// Same clause with every literal complemented; nae-semantics unchanged.
  Clause negated() const noexcept;

  friend bool operator==(const Clause&, const Clause&) = default;

 private:
  std::array<Literal, 3> literals_;
};

/// A not-all-equal 3-SAT instance: variables 0..var_count-1 and a multiset of
/// clauses.
class NaeInstance {
 public:
  NaeInstance() = default;
  NaeInstance(std::size_t var_count, std::vector<Clause> clauses);

  std::size_t var_count() const noexcept { return var_count_; }
  std::size_t clause_count() const noexcept { return clauses_.size(); }
  std::span<const Clause> clauses() const noexcept { return clauses_; }
  const Clause& clause(std::size_t i) const { return clauses_.at(i); }

  friend bool operator==(const NaeInstance&, const NaeInstance&) = default;

 private:
  std::size_t var_count_ = 0;
  std::vector<Clause> clauses_;
};

/// Vertices 0..vertex_count-1 and a multiset of non-empty edges. Each edge is
/// stored sorted and without repetitions.
class Hypergraph {
 public:
  using Edge = std::vector<VertexId>;

  Hypergraph() = default;
  Hypergraph(std::size_t vertex_count, std::vector<Edge> edges);

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(std::size_t i) const { return edges_.at(i); }

  bool is_uniform(std::size_t k) const noexcept;
  bool is_regular(std::size_t k) const noexcept;

  /// Edge multisets compared as sorted lists, so edge order is irrelevant.
  bool same_edges(const Hypergraph& other) const;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  std::size_t vertex_count_ = 0;
  std::vector<Edge> edges_;
};

}  // namespace freevertex
