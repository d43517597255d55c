#include "freevertex/instance.hpp"

#include <algorithm>
#include <string>

#include "freevertex/error.hpp"

namespace freevertex {

Clause::Clause(Literal a, Literal b, Literal c) : literals_{a, b, c} {
  if (a.var == b.var || a.var == c.var || b.var == c.var) {
    fail(ErrorKind::InvalidArgument, "clause repeats variable " +
                                         std::to_string(a.var == b.var || a.var == c.var ? a.var : b.var));
  }
}

int Clause::position_of(VarId v) const noexcept {
  for (int p = 0; p < 3; ++p) {
    if (literals_[p].var == v) return p;
  }
  return -1;
}

const Literal& Clause::literal_of(VarId v) const {
  const int p = position_of(v);
  if (p < 0) fail(ErrorKind::InvalidArgument, "variable " + std::to_string(v) + " not in clause");
  return literals_[p];
}

Clause Clause::negated() const noexcept {
  Clause out = *this;
  for (auto& l : out.literals_) l = ~l;
  return out;
}

NaeInstance::NaeInstance(std::size_t var_count, std::vector<Clause> clauses)
    : var_count_(var_count), clauses_(std::move(clauses)) {
  for (std::size_t c = 0; c < clauses_.size(); ++c) {
    for (const Literal& l : clauses_[c].literals()) {
      if (l.var >= var_count_) {
        fail(ErrorKind::InvalidArgument,
             "clause " + std::to_string(c) + " mentions variable " + std::to_string(l.var) + " >= " +
                 std::to_string(var_count_));
      }
    }
  }
}

Hypergraph::Hypergraph(std::size_t vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    Edge& edge = edges_[e];
    if (edge.empty()) fail(ErrorKind::InvalidArgument, "edge " + std::to_string(e) + " is empty");
    std::sort(edge.begin(), edge.end());
    if (std::adjacent_find(edge.begin(), edge.end()) != edge.end()) {
      fail(ErrorKind::InvalidArgument, "edge " + std::to_string(e) + " repeats a vertex");
    }
    if (edge.back() >= vertex_count_) {
      fail(ErrorKind::InvalidArgument, "edge " + std::to_string(e) + " mentions vertex " +
                                           std::to_string(edge.back()) + " >= " + std::to_string(vertex_count_));
    }
  }
}

bool Hypergraph::is_uniform(std::size_t k) const noexcept {
  return std::all_of(edges_.begin(), edges_.end(), [k](const Edge& e) { return e.size() == k; });
}

bool Hypergraph::is_regular(std::size_t k) const noexcept {
  std::vector<std::size_t> deg(vertex_count_, 0);
  for (const Edge& e : edges_) {
    for (VertexId v : e) ++deg[v];
  }
  return std::all_of(deg.begin(), deg.end(), [k](std::size_t d) { return d == k; });
}

bool Hypergraph::same_edges(const Hypergraph& other) const {
  if (vertex_count_ != other.vertex_count_ || edges_.size() != other.edges_.size()) return false;
  auto a = edges_;
  auto b = other.edges_;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

}  // namespace freevertex
