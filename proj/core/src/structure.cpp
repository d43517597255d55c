#include "freevertex/structure.hpp"

#include <algorithm>
#include <string>

#include "freevertex/error.hpp"
#include "freevertex/union_find.hpp"

namespace freevertex {

NaeInstance instance_from_hypergraph(const Hypergraph& h, bool require_3_uniform) {
  std::vector<Clause> clauses;
  clauses.reserve(h.edge_count());
  for (std::size_t e = 0; e < h.edge_count(); ++e) {
    const auto& edge = h.edge(e);
    if (edge.size() != 3) {
      if (require_3_uniform) {
        fail(ErrorKind::NonUniformEdge, "edge " + std::to_string(e) + " has size " + std::to_string(edge.size()));
      }
      continue;
    }
    clauses.emplace_back(pos(edge[0]), pos(edge[1]), pos(edge[2]));
  }
  return NaeInstance(h.vertex_count(), std::move(clauses));
}

Hypergraph hypergraph_from_instance(const NaeInstance& i) {
  std::vector<Hypergraph::Edge> edges;
  edges.reserve(i.clause_count());
  for (const Clause& c : i.clauses()) edges.push_back({c[0].var, c[1].var, c[2].var});
  return Hypergraph(i.var_count(), std::move(edges));
}

std::size_t degree(const NaeInstance& i, VarId v) {
  return static_cast<std::size_t>(
      std::count_if(i.clauses().begin(), i.clauses().end(), [v](const Clause& c) { return c.contains(v); }));
}

std::size_t degree(const Hypergraph& h, VertexId u) {
  return static_cast<std::size_t>(std::count_if(h.edges().begin(), h.edges().end(), [u](const auto& e) {
    return std::binary_search(e.begin(), e.end(), u);
  }));
}

std::vector<std::size_t> degrees(const NaeInstance& i) {
  std::vector<std::size_t> d(i.var_count(), 0);
  for (const Clause& c : i.clauses()) {
    for (const Literal& l : c.literals()) ++d[l.var];
  }
  return d;
}

std::vector<std::size_t> degrees(const Hypergraph& h) {
  std::vector<std::size_t> d(h.vertex_count(), 0);
  for (const auto& e : h.edges()) {
    for (VertexId u : e) ++d[u];
  }
  return d;
}

std::vector<std::vector<VarId>> associated_graph(const NaeInstance& i) {
  std::vector<std::vector<VarId>> adj(i.var_count());
  for (const Clause& c : i.clauses()) {
    for (int a = 0; a < 3; ++a) {
      for (int b = 0; b < 3; ++b) {
        if (a != b) adj[c[a].var].push_back(c[b].var);
      }
    }
  }
  for (auto& list : adj) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  return adj;
}

namespace {

// Groups members by union-find root; items attach to the class of their first
// member. Output is ordered by smallest member because members are visited in
// ascending order.
template <class ItemRange, class FirstMember>
std::vector<Component> collect(UnionFind& uf, std::size_t n, const ItemRange& items, FirstMember first) {
  std::vector<std::uint32_t> slot(n, kNoParent);
  std::vector<Component> out;
  for (std::uint32_t v = 0; v < n; ++v) {
    const std::uint32_t root = uf.find(v);
    if (slot[root] == kNoParent) {
      slot[root] = static_cast<std::uint32_t>(out.size());
      out.emplace_back();
    }
    out[slot[root]].members.push_back(v);
  }
  for (std::size_t k = 0; k < items.size(); ++k) out[slot[uf.find(first(items[k]))]].items.push_back(k);
  return out;
}

}  // namespace

std::vector<Component> components(const NaeInstance& i) {
  UnionFind uf(i.var_count());
  for (const Clause& c : i.clauses()) {
    uf.unite(c[0].var, c[1].var);
    uf.unite(c[0].var, c[2].var);
  }
  return collect(uf, i.var_count(), i.clauses(), [](const Clause& c) { return c[0].var; });
}

std::vector<Component> components(const Hypergraph& h) {
  UnionFind uf(h.vertex_count());
  for (const auto& e : h.edges()) {
    for (std::size_t k = 1; k < e.size(); ++k) uf.unite(e[0], e[k]);
  }
  return collect(uf, h.vertex_count(), h.edges(), [](const Hypergraph::Edge& e) { return e[0]; });
}

bool is_connected(const NaeInstance& i) {
  if (i.var_count() == 0) return true;
  UnionFind uf(i.var_count());
  for (const Clause& c : i.clauses()) {
    uf.unite(c[0].var, c[1].var);
    uf.unite(c[0].var, c[2].var);
  }
  return uf.count() == 1;
}

bool is_connected(const Hypergraph& h) {
  if (h.vertex_count() == 0) return true;
  UnionFind uf(h.vertex_count());
  for (const auto& e : h.edges()) {
    for (std::size_t k = 1; k < e.size(); ++k) uf.unite(e[0], e[k]);
  }
  return uf.count() == 1;
}

IndexMap IndexMap::identity(std::size_t n) {
  IndexMap m;
  m.to_parent.resize(n);
  for (std::size_t k = 0; k < n; ++k) m.to_parent[k] = static_cast<std::uint32_t>(k);
  return m;
}

IndexMap IndexMap::compose(const IndexMap& inner) const {
  IndexMap out;
  out.to_parent.reserve(inner.size());
  for (std::uint32_t child : inner.to_parent) {
    out.to_parent.push_back(child == kNoParent ? kNoParent : to_parent.at(child));
  }
  return out;
}

std::vector<std::uint32_t> IndexMap::inverse(std::size_t parent_count) const {
  std::vector<std::uint32_t> inv(parent_count, kNoParent);
  for (std::size_t c = 0; c < to_parent.size(); ++c) {
    if (to_parent[c] != kNoParent) inv.at(to_parent[c]) = static_cast<std::uint32_t>(c);
  }
  return inv;
}

Derived<NaeInstance> restrict_instance(const NaeInstance& i, std::span<const VarId> vars,
                                       std::span<const std::size_t> clause_ids, std::span<const Clause> extra) {
  Derived<NaeInstance> out;
  out.vars.to_parent.assign(vars.begin(), vars.end());
  std::sort(out.vars.to_parent.begin(), out.vars.to_parent.end());
  if (std::adjacent_find(out.vars.to_parent.begin(), out.vars.to_parent.end()) != out.vars.to_parent.end()) {
    fail(ErrorKind::InvalidArgument, "restrict_instance: repeated variable");
  }
  const auto child_of = out.vars.inverse(i.var_count());

  auto translate = [&](const Clause& c) {
    std::array<Literal, 3> lits{};
    for (int p = 0; p < 3; ++p) {
      const VarId child = child_of.at(c[p].var);
      if (child == kNoParent) {
        fail(ErrorKind::DanglingVariable, "clause keeps dropped variable " + std::to_string(c[p].var));
      }
      lits[p] = {child, c[p].negated};
    }
    return Clause(lits);
  };

  std::vector<Clause> clauses;
  clauses.reserve(clause_ids.size() + extra.size());
  for (std::size_t id : clause_ids) {
    clauses.push_back(translate(i.clause(id)));
    out.items.to_parent.push_back(static_cast<std::uint32_t>(id));
  }
  for (const Clause& c : extra) {
    clauses.push_back(translate(c));
    out.items.to_parent.push_back(kNoParent);
  }
  out.value = NaeInstance(out.vars.size(), std::move(clauses));
  return out;
}

Derived<Hypergraph> restrict_hypergraph(const Hypergraph& h, std::span<const VertexId> vertices,
                                        std::span<const std::size_t> edge_ids) {
  Derived<Hypergraph> out;
  out.vars.to_parent.assign(vertices.begin(), vertices.end());
  std::sort(out.vars.to_parent.begin(), out.vars.to_parent.end());
  if (std::adjacent_find(out.vars.to_parent.begin(), out.vars.to_parent.end()) != out.vars.to_parent.end()) {
    fail(ErrorKind::InvalidArgument, "restrict_hypergraph: repeated vertex");
  }
  const auto child_of = out.vars.inverse(h.vertex_count());
  std::vector<Hypergraph::Edge> edges;
  edges.reserve(edge_ids.size());
  for (std::size_t id : edge_ids) {
    Hypergraph::Edge e;
    for (VertexId u : h.edge(id)) {
      const VertexId child = child_of.at(u);
      if (child == kNoParent) fail(ErrorKind::DanglingVariable, "edge keeps dropped vertex " + std::to_string(u));
      e.push_back(child);
    }
    edges.push_back(std::move(e));
    out.items.to_parent.push_back(static_cast<std::uint32_t>(id));
  }
  out.value = Hypergraph(out.vars.size(), std::move(edges));
  return out;
}

namespace {

std::vector<std::size_t> all_but(std::size_t n, std::size_t skip) {
  std::vector<std::size_t> ids;
  ids.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (k != skip) ids.push_back(k);
  }
  return ids;
}

std::vector<VarId> all_vars_but(std::size_t n, std::size_t skip) {
  std::vector<VarId> ids;
  ids.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (k != skip) ids.push_back(static_cast<VarId>(k));
  }
  return ids;
}

}  // namespace

Derived<NaeInstance> delete_clause(const NaeInstance& i, std::size_t clause) {
  if (clause >= i.clause_count()) fail(ErrorKind::InvalidArgument, "no clause " + std::to_string(clause));
  const auto vars = all_vars_but(i.var_count(), i.var_count());
  const auto ids = all_but(i.clause_count(), clause);
  return restrict_instance(i, vars, ids);
}

Derived<NaeInstance> delete_variable(const NaeInstance& i, VarId v) {
  if (v >= i.var_count()) fail(ErrorKind::InvalidArgument, "no variable " + std::to_string(v));
  if (degree(i, v) != 0) {
    fail(ErrorKind::DanglingVariable, "variable " + std::to_string(v) + " still occurs in a clause");
  }
  const auto vars = all_vars_but(i.var_count(), v);
  const auto ids = all_but(i.clause_count(), i.clause_count());
  return restrict_instance(i, vars, ids);
}

NaeInstance substitute_literal(const NaeInstance& i, std::size_t clause, std::size_t position, Literal lit) {
  if (clause >= i.clause_count() || position >= 3) fail(ErrorKind::InvalidArgument, "no such literal slot");
  if (lit.var >= i.var_count()) fail(ErrorKind::InvalidArgument, "no variable " + std::to_string(lit.var));
  std::vector<Clause> clauses(i.clauses().begin(), i.clauses().end());
  auto lits = clauses[clause].literals();
  lits[position] = lit;
  clauses[clause] = Clause(lits);
  return NaeInstance(i.var_count(), std::move(clauses));
}

Derived<Hypergraph> delete_edge(const Hypergraph& h, std::size_t edge) {
  if (edge >= h.edge_count()) fail(ErrorKind::InvalidArgument, "no edge " + std::to_string(edge));
  const auto vertices = all_vars_but(h.vertex_count(), h.vertex_count());
  const auto ids = all_but(h.edge_count(), edge);
  return restrict_hypergraph(h, vertices, ids);
}

Hypergraph add_edge(const Hypergraph& h, Hypergraph::Edge edge) {
  std::vector<Hypergraph::Edge> edges(h.edges().begin(), h.edges().end());
  edges.push_back(std::move(edge));
  return Hypergraph(h.vertex_count(), std::move(edges));
}

NaeCertificate lift(const NaeCertificate& child, const IndexMap& vars, std::size_t parent_count) {
  NaeCertificate out;
  out.assignment = lift(child.assignment, vars, parent_count, Truth::Unassigned);
  if (child.free_var) out.free_var = vars[*child.free_var];
  return out;
}

ColoringCertificate lift(const ColoringCertificate& child, const IndexMap& vertices, std::size_t parent_count) {
  ColoringCertificate out;
  out.coloring = lift(child.coloring, vertices, parent_count, Color::None);
  if (child.free_vertex) out.free_vertex = vertices[*child.free_vertex];
  return out;
}

}  // namespace freevertex
