#include "freevertex/nae_solver.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "freevertex/error.hpp"
#include "freevertex/oracle.hpp"

namespace freevertex::nae {

std::string_view to_string(Case c) noexcept {
  switch (c) {
    case Case::Base: return "Base";
    case Case::AConnected: return "A-connected";
    case Case::ASplit: return "A-split";
    case Case::C4Comp: return "C-4comp";
    case Case::CMain: return "C-main";
    case Case::D: return "D";
    case Case::EOnly: return "E-only";
    case Case::F: return "F";
    case Case::G: return "G";
    case Case::GFinal: return "G-final";
  }
  return "?";
}

std::size_t ReductionTrace::max_depth() const noexcept {
  std::size_t d = 0;
  for (const auto& s : steps) d = std::max(d, s.depth);
  return d;
}

namespace {

template <class Range>
std::string join_ids(const Range& ids) {
  if (ids.empty()) return "-";
  std::string out;
  for (const auto& id : ids) {
    if (!out.empty()) out += ',';
    out += std::to_string(id);
  }
  return out;
}

std::string clause_text(const Clause& c) {
  std::string out;
  for (const Literal& l : c.literals()) {
    if (!out.empty()) out += ',';
    out += (l.negated ? "-" : "") + std::to_string(l.var + 1);
  }
  return out;
}

}  // namespace

std::string ReductionTrace::dump() const {
  std::ostringstream out;
  for (std::size_t n = 0; n < steps.size(); ++n) {
    const auto& s = steps[n];
    out << "STEP " << n << " CASE " << to_string(s.label) << " DEL-C " << join_ids(s.deleted_clauses) << " DEL-V "
        << join_ids(s.deleted_vars) << " ADD-C " << (s.added_clause ? clause_text(*s.added_clause) : "-") << '\n';
  }
  return out.str();
}

Table1Value table1_value(bool l1, bool l2, bool l3) noexcept {
  if (l1 == l2) {
    if (l3 != l1) return Table1Value::Impossible;
    return l1 ? Table1Value::False : Table1Value::True;
  }
  return l3 ? Table1Value::False : Table1Value::True;
}

PartialAssignment flip_component(PartialAssignment a, std::span<const VarId> vars) {
  for (VarId v : vars) a.at(v) = flip(a.at(v));
  return a;
}

std::optional<std::string> hypothesis_failure(const NaeInstance& i) {
  if (i.var_count() == 0) return "instance has no variables";
  if (i.clause_count() >= i.var_count()) {
    return "clause count " + std::to_string(i.clause_count()) + " is not below variable count " +
           std::to_string(i.var_count());
  }
  const auto deg = degrees(i);
  for (std::size_t v = 0; v < deg.size(); ++v) {
    if (deg[v] > 3) return "variable " + std::to_string(v) + " has degree " + std::to_string(deg[v]) + " > 3";
  }
  if (!is_connected(i)) return "instance is not connected";
  return std::nullopt;
}

namespace {

bool truth_of(Truth t) {
  ensure(t != Truth::Unassigned, "literal expected to be assigned");
  return t == Truth::True;
}

Truth value(const PartialAssignment& a, Literal l) { return eval(l, a.at(l.var)); }

/// Gives `l.var` the value that makes literal `l` evaluate to `want`.
void set_literal(PartialAssignment& a, Literal l, bool want) { a.at(l.var) = truth(want != l.negated); }

/// True when every clause in `cs` sees both truth values under `a`, ignoring
/// unassigned variables.
bool all_nae(std::span<const Clause> cs, const PartialAssignment& a) {
  for (const Clause& c : cs) {
    bool t = false;
    bool f = false;
    for (const Literal& l : c.literals()) {
      const Truth x = value(a, l);
      t |= x == Truth::True;
      f |= x == Truth::False;
    }
    if (!t || !f) return false;
  }
  return true;
}

std::vector<VarId> iota_except(std::size_t n, std::initializer_list<VarId> skip) {
  std::vector<VarId> out;
  for (std::size_t v = 0; v < n; ++v) {
    if (std::find(skip.begin(), skip.end(), static_cast<VarId>(v)) == skip.end()) out.push_back(static_cast<VarId>(v));
  }
  return out;
}

std::vector<std::size_t> ids_except(std::size_t n, std::initializer_list<std::size_t> skip) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < n; ++k) {
    if (std::find(skip.begin(), skip.end(), k) == skip.end()) out.push_back(k);
  }
  return out;
}

std::vector<std::size_t> clauses_with(const NaeInstance& i, VarId v) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < i.clause_count(); ++k) {
    if (i.clause(k).contains(v)) out.push_back(k);
  }
  return out;
}

/// Two clauses over exactly {v, q1, q2}: assigns two of the variables so that
/// both clauses are nae and returns the third, preferring v. The two assigned
/// variables are those whose literals coincide across the clauses (after
/// aligning c1 with c2 the caller guarantees at least two coincide).
VarId solve_pair(const Clause& c1, const Clause& c2, std::array<VarId, 3> vars, PartialAssignment& a) {
  // Preference order for the free variable: v, then q1, then q2.
  for (std::size_t f = 0; f < 3; ++f) {
    const VarId x = vars[(f + 1) % 3];
    const VarId y = vars[(f + 2) % 3];
    if (c1.literal_of(x) == c2.literal_of(x) && c1.literal_of(y) == c2.literal_of(y)) {
      const VarId lo = std::min(x, y) == x ? x : y;
      const VarId hi = lo == x ? y : x;
      set_literal(a, c1.literal_of(lo), true);
      set_literal(a, c1.literal_of(hi), false);
      a[vars[f]] = Truth::Unassigned;
      return vars[f];
    }
  }
  fail(ErrorKind::InternalInvariant, "clauses on {v,q1,q2} share fewer than two literals after alignment");
}

class Solver {
 public:
  Solver(ReductionTrace* trace, const SolveOptions& options) : trace_(trace), options_(options) {}

  NaeCertificate solve(const NaeInstance& i, std::size_t depth) {
    NaeCertificate cert = dispatch(i, depth);
    if (options_.check_levels) {
      const auto verdict = oracle::verify_nae_certificate(i, cert);
      ensure(verdict.ok && cert.free_var.has_value(),
             "level certificate failed verification at depth " + std::to_string(depth) +
                 (verdict.reasons.empty() ? std::string() : ": " + verdict.reasons.front()));
    }
    return cert;
  }

  NaeCertificate degree_one(const NaeInstance& i, VarId v, std::size_t depth);
  NaeCertificate degree_two(const NaeInstance& i, VarId v, std::size_t depth);
  NaeCertificate q3(const NaeInstance& i, VarId v, VarId q1, VarId q2, std::size_t depth);

 private:
  NaeCertificate dispatch(const NaeInstance& i, std::size_t depth) {
    if (i.clause_count() == 0) {
      ensure(i.var_count() == 1, "clause-free connected instance must have one variable");
      record(depth, Case::Base, {}, {}, {}, std::nullopt);
      return {{Truth::Unassigned}, VarId{0}};
    }
    const auto deg = degrees(i);
    for (std::size_t v = 0; v < deg.size(); ++v) {
      ensure(deg[v] != 0, "isolated variable in a connected instance");
      if (deg[v] == 1) return degree_one(i, static_cast<VarId>(v), depth);
    }
    for (std::size_t v = 0; v < deg.size(); ++v) {
      if (deg[v] == 2) return degree_two(i, static_cast<VarId>(v), depth);
    }
    fail(ErrorKind::InternalInvariant, "no variable of degree 2 although every degree is at least 2");
  }

  TraceStep& record(std::size_t depth, Case label, std::vector<std::size_t> del_c, std::vector<VarId> del_v,
                    std::vector<std::size_t> normalized, std::optional<Clause> added) {
    scratch_ = TraceStep{};
    TraceStep& step = trace_ ? trace_->steps.emplace_back() : scratch_;
    step.depth = depth;
    step.label = label;
    step.deleted_clauses = std::move(del_c);
    step.deleted_vars = std::move(del_v);
    step.normalized_clauses = std::move(normalized);
    step.added_clause = std::move(added);
    return step;
  }

  /// Solves a sub-instance after checking that it still qualifies, and lifts
  /// the certificate into the parent's index space.
  NaeCertificate recurse(const NaeInstance& parent, const Derived<NaeInstance>& child, std::size_t step_index,
                         std::size_t depth) {
    if (auto why = hypothesis_failure(child.value)) {
      fail(ErrorKind::InternalInvariant, "sub-instance at depth " + std::to_string(depth + 1) + " " + *why);
    }
    ensure(child.value.clause_count() < parent.clause_count(), "sub-instance does not have fewer clauses");
    if (trace_) {
      auto& step = trace_->steps.at(step_index);
      step.children.push_back(child.vars);
      step.child_clause_counts.push_back(child.value.clause_count());
    }
    return lift(solve(child.value, depth + 1), child.vars, parent.var_count());
  }

  /// Solves a sub-instance where the free variable is not needed; it gets
  /// True.
  PartialAssignment recurse_total(const NaeInstance& parent, const Derived<NaeInstance>& child,
                                  std::size_t step_index, std::size_t depth) {
    NaeCertificate sub = recurse(parent, child, step_index, depth);
    if (sub.free_var) sub.assignment[*sub.free_var] = Truth::True;
    return sub.assignment;
  }

  std::size_t current_step() const { return trace_ ? trace_->steps.size() - 1 : 0; }

  /// Solves every component of `i` minus the given clauses and variables,
  /// fully assigned. Returns the merged assignment and per-component
  /// variable lists (parent ids).
  struct Split {
    PartialAssignment assignment;
    std::vector<std::vector<VarId>> members;
    std::vector<std::size_t> component_of;  // parent var -> component, kNoParent if deleted
  };

  Split solve_components(const NaeInstance& i, const std::vector<VarId>& keep_vars,
                         const std::vector<std::size_t>& keep_clauses, std::size_t step_index, std::size_t depth) {
    const auto rest = restrict_instance(i, keep_vars, keep_clauses);
    Split out;
    out.assignment.assign(i.var_count(), Truth::Unassigned);
    out.component_of.assign(i.var_count(), kNoParent);
    for (const Component& comp : components(rest.value)) {
      std::vector<VarId> vars;
      std::vector<std::size_t> ids;
      for (auto m : comp.members) vars.push_back(rest.vars[m]);
      for (auto k : comp.items) ids.push_back(rest.items[k]);
      for (VarId x : vars) out.component_of[x] = out.members.size();
      const auto child = restrict_instance(i, vars, ids);
      const auto a = recurse_total(i, child, step_index, depth);
      for (VarId x : vars) out.assignment[x] = a[x];
      out.members.push_back(std::move(vars));
    }
    return out;
  }

  ReductionTrace* trace_;
  SolveOptions options_;
  TraceStep scratch_;
};

NaeCertificate Solver::degree_one(const NaeInstance& i, VarId v, std::size_t depth) {
  const auto deg = degrees(i);
  const std::size_t cid = clauses_with(i, v).front();
  const Clause& c = i.clause(cid);
  std::array<Literal, 2> co{};
  for (std::size_t p = 0, k = 0; p < 3; ++p) {
    if (c[p].var != v) co[k++] = c[p];
  }

  if (deg[co[0].var] == 1 && deg[co[1].var] == 1) {
    ensure(i.clause_count() == 1 && i.var_count() == 3, "clause of three degree-1 variables is not the whole instance");
    record(depth, Case::Base, {}, {}, {}, std::nullopt);
    PartialAssignment a(3, Truth::Unassigned);
    set_literal(a, co[0], true);
    set_literal(a, co[1], false);
    return {std::move(a), v};
  }

  const auto keep_vars = iota_except(i.var_count(), {v});
  const auto keep_clauses = ids_except(i.clause_count(), {cid});
  const auto rest = restrict_instance(i, keep_vars, keep_clauses);
  const auto comps = components(rest.value);

  if (comps.size() == 1) {
    record(depth, Case::AConnected, {cid}, {v}, {}, std::nullopt);
    NaeCertificate cert = recurse(i, rest, current_step(), depth);
    // Oppose the first assigned co-literal.
    const Literal anchor = value(cert.assignment, co[0]) != Truth::Unassigned ? co[0] : co[1];
    const Literal own = c.literal_of(v);
    set_literal(cert.assignment, own, !truth_of(value(cert.assignment, anchor)));
    return cert;
  }

  ensure(comps.size() == 2, "deleting a degree-1 variable left " + std::to_string(comps.size()) + " components");
  record(depth, Case::ASplit, {cid}, {v}, {}, std::nullopt);
  Split split = solve_components(i, keep_vars, keep_clauses, current_step(), depth);
  ensure(split.component_of[co[0].var] != split.component_of[co[1].var],
         "co-variables of the peeled clause share a component");
  if (truth_of(value(split.assignment, co[0])) == truth_of(value(split.assignment, co[1]))) {
    split.assignment = flip_component(std::move(split.assignment), split.members[split.component_of[co[1].var]]);
  }
  split.assignment[v] = Truth::Unassigned;
  return {std::move(split.assignment), v};
}

NaeCertificate Solver::degree_two(const NaeInstance& i, VarId v, std::size_t depth) {
  const auto on_v = clauses_with(i, v);
  ensure(on_v.size() == 2, "degree-2 variable does not lie in two clauses");
  const std::size_t id1 = on_v[0];
  const std::size_t id2 = on_v[1];

  std::vector<VarId> q;
  for (std::size_t id : on_v) {
    for (const Literal& l : i.clause(id).literals()) {
      if (l.var != v && std::find(q.begin(), q.end(), l.var) == q.end()) q.push_back(l.var);
    }
  }

  if (q.size() == 2) {
    const Clause& c1 = i.clause(id1);
    std::array<VarId, 2> others{};
    for (std::size_t p = 0, k = 0; p < 3; ++p) {
      if (c1[p].var != v) others[k++] = c1[p].var;
    }
    return q3(i, v, others[0], others[1], depth);
  }

  // Make v a positive literal in both clauses.
  std::vector<std::size_t> normalized;
  Clause c1 = i.clause(id1);
  Clause c2 = i.clause(id2);
  if (c1.literal_of(v).negated) {
    c1 = c1.negated();
    normalized.push_back(id1);
  }
  if (c2.literal_of(v).negated) {
    c2 = c2.negated();
    normalized.push_back(id2);
  }
  auto others_of = [v](const Clause& c) {
    std::array<VarId, 2> out{};
    for (std::size_t p = 0, k = 0; p < 3; ++p) {
      if (c[p].var != v) out[k++] = c[p].var;
    }
    return out;
  };

  const auto keep_vars = iota_except(i.var_count(), {v});
  const auto keep_clauses = ids_except(i.clause_count(), {id1, id2});

  VarId q1 = 0;
  VarId q2 = 0;
  VarId q3v = 0;
  Clause first = c1;   // plays c1: holds q1, q2
  Clause second = c2;  // plays c2: holds q3 (and q4 when |Q| = 5)
  std::optional<Literal> l4;
  Case label = Case::D;

  if (q.size() == 4) {
    const auto rest = restrict_instance(i, keep_vars, keep_clauses);
    const auto comps = components(rest.value);
    std::vector<std::size_t> comp_of(i.var_count(), kNoParent);
    for (std::size_t k = 0; k < comps.size(); ++k) {
      for (auto m : comps[k].members) comp_of[rest.vars[m]] = k;
    }
    const auto [a, b] = others_of(c1);
    const auto [c, d] = others_of(c2);

    if (comps.size() == 4) {
      record(depth, Case::C4Comp, {id1, id2}, {v}, std::move(normalized), std::nullopt);
      Split split = solve_components(i, keep_vars, keep_clauses, current_step(), depth);
      for (VarId x : {a, b, c, d}) {
        ensure(split.members[split.component_of[x]].size() >= 1, "missing component");
      }
      ensure(split.component_of[a] != split.component_of[b] && split.component_of[c] != split.component_of[d] &&
                 split.component_of[a] != split.component_of[c],
             "four components do not separate the clause variables");
      if (truth_of(value(split.assignment, c1.literal_of(a))) == truth_of(value(split.assignment, c1.literal_of(b)))) {
        split.assignment = flip_component(std::move(split.assignment), split.members[split.component_of[b]]);
      }
      if (truth_of(value(split.assignment, c2.literal_of(c))) == truth_of(value(split.assignment, c2.literal_of(d)))) {
        split.assignment = flip_component(std::move(split.assignment), split.members[split.component_of[d]]);
      }
      split.assignment[v] = Truth::Unassigned;
      return {std::move(split.assignment), v};
    }

    ensure(comps.size() <= 3, "more than four components after removing v");
    // Pick q4 in the clause playing c2 so that it shares a component with one
    // of the other three variables.
    label = Case::CMain;
    VarId q4 = 0;
    if (comp_of[c] == comp_of[a] || comp_of[c] == comp_of[b] || comp_of[c] == comp_of[d]) {
      q1 = a, q2 = b, q3v = d, q4 = c;
    } else if (comp_of[d] == comp_of[a] || comp_of[d] == comp_of[b]) {
      q1 = a, q2 = b, q3v = c, q4 = d;
    } else {
      ensure(comp_of[a] == comp_of[b], "no pair of clause variables shares a component");
      std::swap(first, second);
      q1 = c, q2 = d, q3v = b, q4 = a;
    }
    l4 = second.literal_of(q4);
  } else {
    ensure(q.size() == 3, "two clauses through v span an impossible number of variables");
    // The shared variable is q1.
    const auto [a, b] = others_of(c1);
    const auto [c, d] = others_of(c2);
    if (a == c || a == d) {
      q1 = a, q2 = b;
    } else {
      q1 = b, q2 = a;
    }
    q3v = (c == q1) ? d : c;
  }

  const Literal l1 = first.literal_of(q1);
  const Literal l2 = first.literal_of(q2);
  const Literal l3 = second.literal_of(q3v);
  const Clause bridge(l1, l2, ~l3);
  const Clause extra[] = {bridge};
  const auto reduced = restrict_instance(i, keep_vars, keep_clauses, extra);
  ensure(is_connected(reduced.value), "instance with the bridging clause is not connected");
  record(depth, label, {id1, id2}, {v}, std::move(normalized), bridge);
  NaeCertificate cert = recurse(i, reduced, current_step(), depth);
  auto& a = cert.assignment;
  const VarId f = *cert.free_var;

  bool v_value = false;
  if (f != q1 && f != q2 && f != q3v) {
    const auto t = table1_value(truth_of(value(a, l1)), truth_of(value(a, l2)), truth_of(value(a, l3)));
    ensure(t != Table1Value::Impossible, "bridging clause admitted an excluded value pattern");
    v_value = t == Table1Value::True;
  } else if (f == q1 || f == q2) {
    const Literal other = f == q1 ? l2 : l1;
    ensure(value(a, other) == value(a, l3), "bridging clause with a free variable forces equal literals");
    v_value = !truth_of(value(a, l3));
  } else {
    ensure(value(a, l1) != value(a, l2), "bridging clause with q3 free forces distinct literals");
    // Oppose the remaining literal of the clause holding q3.
    const Literal rest = label == Case::CMain ? *l4 : second.literal_of(q1);
    v_value = !truth_of(value(a, rest));
  }
  // v is a positive literal in the normalized clauses, which are nae exactly
  // when the originals are.
  a[v] = truth(v_value);
  return cert;
}

NaeCertificate Solver::q3(const NaeInstance& i, VarId v, VarId q1, VarId q2, std::size_t depth) {
  const auto on_v = clauses_with(i, v);
  ensure(on_v.size() == 2, "degree-2 variable does not lie in two clauses");
  const std::size_t id1 = on_v[0];
  const std::size_t id2 = on_v[1];
  Clause c1 = i.clause(id1);
  const Clause& c2 = i.clause(id2);
  for (const Clause* c : std::initializer_list<const Clause*>{&c1, &c2}) {
    ensure(c->contains(q1) && c->contains(q2), "clauses of v do not span exactly {v, q1, q2}");
  }

  auto agreeing = [&](const Clause& x) {
    int n = 0;
    for (VarId u : {v, q1, q2}) n += x.literal_of(u) == c2.literal_of(u) ? 1 : 0;
    return n;
  };
  std::vector<std::size_t> normalized;
  if (agreeing(c1) <= 1) {
    c1 = c1.negated();
    normalized.push_back(id1);
  }

  if (i.clause_count() == 2) {
    ensure(i.var_count() == 3, "two clauses on three variables with extra variables");
    record(depth, Case::EOnly, {}, {}, std::move(normalized), std::nullopt);
    PartialAssignment a(3, Truth::Unassigned);
    const VarId f = solve_pair(c1, c2, {v, q1, q2}, a);
    return {std::move(a), f};
  }

  // c3: the first other clause meeting q1 or q2; name things so it holds q2.
  std::optional<std::size_t> id3;
  for (std::size_t k = 0; k < i.clause_count() && !id3; ++k) {
    if (k != id1 && k != id2 && (i.clause(k).contains(q1) || i.clause(k).contains(q2))) id3 = k;
  }
  ensure(id3.has_value(), "instance larger than its {v,q1,q2} core has no clause leaving it");
  const Clause& c3 = i.clause(*id3);
  if (!c3.contains(q2)) std::swap(q1, q2);

  if (c3.contains(q1)) {
    const auto deg = degrees(i);
    ensure(deg[q1] == 3 && deg[q2] == 3, "q1 and q2 must lie only in c1, c2, c3");
    VarId q3v = 0;
    for (const Literal& l : c3.literals()) {
      if (l.var != q1 && l.var != q2) q3v = l.var;
    }
    record(depth, Case::F, {id1, id2, *id3}, {v, q1, q2}, std::move(normalized), std::nullopt);
    const auto keep_vars = iota_except(i.var_count(), {v, q1, q2});
    const auto keep_clauses = ids_except(i.clause_count(), {id1, id2, *id3});
    const auto rest = restrict_instance(i, keep_vars, keep_clauses);
    ensure(is_connected(rest.value), "remainder after removing {v,q1,q2} is not connected");
    PartialAssignment a = recurse_total(i, rest, current_step(), depth);
    const VarId f = solve_pair(c1, c2, {v, q1, q2}, a);
    const VarId x = a[q1] != Truth::Unassigned ? q1 : q2;
    if (value(a, c3.literal_of(x)) == value(a, c3.literal_of(q3v))) a = flip_component(std::move(a), keep_vars);
    return {std::move(a), f};
  }

  // Is v free in the two-clause core? Both clauses must then be nae on their
  // q-literals alone.
  bool v_free_in_core = false;
  for (bool x : {false, true}) {
    for (bool y : {false, true}) {
      PartialAssignment probe(i.var_count(), Truth::Unassigned);
      probe[q1] = truth(x);
      probe[q2] = truth(y);
      const Clause pair[] = {c1, c2};
      v_free_in_core |= all_nae(pair, probe);
    }
  }

  const auto deg = degrees(i);
  ensure(deg[q2] == 3, "q2 must lie only in c1, c2, c3");
  const Literal old = c3.literal_of(q2);
  const bool same_q_literals = c1.literal_of(q1) == c2.literal_of(q1) && c1.literal_of(q2) == c2.literal_of(q2);
  const bool exactly_one_negated = c1.literal_of(q1).negated != c1.literal_of(q2).negated;

  Literal replacement{q1, old.negated};
  if (v_free_in_core) {
    ensure(same_q_literals, "v free in the core but the q-literals of c1 and c2 differ");
    if (!exactly_one_negated) replacement.negated = !old.negated;
  } else {
    ensure(c1.literal_of(v) == c2.literal_of(v), "v not free in the core but its literals differ");
    ensure(!same_q_literals, "v not free in the core although both q-literals coincide");
  }
  auto lits = c3.literals();
  lits[static_cast<std::size_t>(c3.position_of(q2))] = replacement;
  const Clause c3_new(lits);

  const auto keep_vars = iota_except(i.var_count(), {v, q2});
  const auto keep_clauses = ids_except(i.clause_count(), {id1, id2, *id3});
  const Clause extra[] = {c3_new};
  const auto reduced = restrict_instance(i, keep_vars, keep_clauses, extra);
  ensure(is_connected(reduced.value), "instance with the substituted clause is not connected");
  record(depth, v_free_in_core ? Case::G : Case::GFinal, {id1, id2, *id3}, {v, q2}, std::move(normalized), c3_new);

  const Clause core[] = {c1, c2};
  if (v_free_in_core) {
    PartialAssignment a = recurse_total(i, reduced, current_step(), depth);
    a[q2] = exactly_one_negated ? a[q1] : flip(a[q1]);
    a[v] = Truth::Unassigned;
    return {std::move(a), v};
  }

  NaeCertificate cert = recurse(i, reduced, current_step(), depth);
  auto& a = cert.assignment;
  if (*cert.free_var == q1) {
    // Either q1 stays free and v, q2 are set, or q2 becomes free and v, q1
    // are set; both only need the core clauses to be nae.
    for (VarId keep_free : {q1, q2}) {
      const VarId other = keep_free == q1 ? q2 : q1;
      for (bool x : {true, false}) {
        for (bool y : {true, false}) {
          a[keep_free] = Truth::Unassigned;
          a[v] = truth(x);
          a[other] = truth(y);
          if (all_nae(core, a)) return {std::move(a), keep_free};
        }
      }
    }
    fail(ErrorKind::InternalInvariant, "no completion of the core with q1 or q2 free");
  }

  // Some w other than q1 is free: q2 copies q1, and v opposes q1's literal in
  // c1 unless that leaves a core clause monochromatic.
  a[q2] = a[q1];
  const bool preferred = !truth_of(value(a, c1.literal_of(q1)));
  for (bool lit_value : {preferred, !preferred}) {
    set_literal(a, c1.literal_of(v), lit_value);
    if (all_nae(core, a)) return cert;
  }
  fail(ErrorKind::InternalInvariant, "no value of v completes the core clauses");
}

void require_qualifying(const NaeInstance& i) {
  if (auto why = hypothesis_failure(i)) fail(ErrorKind::PreconditionViolated, *why);
}

NaeCertificate finish(const NaeInstance& i, NaeCertificate cert) {
  const auto verdict = oracle::verify_nae_certificate(i, cert);
  ensure(verdict.ok && cert.free_var.has_value(),
         "final certificate failed verification" +
             (verdict.reasons.empty() ? std::string() : ": " + verdict.reasons.front()));
  return cert;
}

}  // namespace

NaeCertificate solve_free(const NaeInstance& i, ReductionTrace* trace, const SolveOptions& options) {
  require_qualifying(i);
  Solver solver(trace, options);
  return finish(i, solver.solve(i, 0));
}

NaeCertificate reduce_degree_one(const NaeInstance& i, VarId v, ReductionTrace* trace, const SolveOptions& options) {
  require_qualifying(i);
  if (v >= i.var_count() || degree(i, v) != 1) fail(ErrorKind::PreconditionViolated, "variable must have degree 1");
  Solver solver(trace, options);
  return finish(i, solver.degree_one(i, v, 0));
}

NaeCertificate reduce_degree_two(const NaeInstance& i, VarId v, ReductionTrace* trace, const SolveOptions& options) {
  require_qualifying(i);
  if (v >= i.var_count() || degree(i, v) != 2) fail(ErrorKind::PreconditionViolated, "variable must have degree 2");
  const auto deg = degrees(i);
  if (std::any_of(deg.begin(), deg.end(), [](std::size_t d) { return d < 2; })) {
    fail(ErrorKind::PreconditionViolated, "every variable must have degree at least 2");
  }
  Solver solver(trace, options);
  return finish(i, solver.degree_two(i, v, 0));
}

NaeCertificate solve_q3(const NaeInstance& i, VarId v, VarId q1, VarId q2, ReductionTrace* trace,
                        const SolveOptions& options) {
  require_qualifying(i);
  if (v >= i.var_count() || degree(i, v) != 2) fail(ErrorKind::PreconditionViolated, "variable must have degree 2");
  for (std::size_t id : clauses_with(i, v)) {
    const Clause& c = i.clause(id);
    if (!c.contains(q1) || !c.contains(q2) || q1 == q2) {
      fail(ErrorKind::PreconditionViolated, "both clauses of v must span exactly {v, q1, q2}");
    }
  }
  const auto deg = degrees(i);
  if (std::any_of(deg.begin(), deg.end(), [](std::size_t d) { return d < 2; })) {
    fail(ErrorKind::PreconditionViolated, "every variable must have degree at least 2");
  }
  Solver solver(trace, options);
  return finish(i, solver.q3(i, v, q1, q2, 0));
}

}  // namespace freevertex::nae
