#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "freevertex/assignment.hpp"
#include "freevertex/instance.hpp"
#include "freevertex/structure.hpp"

/// Constructive solver for connected NAE-3-SAT instances with fewer clauses
/// than variables and every variable of degree at most 3. Such an instance is
/// always nae-satisfiable with one variable left unassigned; the solver
/// produces that certificate by recursing on strictly smaller instances:
///
///  - a degree-1 variable is peeled off with its clause (Base, A-connected,
///    A-split);
///  - otherwise the smallest degree-2 variable v is eliminated together with
///    its two clauses c1, c2, dispatching on the number of variables they
///    span: five (C-4comp, C-main), four (D), or three (E-only, F, G,
///    G-final).
///
/// Every structural fact the construction depends on is checked at run time
/// and raises InternalInvariant when violated.
namespace freevertex::nae {

enum class Case { Base, AConnected, ASplit, C4Comp, CMain, D, EOnly, F, G, GFinal };

std::string_view to_string(Case c) noexcept;

struct TraceStep {
  std::size_t depth = 0;
  Case label = Case::Base;
  /// Clause and variable ids refer to the instance solved at this step.
  std::vector<std::size_t> deleted_clauses;
  std::vector<VarId> deleted_vars;
  /// Clauses complemented (v made positive, or c1 aligned with c2) before the
  /// bridging clause was built.
  std::vector<std::size_t> normalized_clauses;
  std::optional<Clause> added_clause;
  /// Variable translation of every sub-instance recursed upon, in order.
  std::vector<IndexMap> children;
  /// Clause counts of those sub-instances.
  std::vector<std::size_t> child_clause_counts;
};

struct ReductionTrace {
  std::vector<TraceStep> steps;

  std::size_t max_depth() const noexcept;
  /// One line per step:
  /// STEP <n> CASE <label> DEL-C <ids> DEL-V <ids> ADD-C <clause or ->
  std::string dump() const;
};

struct SolveOptions {
#ifdef NDEBUG
  bool check_levels = false;
#else
  bool check_levels = true;
#endif
};

/// Why `i` is outside the solver's domain, or nullopt when it qualifies.
std::optional<std::string> hypothesis_failure(const NaeInstance& i);

/// Certificate with exactly one free variable. Raises PreconditionViolated
/// when hypothesis_failure(i) reports something. When `trace` is given it is
/// filled as the recursion proceeds, so it stays meaningful after an
/// exception.
NaeCertificate solve_free(const NaeInstance& i, ReductionTrace* trace = nullptr, const SolveOptions& options = {});

/// The reduction steps, callable on their own. Each expects a qualifying
/// instance and recurses through solve_free for its sub-instances.
/// reduce_degree_one needs degree(i, v) == 1. reduce_degree_two needs every
/// degree >= 2 and degree(i, v) == 2. solve_q3 needs both clauses of the
/// degree-2 variable v to span exactly {v, q1, q2}.
NaeCertificate reduce_degree_one(const NaeInstance& i, VarId v, ReductionTrace* trace = nullptr,
                                 const SolveOptions& options = {});
NaeCertificate reduce_degree_two(const NaeInstance& i, VarId v, ReductionTrace* trace = nullptr,
                                 const SolveOptions& options = {});
NaeCertificate solve_q3(const NaeInstance& i, VarId v, VarId q1, VarId q2, ReductionTrace* trace = nullptr,
                        const SolveOptions& options = {});

enum class Table1Value { True, False, Impossible };

/// Value of v that makes {v, l1, l2} and {v, l3, .} both nae given the values
/// of l1, l2, l3. Impossible exactly for (T,T,F) and (F,F,T).
Table1Value table1_value(bool l1, bool l2, bool l3) noexcept;

/// Negates the assigned values of `vars`; Unassigned entries stay put.
PartialAssignment flip_component(PartialAssignment a, std::span<const VarId> vars);

}  // namespace freevertex::nae
