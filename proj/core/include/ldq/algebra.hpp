#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <vector>

#include "ldq/term.hpp"

namespace ldq {

class FilterCondition;
using FilterPtr = std::shared_ptr<const FilterCondition>;

// Boolean condition over a valuation. Equality and boundedness atoms are
// two-valued: an unbound variable makes the atom false, never an error.
class FilterCondition {
 public:
  enum class Kind { Eq, EqVar, Bound, Not, And, Or };

  static FilterPtr eq(Variable var, Term value);  // value: URI or literal
  static FilterPtr eq_var(Variable left, Variable right);
  static FilterPtr bound(Variable var);
  static FilterPtr negation(FilterPtr inner);
  static FilterPtr conjunction(FilterPtr left, FilterPtr right);
  static FilterPtr disjunction(FilterPtr left, FilterPtr right);

  Kind kind() const { return kind_; }
  const Variable& var() const { return var_; }
  const Variable& second_var() const { return second_var_; }
  const Term& value() const { return *value_; }
  const FilterCondition& left() const { return *left_; }
  const FilterCondition& right() const { return *right_; }

  friend bool operator==(const FilterCondition& a, const FilterCondition& b);

 private:
  FilterCondition() = default;

  Kind kind_ = Kind::Bound;
  Variable var_;
  Variable second_var_;
  std::optional<Term> value_;
  FilterPtr left_;
  FilterPtr right_;
};

class SparqlExpression;
using ExprPtr = std::shared_ptr<const SparqlExpression>;

// The core-fragment expression tree: triple patterns combined with AND,
// UNION, OPT, and FILTER. Immutable; subtrees may be shared.
class SparqlExpression {
 public:
  enum class Kind { Pattern, And, Union, Opt, Filter };

  static ExprPtr pattern(TriplePattern tp);
  static ExprPtr conjunction(ExprPtr left, ExprPtr right);
  static ExprPtr set_union(ExprPtr left, ExprPtr right);
  static ExprPtr optional(ExprPtr left, ExprPtr right);
  static ExprPtr filter(ExprPtr inner, FilterPtr condition);

  Kind kind() const { return kind_; }
  const TriplePattern& triple_pattern() const { return *pattern_; }
  const SparqlExpression& left() const { return *left_; }
  const SparqlExpression& right() const { return *right_; }
  const ExprPtr& left_ptr() const { return left_; }
  const ExprPtr& right_ptr() const { return right_; }
  const FilterCondition& condition() const { return *condition_; }
  const FilterPtr& condition_ptr() const { return condition_; }

  friend bool operator==(const SparqlExpression& a, const SparqlExpression& b);

 private:
  SparqlExpression() = default;
  static ExprPtr make_binary(Kind kind, ExprPtr left, ExprPtr right);

  Kind kind_ = Kind::Pattern;
  std::optional<TriplePattern> pattern_;
  ExprPtr left_;
  ExprPtr right_;
  FilterPtr condition_;
};

// A partial mapping from variables to terms. The empty valuation is a legal
// value. Ordered by domain-then-image, which makes sets of valuations
// deterministic.
class Valuation {
 public:
  Valuation() = default;

  bool contains(const Variable& v) const { return bindings_.contains(v); }
  const Term* find(const Variable& v) const {
    auto it = bindings_.find(v);
    return it == bindings_.end() ? nullptr : &it->second;
  }

  // Adds a binding; the variable must not be bound yet.
  void bind(Variable v, Term t);

  bool empty() const { return bindings_.empty(); }
  std::size_t size() const { return bindings_.size(); }

  auto begin() const { return bindings_.begin(); }
  auto end() const { return bindings_.end(); }

  std::set<Variable> domain() const;

  // Agreement on the shared part of the domains.
  static bool compatible(const Valuation& a, const Valuation& b);
  // Union of two compatible valuations.
  static Valuation merged(const Valuation& a, const Valuation& b);
  // True iff every binding of `part` is also in `whole`.
  static bool restriction_of(const Valuation& part, const Valuation& whole);

  friend bool operator==(const Valuation&, const Valuation&) = default;
  friend auto operator<=>(const Valuation&, const Valuation&) = default;

 private:
  std::map<Variable, Term> bindings_;
};

using SolutionSet = std::set<Valuation>;

// Variables occurring in the triple patterns of P (filter-only variables are
// not counted).
std::set<Variable> vars(const SparqlExpression& P);

// Leaf triple patterns of P in left-to-right order.
std::vector<TriplePattern> leaf_patterns(const SparqlExpression& P);

// Substitutes mu into tp. Throws UnboundVariable if tp has a variable outside
// dom(mu), IllegalPosition if the substituted triple is malformed.
Triple apply(const Valuation& mu, const TriplePattern& tp);

bool satisfies(const Valuation& mu, const FilterCondition& condition);

SolutionSet join(const SolutionSet& left, const SolutionSet& right);
SolutionSet set_union(const SolutionSet& left, const SolutionSet& right);
SolutionSet minus(const SolutionSet& left, const SolutionSet& right);
SolutionSet left_outer_join(const SolutionSet& left, const SolutionSet& right);
SolutionSet select(const FilterCondition& condition, const SolutionSet& input);

// Compositional set-semantics evaluation of P over a finite triple set.
SolutionSet eval(const SparqlExpression& P, const TripleSet& G);

// Independent oracle: enumerates candidate valuations over terms(G) and keeps
// those satisfying the defining conditions, rather than composing solutions
// through the operator algebra. Guarded: throws TooLarge when
// |terms(G)|^|vars(P)| exceeds 10^6 candidates.
SolutionSet brute_force_eval(const SparqlExpression& P, const TripleSet& G);

// Sufficient syntactic condition for monotonicity of P.
bool is_opt_free(const SparqlExpression& P);

}  // namespace ldq
