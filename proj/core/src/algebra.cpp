#include "ldq/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

namespace ldq {

FilterPtr FilterCondition::eq(Variable var, Term value) {
  if (value.is_blank()) {
    throw Error(Errc::BadTerm, "blank nodes cannot appear in filter conditions");
  }
  auto c = std::shared_ptr<FilterCondition>(new FilterCondition());
  c->kind_ = Kind::Eq;
  c->var_ = std::move(var);
  c->value_ = std::move(value);
  return c;
}

FilterPtr FilterCondition::eq_var(Variable left, Variable right) {
  auto c = std::shared_ptr<FilterCondition>(new FilterCondition());
  c->kind_ = Kind::EqVar;
  c->var_ = std::move(left);
  c->second_var_ = std::move(right);
  return c;
}

FilterPtr FilterCondition::bound(Variable var) {
  auto c = std::shared_ptr<FilterCondition>(new FilterCondition());
  c->kind_ = Kind::Bound;
  c->var_ = std::move(var);
  return c;
}

FilterPtr FilterCondition::negation(FilterPtr inner) {
  auto c = std::shared_ptr<FilterCondition>(new FilterCondition());
  c->kind_ = Kind::Not;
  c->left_ = std::move(inner);
  return c;
}

FilterPtr FilterCondition::conjunction(FilterPtr left, FilterPtr right) {
  auto c = std::shared_ptr<FilterCondition>(new FilterCondition());
  c->kind_ = Kind::And;
  c->left_ = std::move(left);
  c->right_ = std::move(right);
  return c;
}

FilterPtr FilterCondition::disjunction(FilterPtr left, FilterPtr right) {
  auto c = std::shared_ptr<FilterCondition>(new FilterCondition());
  c->kind_ = Kind::Or;
  c->left_ = std::move(left);
  c->right_ = std::move(right);
  return c;
}

bool operator==(const FilterCondition& a, const FilterCondition& b) {
  if (a.kind_ != b.kind_) return false;
  switch (a.kind_) {
    case FilterCondition::Kind::Eq:
      return a.var_ == b.var_ && a.value_ == b.value_;
    case FilterCondition::Kind::EqVar:
      return a.var_ == b.var_ && a.second_var_ == b.second_var_;
    case FilterCondition::Kind::Bound:
      return a.var_ == b.var_;
    case FilterCondition::Kind::Not:
      return *a.left_ == *b.left_;
    case FilterCondition::Kind::And:
    case FilterCondition::Kind::Or:
      return *a.left_ == *b.left_ && *a.right_ == *b.right_;
  }
  return false;
}

ExprPtr SparqlExpression::pattern(TriplePattern tp) {
  auto e = std::shared_ptr<SparqlExpression>(new SparqlExpression());
  e->kind_ = Kind::Pattern;
  e->pattern_ = std::move(tp);
  return e;
}

ExprPtr SparqlExpression::make_binary(Kind kind, ExprPtr left, ExprPtr right) {
  auto e = std::shared_ptr<SparqlExpression>(new SparqlExpression());
  e->kind_ = kind;
  e->left_ = std::move(left);
  e->right_ = std::move(right);
  return e;
}

ExprPtr SparqlExpression::conjunction(ExprPtr left, ExprPtr right) {
  return make_binary(Kind::And, std::move(left), std::move(right));
}

ExprPtr SparqlExpression::set_union(ExprPtr left, ExprPtr right) {
  return make_binary(Kind::Union, std::move(left), std::move(right));
}

ExprPtr SparqlExpression::optional(ExprPtr left, ExprPtr right) {
  return make_binary(Kind::Opt, std::move(left), std::move(right));
}

ExprPtr SparqlExpression::filter(ExprPtr inner, FilterPtr condition) {
  auto e = std::shared_ptr<SparqlExpression>(new SparqlExpression());
  e->kind_ = Kind::Filter;
  e->left_ = std::move(inner);
  e->condition_ = std::move(condition);
  return e;
}

bool operator==(const SparqlExpression& a, const SparqlExpression& b) {
  if (a.kind_ != b.kind_) return false;
  switch (a.kind_) {
    case SparqlExpression::Kind::Pattern:
      return a.pattern_ == b.pattern_;
    case SparqlExpression::Kind::Filter:
      return *a.left_ == *b.left_ && *a.condition_ == *b.condition_;
    default:
      return *a.left_ == *b.left_ && *a.right_ == *b.right_;
  }
}

void Valuation::bind(Variable v, Term t) {
  auto [it, inserted] = bindings_.emplace(std::move(v), std::move(t));
  if (!inserted) {
    throw Error(Errc::BadTerm, "variable ?" + it->first.name + " bound twice");
  }
}

std::set<Variable> Valuation::domain() const {
  std::set<Variable> d;
  for (const auto& [v, t] : bindings_) d.insert(v);
  return d;
}

bool Valuation::compatible(const Valuation& a, const Valuation& b) {
  const Valuation& small = a.size() <= b.size() ? a : b;
  const Valuation& large = a.size() <= b.size() ? b : a;
  for (const auto& [v, t] : small) {
    if (const Term* other = large.find(v); other && *other != t) return false;
  }
  return true;
}

Valuation Valuation::merged(const Valuation& a, const Valuation& b) {
  Valuation out = a;
  for (const auto& [v, t] : b) out.bindings_.emplace(v, t);
  return out;
}

bool Valuation::restriction_of(const Valuation& part, const Valuation& whole) {
  for (const auto& [v, t] : part) {
    const Term* other = whole.find(v);
    if (!other || *other != t) return false;
  }
  return true;
}

std::set<Variable> vars(const SparqlExpression& P) {
  std::set<Variable> out;
  switch (P.kind()) {
    case SparqlExpression::Kind::Pattern: {
      auto vs = P.triple_pattern().variables();
      out.insert(vs.begin(), vs.end());
      break;
    }
    case SparqlExpression::Kind::Filter: {
      out = vars(P.left());
      break;
    }
    default: {
      out = vars(P.left());
      auto rs = vars(P.right());
      out.insert(rs.begin(), rs.end());
      break;
    }
  }
  return out;
}

std::vector<TriplePattern> leaf_patterns(const SparqlExpression& P) {
  std::vector<TriplePattern> out;
  auto walk = [&](auto&& self, const SparqlExpression& node) -> void {
    switch (node.kind()) {
      case SparqlExpression::Kind::Pattern:
        out.push_back(node.triple_pattern());
        break;
      case SparqlExpression::Kind::Filter:
        self(self, node.left());
        break;
      default:
        self(self, node.left());
        self(self, node.right());
        break;
    }
  };
  walk(walk, P);
  return out;
}

Triple apply(const Valuation& mu, const TriplePattern& tp) {
  auto resolve = [&](const PatternTerm& pt) -> Term {
    if (const auto* v = std::get_if<Variable>(&pt)) {
      const Term* t = mu.find(*v);
      if (!t) throw Error(Errc::UnboundVariable, "unbound variable ?" + v->name);
      return *t;
    }
    return std::get<Term>(pt);
  };
  return Triple(resolve(tp.subject()), resolve(tp.predicate()), resolve(tp.object()));
}

bool satisfies(const Valuation& mu, const FilterCondition& condition) {
  switch (condition.kind()) {
    case FilterCondition::Kind::Eq: {
      const Term* t = mu.find(condition.var());
      return t && *t == condition.value();
    }
    case FilterCondition::Kind::EqVar: {
      const Term* a = mu.find(condition.var());
      const Term* b = mu.find(condition.second_var());
      return a && b && *a == *b;
    }
    case FilterCondition::Kind::Bound:
      return mu.contains(condition.var());
    case FilterCondition::Kind::Not:
      return !satisfies(mu, condition.left());
    case FilterCondition::Kind::And:
      return satisfies(mu, condition.left()) && satisfies(mu, condition.right());
    case FilterCondition::Kind::Or:
      return satisfies(mu, condition.left()) || satisfies(mu, condition.right());
  }
  return false;
}

SolutionSet join(const SolutionSet& left, const SolutionSet& right) {
  SolutionSet out;
  for (const Valuation& l : left) {
    for (const Valuation& r : right) {
      if (Valuation::compatible(l, r)) out.insert(Valuation::merged(l, r));
    }
  }
  return out;
}

SolutionSet set_union(const SolutionSet& left, const SolutionSet& right) {
  SolutionSet out = left;
  out.insert(right.begin(), right.end());
  return out;
}

SolutionSet minus(const SolutionSet& left, const SolutionSet& right) {
  SolutionSet out;
  for (const Valuation& l : left) {
    bool clashes_with_all = true;
    for (const Valuation& r : right) {
      if (Valuation::compatible(l, r)) {
        clashes_with_all = false;
        break;
      }
    }
    if (clashes_with_all) out.insert(l);
  }
  return out;
}

SolutionSet left_outer_join(const SolutionSet& left, const SolutionSet& right) {
  return set_union(join(left, right), minus(left, right));
}

SolutionSet select(const FilterCondition& condition, const SolutionSet& input) {
  SolutionSet out;
  for (const Valuation& mu : input) {
    if (satisfies(mu, condition)) out.insert(mu);
  }
  return out;
}

namespace {

// Leaf case: every valuation with dom(mu) = vars(tp) whose substitution into
// tp is a member of G.
SolutionSet eval_pattern(const TriplePattern& tp, const TripleSet& G) {
  SolutionSet out;
  for (const Triple& t : G) {
    Valuation mu;
    bool ok = true;
    auto unify = [&](const PatternTerm& pt, const Term& actual) {
      if (!ok) return;
      if (const auto* v = std::get_if<Variable>(&pt)) {
        if (const Term* bound = mu.find(*v)) {
          ok = *bound == actual;
        } else {
          mu.bind(*v, actual);
        }
      } else {
        ok = std::get<Term>(pt) == actual;
      }
    };
    unify(tp.subject(), t.subject());
    unify(tp.predicate(), t.predicate());
    unify(tp.object(), t.object());
    if (ok) out.insert(std::move(mu));
  }
  return out;
}

}  // namespace

SolutionSet eval(const SparqlExpression& P, const TripleSet& G) {
  switch (P.kind()) {
    case SparqlExpression::Kind::Pattern:
      return eval_pattern(P.triple_pattern(), G);
    case SparqlExpression::Kind::And:
      return join(eval(P.left(), G), eval(P.right(), G));
    case SparqlExpression::Kind::Union:
      return set_union(eval(P.left(), G), eval(P.right(), G));
    case SparqlExpression::Kind::Opt:
      return left_outer_join(eval(P.left(), G), eval(P.right(), G));
    case SparqlExpression::Kind::Filter:
      return select(P.condition(), eval(P.left(), G));
  }
  return {};
}

namespace {

// All valuations whose domain is a subset of `variables` and whose image is
// drawn from `universe`, produced by plain product-space enumeration.
std::vector<Valuation> enumerate_candidates(const std::vector<Variable>& variables,
                                            const std::vector<Term>& universe) {
  std::vector<Valuation> out;
  out.emplace_back();
  for (const Variable& v : variables) {
    std::vector<Valuation> next;
    next.reserve(out.size() * (universe.size() + 1));
    for (const Valuation& base : out) {
      next.push_back(base);  // v stays unbound
      for (const Term& t : universe) {
        Valuation extended = base;
        extended.bind(v, t);
        next.push_back(std::move(extended));
      }
    }
    out = std::move(next);
  }
  return out;
}

// mu is the union of some member of l and some member of r: both must be
// restrictions of mu whose domains jointly cover dom(mu).
bool splits_across(const Valuation& mu, const SolutionSet& l, const SolutionSet& r) {
  for (const Valuation& ml : l) {
    if (!Valuation::restriction_of(ml, mu)) continue;
    for (const Valuation& mr : r) {
      if (!Valuation::restriction_of(mr, mu)) continue;
      std::set<Variable> covered = ml.domain();
      auto rd = mr.domain();
      covered.insert(rd.begin(), rd.end());
      if (covered == mu.domain()) return true;
    }
  }
  return false;
}

bool clashes_with_every(const Valuation& mu, const SolutionSet& others) {
  for (const Valuation& other : others) {
    if (Valuation::compatible(mu, other)) return false;
  }
  return true;
}

SolutionSet brute_force(const SparqlExpression& P, const TripleSet& G,
                        const std::vector<Term>& universe) {
  std::set<Variable> var_set = vars(P);
  std::vector<Variable> variables(var_set.begin(), var_set.end());
  std::vector<Valuation> candidates = enumerate_candidates(variables, universe);

  switch (P.kind()) {
    case SparqlExpression::Kind::Pattern: {
      const TriplePattern& tp = P.triple_pattern();
      SolutionSet out;
      for (const Valuation& mu : candidates) {
        if (mu.domain() != tp.variables()) continue;
        try {
          if (G.contains(apply(mu, tp))) out.insert(mu);
        } catch (const Error&) {
          // Substitution produced an illegal triple; not a member of G.
        }
      }
      return out;
    }
    case SparqlExpression::Kind::And: {
      SolutionSet l = brute_force(P.left(), G, universe);
      SolutionSet r = brute_force(P.right(), G, universe);
      SolutionSet out;
      for (const Valuation& mu : candidates) {
        if (splits_across(mu, l, r)) out.insert(mu);
      }
      return out;
    }
    case SparqlExpression::Kind::Union: {
      SolutionSet l = brute_force(P.left(), G, universe);
      SolutionSet r = brute_force(P.right(), G, universe);
      SolutionSet out;
      for (const Valuation& mu : candidates) {
        if (l.contains(mu) || r.contains(mu)) out.insert(mu);
      }
      return out;
    }
    case SparqlExpression::Kind::Opt: {
      SolutionSet l = brute_force(P.left(), G, universe);
      SolutionSet r = brute_force(P.right(), G, universe);
      SolutionSet out;
      for (const Valuation& mu : candidates) {
        if (splits_across(mu, l, r) || (l.contains(mu) && clashes_with_every(mu, r))) {
          out.insert(mu);
        }
      }
      return out;
    }
    case SparqlExpression::Kind::Filter: {
      SolutionSet inner = brute_force(P.left(), G, universe);
      SolutionSet out;
      for (const Valuation& mu : candidates) {
        if (inner.contains(mu) && satisfies(mu, P.condition())) out.insert(mu);
      }
      return out;
    }
  }
  return {};
}

}  // namespace

SolutionSet brute_force_eval(const SparqlExpression& P, const TripleSet& G) {
  std::set<Term> term_set;
  for (const Triple& t : G) {
    auto ts = terms_of(t);
    term_set.insert(ts.begin(), ts.end());
  }
  std::vector<Term> universe(term_set.begin(), term_set.end());

  double candidates = std::pow(static_cast<double>(universe.size()),
                               static_cast<double>(vars(P).size()));
  if (candidates > 1e6) {
    throw Error(Errc::TooLarge, "candidate valuation space exceeds 10^6");
  }
  return brute_force(P, G, universe);
}

bool is_opt_free(const SparqlExpression& P) {
  switch (P.kind()) {
    case SparqlExpression::Kind::Pattern:
      return true;
    case SparqlExpression::Kind::Opt:
      return false;
    case SparqlExpression::Kind::Filter:
      return is_opt_free(P.left());
    default:
      return is_opt_free(P.left()) && is_opt_free(P.right());
  }
}

}  // namespace ldq
