#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <unordered_set>
#include <vector>

#include "ldq/algebra.hpp"
#include "ldq/term.hpp"
#include "ldq/web.hpp"

namespace ldq {

// A pure predicate deciding whether a data link (triple t, URI u) may be
// traversed while answering query P.
class ReachabilityCriterion {
 public:
  enum class Kind { All, None, Match, ConstU, ConstT, ConstAnd, ConstOr };

  static ReachabilityCriterion all();
  static ReachabilityCriterion none();
  static ReachabilityCriterion match();
  static ReachabilityCriterion const_u(UriSet uris);
  static ReachabilityCriterion const_t(TripleSet triples);
  static ReachabilityCriterion const_and(UriSet uris, TripleSet triples);
  static ReachabilityCriterion const_or(UriSet uris, TripleSet triples);

  Kind kind() const { return kind_; }
  const UriSet& uris() const { return uris_; }
  const TripleSet& triples() const { return triples_; }
  // Constant criteria accept a fixed set of links, independent of the query.
  bool is_constant() const;

  bool admits(const Triple& t, const Term& uri,
              const std::vector<TriplePattern>& query_patterns) const;

 private:
  explicit ReachabilityCriterion(Kind kind) : kind_(kind) {}

  Kind kind_;
  UriSet uris_;
  TripleSet triples_;
};

bool criterion_eval(const ReachabilityCriterion& c, const Triple& t, const Term& uri,
                    const SparqlExpression& P);

enum class Restrictiveness {
  LessRestrictive,  // first admits strictly more links than second
  MoreRestrictive,  // second admits strictly more links than first
  Equivalent,
  Incomparable,
};

// Syntactic restrictiveness comparison for constant criteria (None and the
// four Const kinds). Throws Unsupported for All/Match arguments.
Restrictiveness less_restrictive_constant(const ReachabilityCriterion& first,
                                          const ReachabilityCriterion& second);

// One <uri> per line; '#' starts a comment line.
UriSet load_uri_set(const std::string& path);
// One triple per line as three whitespace-separated terms.
TripleSet load_triple_set(const std::string& path);

// Lookup limit for traversals over possibly infinite webs. Seed lookups are
// performed up front and are not charged against the budget; every frontier
// lookup, including one that hits a broken link, costs one unit.
struct Budget {
  std::optional<std::uint64_t> max_lookups;  // nullopt: unlimited

  static Budget unlimited() { return Budget{std::nullopt}; }
  static Budget limited(std::uint64_t n);

  bool is_unlimited() const { return !max_lookups.has_value(); }
  bool exhausted(std::uint64_t spent) const { return max_lookups && spent >= *max_lookups; }
};

struct ReachablePart {
  // Documents in discovery order, each with the URI that dereferenced it
  // first; duplicate-free by document id.
  std::vector<std::pair<Term, DocumentId>> documents;
  // Union of the data of all listed documents.
  TripleSet triples;
  // True iff no admissible link remained unexpanded.
  bool complete = false;
  std::uint64_t lookups_spent = 0;
};

// Incremental link-traversal state: seeds are dereferenced on construction,
// then step() expands one frontier URI at a time. Expansion order is
// deterministic: FIFO over discovery order; within one document, triples in
// canonical order; within one triple, subject then predicate then object.
class LinkTraversal {
 public:
  LinkTraversal(const WebOfLinkedData& web, const UriSet& seeds,
                const ReachabilityCriterion& criterion, const SparqlExpression& query);

  // An admissible lookup remains.
  bool pending() const { return !frontier_.empty(); }
  // Dereferences the next frontier URI; returns true if a new document was
  // retrieved. Must not be called when pending() is false.
  bool step();

  const TripleSet& triples() const { return triples_; }
  const std::vector<std::pair<Term, DocumentId>>& documents() const { return documents_; }
  std::uint64_t lookups_spent() const { return lookups_spent_; }

 private:
  void retrieve(const Term& uri);
  void discover_links(const Triple& t);

  const WebOfLinkedData& web_;
  ReachabilityCriterion criterion_;
  std::vector<TriplePattern> query_patterns_;
  std::deque<Term> frontier_;
  std::unordered_set<Term> scheduled_;
  std::set<DocumentId> seen_;
  std::vector<std::pair<Term, DocumentId>> documents_;
  TripleSet triples_;
  std::uint64_t lookups_spent_ = 0;
};

// Expands the part of `web` reachable from `seeds` under `criterion` for
// query P, up to the budget. Budget exhaustion is reported via
// ReachablePart::complete, never as an error.
ReachablePart compute_reachable_part(const WebOfLinkedData& web, const UriSet& seeds,
                                     const ReachabilityCriterion& criterion,
                                     const SparqlExpression& P, Budget budget);

}  // namespace ldq
