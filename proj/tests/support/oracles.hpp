#pragma once

#include <set>

#include "ldq/algebra.hpp"
#include "ldq/reachability.hpp"
#include "ldq/web.hpp"

namespace ldq::testing {

// Reachable documents computed by naive fixpoint iteration over all
// documents of a finite web, independent of the frontier-queue traversal.
std::set<DocumentId> reachable_docs_fixpoint(const FiniteWeb& web, const UriSet& seeds,
                                             const ReachabilityCriterion& criterion,
                                             const SparqlExpression& query);

// Semantic restrictiveness comparison by exhaustive evaluation over a finite
// (triple, URI) universe.
Restrictiveness semantic_restrictiveness(const ReachabilityCriterion& first,
                                         const ReachabilityCriterion& second,
                                         const std::vector<Triple>& triples,
                                         const std::vector<Term>& uris,
                                         const SparqlExpression& query);

}  // namespace ldq::testing
