#include "support/oracles.hpp"

namespace ldq::testing {

std::set<DocumentId> reachable_docs_fixpoint(const FiniteWeb& web, const UriSet& seeds,
                                             const ReachabilityCriterion& criterion,
                                             const SparqlExpression& query) {
  std::vector<TriplePattern> patterns = leaf_patterns(query);
  std::set<DocumentId> reached;
  for (const Term& seed : seeds) {
    if (auto doc = web.dereference(seed)) reached.insert(*doc);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    std::set<DocumentId> snapshot = reached;
    for (const DocumentId& doc : snapshot) {
      for (const Triple& t : web.data(doc)) {
        for (const Term& uri : ids_of(t)) {
          if (!criterion.admits(t, uri, patterns)) continue;
          if (auto target = web.dereference(uri)) {
            if (reached.insert(*target).second) changed = true;
          }
        }
      }
    }
  }
  return reached;
}

Restrictiveness semantic_restrictiveness(const ReachabilityCriterion& first,
                                         const ReachabilityCriterion& second,
                                         const std::vector<Triple>& triples,
                                         const std::vector<Term>& uris,
                                         const SparqlExpression& query) {
  std::vector<TriplePattern> patterns = leaf_patterns(query);
  bool first_covers_second = true;
  bool second_covers_first = true;
  bool differ = false;
  for (const Triple& t : triples) {
    for (const Term& u : uris) {
      bool a = first.admits(t, u, patterns);
      bool b = second.admits(t, u, patterns);
      if (a != b) differ = true;
      if (b && !a) first_covers_second = false;
      if (a && !b) second_covers_first = false;
    }
  }
  if (!differ) return Restrictiveness::Equivalent;
  if (first_covers_second && second_covers_first) return Restrictiveness::Equivalent;
  if (first_covers_second) return Restrictiveness::LessRestrictive;
  if (second_covers_first) return Restrictiveness::MoreRestrictive;
  return Restrictiveness::Incomparable;
}

}  // namespace ldq::testing
