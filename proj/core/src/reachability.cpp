#include "ldq/reachability.hpp"

#include <algorithm>
#include <cctype>
#include <cerrno>
#include <cstring>
#include <fstream>

namespace ldq {

ReachabilityCriterion ReachabilityCriterion::all() {
  return ReachabilityCriterion(Kind::All);
}

ReachabilityCriterion ReachabilityCriterion::none() {
  return ReachabilityCriterion(Kind::None);
}

ReachabilityCriterion ReachabilityCriterion::match() {
  return ReachabilityCriterion(Kind::Match);
}

namespace {

void require_uris(const UriSet& uris) {
  for (const Term& u : uris) {
    if (!u.is_uri()) {
      throw Error(Errc::BadTerm, "criterion URI set holds a non-URI: " + print_term(u));
    }
  }
}

}  // namespace

ReachabilityCriterion ReachabilityCriterion::const_u(UriSet uris) {
  require_uris(uris);
  ReachabilityCriterion c(Kind::ConstU);
  c.uris_ = std::move(uris);
  return c;
}

ReachabilityCriterion ReachabilityCriterion::const_t(TripleSet triples) {
  ReachabilityCriterion c(Kind::ConstT);
  c.triples_ = std::move(triples);
  return c;
}

ReachabilityCriterion ReachabilityCriterion::const_and(UriSet uris, TripleSet triples) {
  require_uris(uris);
  ReachabilityCriterion c(Kind::ConstAnd);
  c.uris_ = std::move(uris);
  c.triples_ = std::move(triples);
  return c;
}

ReachabilityCriterion ReachabilityCriterion::const_or(UriSet uris, TripleSet triples) {
  require_uris(uris);
  ReachabilityCriterion c(Kind::ConstOr);
  c.uris_ = std::move(uris);
  c.triples_ = std::move(triples);
  return c;
}

bool ReachabilityCriterion::is_constant() const {
  switch (kind_) {
    case Kind::None:
    case Kind::ConstU:
    case Kind::ConstT:
    case Kind::ConstAnd:
    case Kind::ConstOr:
      return true;
    default:
      return false;
  }
}

bool ReachabilityCriterion::admits(const Triple& t, const Term& uri,
                                   const std::vector<TriplePattern>& query_patterns) const {
  switch (kind_) {
    case Kind::All:
      return true;
    case Kind::None:
      return false;
    case Kind::Match:
      return std::any_of(query_patterns.begin(), query_patterns.end(),
                         [&](const TriplePattern& tp) { return matches(t, tp); });
    case Kind::ConstU:
      return uris_.contains(uri);
    case Kind::ConstT:
      return triples_.contains(t);
    case Kind::ConstAnd:
      return uris_.contains(uri) && triples_.contains(t);
    case Kind::ConstOr:
      return uris_.contains(uri) || triples_.contains(t);
  }
  return false;
}

bool criterion_eval(const ReachabilityCriterion& c, const Triple& t, const Term& uri,
                    const SparqlExpression& P) {
  return c.admits(t, uri, leaf_patterns(P));
}

namespace {

// Canonical form of the link set accepted by a constant criterion: either
// the product T x U (a conjunctive criterion with both sets nonempty), or
// (AllTriples x U) union (T x AllUris) for the remaining kinds.
struct LinkSet {
  bool product;
  UriSet uris;
  TripleSet triples;
};

LinkSet canonical_links(const ReachabilityCriterion& c) {
  switch (c.kind()) {
    case ReachabilityCriterion::Kind::None:
      return {false, {}, {}};
    case ReachabilityCriterion::Kind::ConstU:
      return {false, c.uris(), {}};
    case ReachabilityCriterion::Kind::ConstT:
      return {false, {}, c.triples()};
    case ReachabilityCriterion::Kind::ConstOr:
      return {false, c.uris(), c.triples()};
    case ReachabilityCriterion::Kind::ConstAnd:
      if (c.uris().empty() || c.triples().empty()) return {false, {}, {}};
      return {true, c.uris(), c.triples()};
    default:
      throw Error(Errc::Unsupported,
                  "restrictiveness comparison is defined for constant criteria only");
  }
}

bool subset_of(const UriSet& a, const UriSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool subset_of(const TripleSet& a, const TripleSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// accepted(inner) subset of accepted(outer), over the full (triple, URI)
// domain. Finiteness of the criterion sets makes the case split exact: a
// nonempty union form spans infinitely many links in one coordinate, so it
// never fits inside a finite product.
bool links_contained(const LinkSet& outer, const LinkSet& inner) {
  bool inner_empty = !inner.product && inner.uris.empty() && inner.triples.empty();
  if (inner_empty) return true;
  if (!inner.product && !outer.product) {
    return subset_of(inner.uris, outer.uris) && subset_of(inner.triples, outer.triples);
  }
  if (!inner.product && outer.product) return false;
  if (inner.product && outer.product) {
    return subset_of(inner.uris, outer.uris) && subset_of(inner.triples, outer.triples);
  }
  // inner product, outer union
  return subset_of(inner.uris, outer.uris) || subset_of(inner.triples, outer.triples);
}

}  // namespace

Restrictiveness less_restrictive_constant(const ReachabilityCriterion& first,
                                          const ReachabilityCriterion& second) {
  LinkSet a = canonical_links(first);
  LinkSet b = canonical_links(second);
  bool first_covers_second = links_contained(a, b);
  bool second_covers_first = links_contained(b, a);
  if (first_covers_second && second_covers_first) return Restrictiveness::Equivalent;
  if (first_covers_second) return Restrictiveness::LessRestrictive;
  if (second_covers_first) return Restrictiveness::MoreRestrictive;
  return Restrictiveness::Incomparable;
}

namespace {

std::vector<std::string> criterion_file_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(Errc::BadFile, "cannot open '" + path + "': " + std::strerror(errno));
  }
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    std::size_t begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos || line[begin] == '#') continue;
    std::size_t end = line.find_last_not_of(" \t\r");
    lines.push_back(line.substr(begin, end - begin + 1));
  }
  return lines;
}

// Splits a line into term tokens, honoring <...> and "..." token extents.
std::vector<std::string> term_tokens(const std::string& line) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (line[i] == '<') {
      while (i < line.size() && line[i] != '>') ++i;
      if (i < line.size()) ++i;
    } else if (line[i] == '"') {
      ++i;
      while (i < line.size() && line[i] != '"') {
        i += line[i] == '\\' ? 2 : 1;
      }
      if (i < line.size()) ++i;
    } else {
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    }
    tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

}  // namespace

UriSet load_uri_set(const std::string& path) {
  UriSet out;
  for (const std::string& line : criterion_file_lines(path)) {
    Term t = parse_term(line);
    if (!t.is_uri()) {
      throw Error(Errc::BadTerm, "expected one URI per line, got: " + line);
    }
    out.insert(std::move(t));
  }
  return out;
}

TripleSet load_triple_set(const std::string& path) {
  TripleSet out;
  for (const std::string& line : criterion_file_lines(path)) {
    std::vector<std::string> tokens = term_tokens(line);
    if (tokens.size() != 3) {
      throw Error(Errc::BadTerm, "expected one triple (three terms) per line, got: " + line);
    }
    out.insert(Triple(parse_term(tokens[0]), parse_term(tokens[1]), parse_term(tokens[2])));
  }
  return out;
}

Budget Budget::limited(std::uint64_t n) {
  if (n == 0) throw Error(Errc::BadFile, "budget must be positive");
  return Budget{n};
}

LinkTraversal::LinkTraversal(const WebOfLinkedData& web, const UriSet& seeds,
                             const ReachabilityCriterion& criterion,
                             const SparqlExpression& query)
    : web_(web), criterion_(criterion), query_patterns_(leaf_patterns(query)) {
  // Seed lookups: unconditional, deduplicated, unbudgeted. Seeds count as
  // already looked up when they reappear as link targets.
  for (const Term& seed : seeds) {
    if (!seed.is_uri()) {
      throw Error(Errc::BadTerm, "seed is not a URI: " + print_term(seed));
    }
    if (scheduled_.insert(seed).second) retrieve(seed);
  }
}

bool LinkTraversal::step() {
  Term uri = frontier_.front();
  frontier_.pop_front();
  ++lookups_spent_;
  std::size_t docs_before = documents_.size();
  retrieve(uri);
  return documents_.size() > docs_before;
}

void LinkTraversal::retrieve(const Term& uri) {
  std::optional<DocumentId> doc = web_.dereference(uri);
  if (!doc) return;  // broken link
  if (!seen_.insert(*doc).second) return;
  documents_.emplace_back(uri, *doc);
  TripleSet data = web_.data(*doc);
  for (const Triple& t : data) {
    triples_.insert(t);
    discover_links(t);
  }
}

void LinkTraversal::discover_links(const Triple& t) {
  for (const Term* term : {&t.subject(), &t.predicate(), &t.object()}) {
    if (!term->is_uri() || scheduled_.contains(*term)) continue;
    if (criterion_.admits(t, *term, query_patterns_)) {
      scheduled_.insert(*term);
      frontier_.push_back(*term);
    }
  }
}

ReachablePart compute_reachable_part(const WebOfLinkedData& web, const UriSet& seeds,
                                     const ReachabilityCriterion& criterion,
                                     const SparqlExpression& P, Budget budget) {
  LinkTraversal traversal(web, seeds, criterion, P);
  while (traversal.pending() && !budget.exhausted(traversal.lookups_spent())) {
    traversal.step();
  }
  ReachablePart part;
  part.documents = traversal.documents();
  part.triples = traversal.triples();
  part.complete = !traversal.pending();
  part.lookups_spent = traversal.lookups_spent();
  return part;
}

}  // namespace ldq
