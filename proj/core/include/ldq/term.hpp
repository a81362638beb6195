#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <variant>

#include "ldq/error.hpp"

namespace ldq {

// An RDF term: a URI, a document-scoped blank node, or an opaque literal.
// Terms are immutable values. Blank node identity is the pair
// (document id, local label), so blank nodes from distinct documents never
// compare equal.
class Term {
 public:
  enum class Kind { Uri, Blank, Literal };

  static Term uri(std::string text);
  static Term blank(std::string document, std::string label);
  static Term literal(std::string text);

  Kind kind() const { return kind_; }
  bool is_uri() const { return kind_ == Kind::Uri; }
  bool is_blank() const { return kind_ == Kind::Blank; }
  bool is_literal() const { return kind_ == Kind::Literal; }

  // URI text, literal text, or blank local label.
  const std::string& text() const { return text_; }
  // Document scope of a blank node; empty for other kinds.
  const std::string& blank_document() const { return document_; }

  friend bool operator==(const Term&, const Term&) = default;
  // Total order: URIs < blank nodes < literals; within a kind,
  // byte-lexicographic (blank nodes on (document, label)).
  friend std::strong_ordering operator<=>(const Term& a, const Term& b) {
    if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
    if (a.kind_ == Kind::Blank) {
      if (auto c = a.document_ <=> b.document_; c != 0) return c;
    }
    return a.text_ <=> b.text_;
  }

 private:
  Term(Kind kind, std::string text, std::string document)
      : kind_(kind), text_(std::move(text)), document_(std::move(document)) {}

  Kind kind_;
  std::string text_;
  std::string document_;
};

struct Variable {
  std::string name;  // without the leading '?'

  friend bool operator==(const Variable&, const Variable&) = default;
  friend auto operator<=>(const Variable&, const Variable&) = default;
};

Variable make_variable(std::string name);

// (s, p, o) with the RDF position constraints: the subject is a URI or blank
// node, the predicate a URI, the object any term. Construction validates.
class Triple {
 public:
  Triple(Term s, Term p, Term o);

  const Term& subject() const { return s_; }
  const Term& predicate() const { return p_; }
  const Term& object() const { return o_; }

  friend bool operator==(const Triple&, const Triple&) = default;
  friend std::strong_ordering operator<=>(const Triple& a, const Triple& b) {
    if (auto c = a.s_ <=> b.s_; c != 0) return c;
    if (auto c = a.p_ <=> b.p_; c != 0) return c;
    return a.o_ <=> b.o_;
  }

 private:
  Term s_, p_, o_;
};

using TripleSet = std::set<Triple>;
using UriSet = std::set<Term>;

// A triple-pattern position: a concrete term or a variable. Blank nodes are
// rejected by the TriplePattern constructor.
using PatternTerm = std::variant<Term, Variable>;

inline bool is_variable(const PatternTerm& pt) {
  return std::holds_alternative<Variable>(pt);
}

class TriplePattern {
 public:
  TriplePattern(PatternTerm s, PatternTerm p, PatternTerm o);

  const PatternTerm& subject() const { return s_; }
  const PatternTerm& predicate() const { return p_; }
  const PatternTerm& object() const { return o_; }

  std::set<Variable> variables() const;

  friend bool operator==(const TriplePattern&, const TriplePattern&) = default;

 private:
  PatternTerm s_, p_, o_;
};

std::set<Term> terms_of(const Triple& t);
UriSet ids_of(const Triple& t);

// True iff every non-variable pattern position equals the triple's
// corresponding position.
bool matches(const Triple& t, const TriplePattern& tp);

std::strong_ordering term_compare(const Term& a, const Term& b);
std::strong_ordering triple_compare(const Triple& a, const Triple& b);

// Textual term syntax: <uri>, _:label (or _:document/label), "literal",
// ?name. print_term/parse_term round-trip; blank nodes print doc-qualified.
std::string print_term(const Term& t);
std::string print_pattern_term(const PatternTerm& pt);

// Parses one term from `text` (the whole string must be consumed).
// `blank_scope`: document id used to scope unqualified `_:label` tokens;
// when absent, blank nodes are rejected.
Term parse_term(const std::string& text,
                const std::optional<std::string>& blank_scope = std::nullopt);

}  // namespace ldq

template <>
struct std::hash<ldq::Term> {
  std::size_t operator()(const ldq::Term& t) const {
    std::size_t h = std::hash<int>()(static_cast<int>(t.kind()));
    h ^= std::hash<std::string>()(t.text()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    if (t.is_blank()) {
      h ^= std::hash<std::string>()(t.blank_document()) + 0x9e3779b97f4a7c15ULL + (h << 6) +
           (h >> 2);
    }
    return h;
  }
};
