#include "ldq/term.hpp"

#include <cctype>

namespace ldq {

namespace {

bool is_label_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

}  // namespace

Term Term::uri(std::string text) {
  if (text.empty()) throw Error(Errc::BadTerm, "URI text must be nonempty");
  return Term(Kind::Uri, std::move(text), {});
}

Term Term::blank(std::string document, std::string label) {
  if (document.empty() || label.empty()) {
    throw Error(Errc::BadTerm, "blank node needs a document id and a label");
  }
  return Term(Kind::Blank, std::move(label), std::move(document));
}

Term Term::literal(std::string text) {
  return Term(Kind::Literal, std::move(text), {});
}

Variable make_variable(std::string name) {
  if (name.empty()) throw Error(Errc::BadTerm, "variable name must be nonempty");
  return Variable{std::move(name)};
}

Triple::Triple(Term s, Term p, Term o)
    : s_(std::move(s)), p_(std::move(p)), o_(std::move(o)) {
  if (s_.is_literal()) {
    throw Error(Errc::IllegalPosition, "literal in subject position: " + print_term(s_));
  }
  if (!p_.is_uri()) {
    throw Error(Errc::IllegalPosition, "predicate must be a URI: " + print_term(p_));
  }
}

TriplePattern::TriplePattern(PatternTerm s, PatternTerm p, PatternTerm o)
    : s_(std::move(s)), p_(std::move(p)), o_(std::move(o)) {
  auto reject_blank = [](const PatternTerm& pt) {
    if (const auto* t = std::get_if<Term>(&pt); t && t->is_blank()) {
      throw Error(Errc::BadTerm, "blank nodes are not allowed in triple patterns");
    }
  };
  reject_blank(s_);
  reject_blank(p_);
  reject_blank(o_);
  if (const auto* t = std::get_if<Term>(&s_); t && t->is_literal()) {
    throw Error(Errc::IllegalPosition, "literal in pattern subject position");
  }
  if (const auto* t = std::get_if<Term>(&p_); t && !t->is_uri()) {
    throw Error(Errc::IllegalPosition, "pattern predicate must be a URI or variable");
  }
}

std::set<Variable> TriplePattern::variables() const {
  std::set<Variable> vs;
  for (const PatternTerm* pt : {&s_, &p_, &o_}) {
    if (const auto* v = std::get_if<Variable>(pt)) vs.insert(*v);
  }
  return vs;
}

std::set<Term> terms_of(const Triple& t) {
  return {t.subject(), t.predicate(), t.object()};
}

UriSet ids_of(const Triple& t) {
  UriSet uris;
  for (const Term* term : {&t.subject(), &t.predicate(), &t.object()}) {
    if (term->is_uri()) uris.insert(*term);
  }
  return uris;
}

bool matches(const Triple& t, const TriplePattern& tp) {
  auto position_ok = [](const Term& actual, const PatternTerm& pattern) {
    if (is_variable(pattern)) return true;
    return std::get<Term>(pattern) == actual;
  };
  return position_ok(t.subject(), tp.subject()) &&
         position_ok(t.predicate(), tp.predicate()) &&
         position_ok(t.object(), tp.object());
}

std::strong_ordering term_compare(const Term& a, const Term& b) { return a <=> b; }

std::strong_ordering triple_compare(const Triple& a, const Triple& b) { return a <=> b; }

std::string print_term(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Uri:
      return "<" + t.text() + ">";
    case Term::Kind::Blank:
      return "_:" + t.blank_document() + "/" + t.text();
    case Term::Kind::Literal: {
      std::string out = "\"";
      for (char c : t.text()) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
      }
      out.push_back('"');
      return out;
    }
  }
  return {};
}

std::string print_pattern_term(const PatternTerm& pt) {
  if (const auto* v = std::get_if<Variable>(&pt)) return "?" + v->name;
  return print_term(std::get<Term>(pt));
}

Term parse_term(const std::string& text, const std::optional<std::string>& blank_scope) {
  if (text.empty()) throw Error(Errc::BadTerm, "empty term");
  if (text.front() == '<') {
    if (text.back() != '>' || text.size() < 3) {
      throw Error(Errc::BadTerm, "malformed URI: " + text);
    }
    std::string body = text.substr(1, text.size() - 2);
    for (char c : body) {
      if (c == '<' || c == '>' || std::isspace(static_cast<unsigned char>(c))) {
        throw Error(Errc::BadTerm, "malformed URI: " + text);
      }
    }
    return Term::uri(std::move(body));
  }
  if (text.front() == '"') {
    if (text.size() < 2 || text.back() != '"') {
      throw Error(Errc::BadTerm, "unterminated literal: " + text);
    }
    std::string body;
    for (std::size_t i = 1; i + 1 < text.size(); ++i) {
      char c = text[i];
      if (c == '\\') {
        if (i + 2 >= text.size()) {
          throw Error(Errc::BadTerm, "dangling escape in literal: " + text);
        }
        c = text[++i];
        if (c != '"' && c != '\\') {
          throw Error(Errc::BadTerm, "unknown escape in literal: " + text);
        }
      } else if (c == '"') {
        throw Error(Errc::BadTerm, "unescaped quote inside literal: " + text);
      }
      body.push_back(c);
    }
    return Term::literal(std::move(body));
  }
  if (text.size() >= 2 && text[0] == '_' && text[1] == ':') {
    std::string body = text.substr(2);
    if (body.empty()) throw Error(Errc::BadTerm, "empty blank node label");
    auto slash = body.rfind('/');
    if (slash != std::string::npos) {
      // Explicitly document-qualified label, as produced by print_term.
      std::string doc = body.substr(0, slash);
      std::string label = body.substr(slash + 1);
      if (doc.empty() || label.empty()) {
        throw Error(Errc::BadTerm, "malformed blank node label: " + text);
      }
      for (char c : label) {
        if (!is_label_char(c)) {
          throw Error(Errc::BadTerm, "malformed blank node label: " + text);
        }
      }
      if (blank_scope && doc != *blank_scope) {
        throw Error(Errc::BlankNodeSharing,
                    "blank node " + text + " belongs to document " + doc);
      }
      if (!blank_scope) {
        throw Error(Errc::BadTerm, "blank nodes are not allowed here: " + text);
      }
      return Term::blank(std::move(doc), std::move(label));
    }
    for (char c : body) {
      if (!is_label_char(c)) {
        throw Error(Errc::BadTerm, "malformed blank node label: " + text);
      }
    }
    if (!blank_scope) {
      throw Error(Errc::BadTerm, "blank nodes are not allowed here: " + text);
    }
    return Term::blank(*blank_scope, std::move(body));
  }
  throw Error(Errc::BadTerm, "unrecognized term: " + text);
}

}  // namespace ldq
