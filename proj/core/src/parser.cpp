#include "ldq/parser.hpp"

#include <cctype>

namespace ldq {

namespace {

class Cursor {
 public:
  explicit Cursor(const std::string& input) : input_(input) {}

  void skip_trivia() {
    while (pos_ < input_.size()) {
      char c = input_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else if (c == '#') {
        while (pos_ < input_.size() && input_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  bool at_end() {
    skip_trivia();
    return pos_ >= input_.size();
  }

  char peek() {
    skip_trivia();
    return pos_ < input_.size() ? input_[pos_] : '\0';
  }

  std::size_t position() const { return pos_; }

  [[noreturn]] void fail(const std::string& expected) {
    skip_trivia();
    std::string found;
    if (pos_ >= input_.size()) {
      found = "end of input";
    } else {
      std::size_t end = pos_;
      while (end < input_.size() && end - pos_ < 12 &&
             !std::isspace(static_cast<unsigned char>(input_[end]))) {
        ++end;
      }
      found = "'" + input_.substr(pos_, end - pos_) + "'";
    }
    throw ParseError(pos_, expected, found);
  }

  void expect(char c, const std::string& what) {
    if (peek() != c) fail(what);
    ++pos_;
  }

  // Consumes `word` only if it appears verbatim at the cursor and is not a
  // prefix of a longer identifier.
  bool try_keyword(const std::string& word) {
    skip_trivia();
    if (input_.compare(pos_, word.size(), word) != 0) return false;
    if (std::isalpha(static_cast<unsigned char>(word[0]))) {
      std::size_t after = pos_ + word.size();
      if (after < input_.size() && (std::isalnum(static_cast<unsigned char>(input_[after])) ||
                                    input_[after] == '_')) {
        return false;
      }
    }
    pos_ += word.size();
    return true;
  }

  Term lex_uri() {
    expect('<', "'<'");
    std::size_t start = pos_;
    while (pos_ < input_.size() && input_[pos_] != '>') {
      if (std::isspace(static_cast<unsigned char>(input_[pos_])) || input_[pos_] == '<') {
        throw ParseError(pos_, "'>'", std::string("'") + input_[pos_] + "'");
      }
      ++pos_;
    }
    if (pos_ >= input_.size()) throw ParseError(pos_, "'>'", "end of input");
    if (pos_ == start) throw ParseError(pos_, "nonempty URI", "'>'");
    std::string body = input_.substr(start, pos_ - start);
    ++pos_;
    return Term::uri(std::move(body));
  }

  Term lex_literal() {
    expect('"', "'\"'");
    std::string body;
    while (pos_ < input_.size() && input_[pos_] != '"') {
      char c = input_[pos_];
      if (c == '\\') {
        if (pos_ + 1 >= input_.size()) throw ParseError(pos_, "escape character", "end of input");
        char esc = input_[pos_ + 1];
        if (esc != '"' && esc != '\\') {
          throw ParseError(pos_ + 1, "'\"' or '\\'", std::string("'") + esc + "'");
        }
        body.push_back(esc);
        pos_ += 2;
      } else {
        body.push_back(c);
        ++pos_;
      }
    }
    if (pos_ >= input_.size()) throw ParseError(pos_, "closing '\"'", "end of input");
    ++pos_;
    return Term::literal(std::move(body));
  }

  Variable lex_variable() {
    expect('?', "'?'");
    std::size_t start = pos_;
    while (pos_ < input_.size() && is_name_char(input_[pos_])) ++pos_;
    if (pos_ == start) throw ParseError(pos_, "variable name", "empty name");
    return Variable{input_.substr(start, pos_ - start)};
  }

 private:
  static bool is_name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  const std::string& input_;
  std::size_t pos_ = 0;
};

class Parser {
 public:
  explicit Parser(const std::string& input) : cur_(input) {}

  ExprPtr parse() {
    ExprPtr e = expression();
    if (!cur_.at_end()) cur_.fail("end of input");
    return e;
  }

 private:
  ExprPtr expression() {
    if (cur_.peek() != '(') cur_.fail("'('");
    cur_.expect('(', "'('");
    char next = cur_.peek();
    if (next == '(') {
      ExprPtr left = expression();
      return compound_tail(std::move(left));
    }
    if (next == '_') cur_.fail("URI or variable (blank nodes are not allowed in patterns)");
    if (next == '<' || next == '?' || next == '"') return pattern_tail();
    cur_.fail("triple pattern or subexpression");
  }

  // The cursor sits after "(" <expr>; expects an operator keyword and the
  // closing parenthesis.
  ExprPtr compound_tail(ExprPtr left) {
    if (cur_.try_keyword("AND")) {
      ExprPtr right = expression();
      cur_.expect(')', "')'");
      return SparqlExpression::conjunction(std::move(left), std::move(right));
    }
    if (cur_.try_keyword("UNION")) {
      ExprPtr right = expression();
      cur_.expect(')', "')'");
      return SparqlExpression::set_union(std::move(left), std::move(right));
    }
    if (cur_.try_keyword("OPT")) {
      ExprPtr right = expression();
      cur_.expect(')', "')'");
      return SparqlExpression::optional(std::move(left), std::move(right));
    }
    if (cur_.try_keyword("FILTER")) {
      FilterPtr condition = filter_condition();
      cur_.expect(')', "')'");
      return SparqlExpression::filter(std::move(left), std::move(condition));
    }
    cur_.fail("AND, UNION, OPT, or FILTER");
  }

  // The cursor sits after "(" inside a triple pattern.
  ExprPtr pattern_tail() {
    PatternTerm s = position_term(/*literal_ok=*/false);
    PatternTerm p = position_term(/*literal_ok=*/false);
    PatternTerm o = position_term(/*literal_ok=*/true);
    cur_.expect(')', "')'");
    return SparqlExpression::pattern(TriplePattern(std::move(s), std::move(p), std::move(o)));
  }

  PatternTerm position_term(bool literal_ok) {
    char next = cur_.peek();
    if (next == '?') return cur_.lex_variable();
    if (next == '<') return cur_.lex_uri();
    if (next == '"' && literal_ok) return cur_.lex_literal();
    if (next == '_') cur_.fail("URI or variable (blank nodes are not allowed in patterns)");
    cur_.fail(literal_ok ? "URI, literal, or variable" : "URI or variable");
  }

  FilterPtr filter_condition() {
    char next = cur_.peek();
    if (next == '!') {
      cur_.expect('!', "'!'");
      return FilterCondition::negation(filter_condition());
    }
    if (next == '(') {
      cur_.expect('(', "'('");
      FilterPtr left = filter_condition();
      FilterPtr out;
      if (cur_.try_keyword("&&")) {
        out = FilterCondition::conjunction(std::move(left), filter_condition());
      } else if (cur_.try_keyword("||")) {
        out = FilterCondition::disjunction(std::move(left), filter_condition());
      } else {
        cur_.fail("'&&' or '||'");
      }
      cur_.expect(')', "')'");
      return out;
    }
    if (next == 'B') {
      if (!cur_.try_keyword("BOUND")) cur_.fail("BOUND");
      cur_.expect('(', "'('");
      Variable v = cur_.lex_variable();
      cur_.expect(')', "')'");
      return FilterCondition::bound(std::move(v));
    }
    if (next == '?') {
      Variable v = cur_.lex_variable();
      cur_.expect('=', "'='");
      char rhs = cur_.peek();
      if (rhs == '?') return FilterCondition::eq_var(std::move(v), cur_.lex_variable());
      if (rhs == '<') return FilterCondition::eq(std::move(v), cur_.lex_uri());
      if (rhs == '"') return FilterCondition::eq(std::move(v), cur_.lex_literal());
      cur_.fail("URI, literal, or variable");
    }
    cur_.fail("filter condition");
  }

  Cursor cur_;
};

}  // namespace

ExprPtr parse_expression(const std::string& input) { return Parser(input).parse(); }

std::string print_filter(const FilterCondition& condition) {
  switch (condition.kind()) {
    case FilterCondition::Kind::Eq:
      return "?" + condition.var().name + " = " + print_term(condition.value());
    case FilterCondition::Kind::EqVar:
      return "?" + condition.var().name + " = ?" + condition.second_var().name;
    case FilterCondition::Kind::Bound:
      return "BOUND(?" + condition.var().name + ")";
    case FilterCondition::Kind::Not:
      return "!" + print_filter(condition.left());
    case FilterCondition::Kind::And:
      return "(" + print_filter(condition.left()) + " && " + print_filter(condition.right()) +
             ")";
    case FilterCondition::Kind::Or:
      return "(" + print_filter(condition.left()) + " || " + print_filter(condition.right()) +
             ")";
  }
  return {};
}

std::string print_expression(const SparqlExpression& P) {
  switch (P.kind()) {
    case SparqlExpression::Kind::Pattern: {
      const TriplePattern& tp = P.triple_pattern();
      return "(" + print_pattern_term(tp.subject()) + " " + print_pattern_term(tp.predicate()) +
             " " + print_pattern_term(tp.object()) + ")";
    }
    case SparqlExpression::Kind::And:
      return "(" + print_expression(P.left()) + " AND " + print_expression(P.right()) + ")";
    case SparqlExpression::Kind::Union:
      return "(" + print_expression(P.left()) + " UNION " + print_expression(P.right()) + ")";
    case SparqlExpression::Kind::Opt:
      return "(" + print_expression(P.left()) + " OPT " + print_expression(P.right()) + ")";
    case SparqlExpression::Kind::Filter:
      return "(" + print_expression(P.left()) + " FILTER " + print_filter(P.condition()) + ")";
  }
  return {};
}

}  // namespace ldq
