#pragma once

#include <string>

#include "ldq/algebra.hpp"
#include "ldq/error.hpp"

namespace ldq {

// Parses one expression, which must span the whole input. Binary operators
// are fully parenthesized; keywords are uppercase; whitespace is free-form
// and `#` starts a line comment. Blank nodes are rejected. Throws ParseError.
//
//   expr    := pattern | "(" expr "AND" expr ")" | "(" expr "UNION" expr ")"
//            | "(" expr "OPT" expr ")" | "(" expr "FILTER" cond ")"
//   pattern := "(" spos ppos opos ")"
//   spos    := uri | var      ppos := uri | var      opos := uri | literal | var
//   cond    := var "=" (uri | literal) | var "=" var | "BOUND(" var ")"
//            | "!" cond | "(" cond "&&" cond ")" | "(" cond "||" cond ")"
ExprPtr parse_expression(const std::string& input);

// Canonical text form; parse_expression(print_expression(P)) reproduces P.
std::string print_expression(const SparqlExpression& P);
std::string print_filter(const FilterCondition& condition);

}  // namespace ldq
