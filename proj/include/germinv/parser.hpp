// Recursive-descent parser for polynomial expressions.
//
// Grammar ('^' binds tightest, then unary minus, then '*', then '+'/'-'):
//   expr    := term (('+' | '-') term)*
//   term    := factor ('*' factor)*
//   factor  := '-' factor | base
//   base    := primary ('^' natural)?
//   primary := IDENT | NUMBER | '(' expr ')'
// Literals: integers and p/q rationals (no whitespace inside). Identifiers:
// [a-zA-Z][a-zA-Z0-9_]*. There is no implicit multiplication and no division
// operator; '/' only occurs inside a rational literal.
#pragma once

#include <map>
#include <set>
#include <string>

#include "germinv/polynomial.hpp"

namespace germinv {

// Parses over the ring's variables only.
Polynomial parse_polynomial(const std::string& text, const RingPtr& ring);

// Parses over the ring's variables plus named rational symbols (parameters),
// which are substituted by value. Identifiers in `deferred` are declared
// parameters without a value yet; referencing one raises MathError (a
// math-precondition failure, not a syntax error). `origin_line`/`origin_col`
// offset reported positions so errors inside documents point into the file.
Polynomial parse_expression(const std::string& text, const RingPtr& ring,
                            const std::map<std::string, Rational>& symbols,
                            const std::set<std::string>& deferred = {},
                            int origin_line = 1, int origin_col = 1);

}  // namespace germinv
