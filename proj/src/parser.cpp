#include "germinv/parser.hpp"

#include <cctype>

namespace germinv {

namespace {

enum class Tok { Ident, Number, Plus, Minus, Star, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int col;
};

class Lexer {
 public:
  Lexer(const std::string& src, int line0, int col0)
      : src_(src), line_(line0), col_(col0) {}

  Token next() {
    skip_ws();
    int l = line_, c = col_;
    if (pos_ >= src_.size()) return {Tok::End, "", l, c};
    char ch = src_[pos_];
    if (std::isalpha(static_cast<unsigned char>(ch))) {
      std::size_t start = pos_;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
        advance();
      return {Tok::Ident, src_.substr(start, pos_ - start), l, c};
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t start = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
        advance();
      // p/q rational literal: '/' immediately followed by digits
      if (pos_ + 1 < src_.size() && src_[pos_] == '/' &&
          std::isdigit(static_cast<unsigned char>(src_[pos_ + 1]))) {
        advance();  // '/'
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
          advance();
      }
      return {Tok::Number, src_.substr(start, pos_ - start), l, c};
    }
    advance();
    switch (ch) {
      case '+': return {Tok::Plus, "+", l, c};
      case '-': return {Tok::Minus, "-", l, c};
      case '*': return {Tok::Star, "*", l, c};
      case '^': return {Tok::Caret, "^", l, c};
      case '(': return {Tok::LParen, "(", l, c};
      case ')': return {Tok::RParen, ")", l, c};
      default:
        throw ParseError(std::string("unexpected character '") + ch + "'", l, c);
    }
  }

 private:
  void skip_ws() {
    while (pos_ < src_.size() &&
           std::isspace(static_cast<unsigned char>(src_[pos_])))
      advance();
  }
  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }
  const std::string& src_;
  std::size_t pos_ = 0;
  int line_;
  int col_;
};

class ExprParser {
 public:
  ExprParser(const std::string& text, RingPtr ring,
             const std::map<std::string, Rational>& symbols,
             const std::set<std::string>& deferred, int line0, int col0)
      : lex_(text, line0, col0),
        ring_(std::move(ring)),
        symbols_(symbols),
        deferred_(deferred) {
    cur_ = lex_.next();
  }

  Polynomial parse() {
    Polynomial p = expr();
    if (cur_.kind != Tok::End)
      throw ParseError("unexpected trailing input '" + cur_.text + "'",
                       cur_.line, cur_.col);
    return p;
  }

 private:
  void bump() { cur_ = lex_.next(); }

  Polynomial expr() {
    Polynomial acc = term();
    while (cur_.kind == Tok::Plus || cur_.kind == Tok::Minus) {
      bool minus = cur_.kind == Tok::Minus;
      bump();
      Polynomial rhs = term();
      if (minus)
        acc -= rhs;
      else
        acc += rhs;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (cur_.kind == Tok::Star) {
      bump();
      acc *= factor();
    }
    return acc;
  }

  Polynomial factor() {
    if (cur_.kind == Tok::Minus) {
      bump();
      return -factor();
    }
    return base();
  }

  Polynomial base() {
    Polynomial p = primary();
    if (cur_.kind == Tok::Caret) {
      bump();
      if (cur_.kind == Tok::Minus)
        throw ParseError("negative exponent", cur_.line, cur_.col);
      if (cur_.kind != Tok::Number || cur_.text.find('/') != std::string::npos)
        throw ParseError("exponent must be a non-negative integer", cur_.line,
                         cur_.col);
      long k = std::stol(cur_.text);
      bump();
      p = p.pow(k);
    }
    return p;
  }

  Polynomial primary() {
    switch (cur_.kind) {
      case Tok::Ident: {
        Token t = cur_;
        bump();
        int idx = ring_->index_of(t.text);
        if (idx >= 0) return Polynomial::variable(ring_, idx);
        auto it = symbols_.find(t.text);
        if (it != symbols_.end())
          return Polynomial::constant(ring_, it->second);
        if (deferred_.count(t.text))
          throw MathError("uninstantiated parameter '" + t.text + "'");
        throw ParseError("unknown variable name '" + t.text + "'", t.line, t.col);
      }
      case Tok::Number: {
        Token t = cur_;
        bump();
        return Polynomial::constant(ring_, Rational::from_string(t.text));
      }
      case Tok::LParen: {
        bump();
        Polynomial p = expr();
        if (cur_.kind != Tok::RParen)
          throw ParseError("expected ')'", cur_.line, cur_.col);
        bump();
        return p;
      }
      default:
        throw ParseError("expected identifier, number or '('", cur_.line, cur_.col);
    }
  }

  Lexer lex_;
  Token cur_;
  RingPtr ring_;
  const std::map<std::string, Rational>& symbols_;
  const std::set<std::string>& deferred_;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const RingPtr& ring) {
  return parse_expression(text, ring, {}, {});
}

Polynomial parse_expression(const std::string& text, const RingPtr& ring,
                            const std::map<std::string, Rational>& symbols,
                            const std::set<std::string>& deferred,
                            int origin_line, int origin_col) {
  ExprParser p(text, ring, symbols, deferred, origin_line, origin_col);
  return p.parse();
}

}  // namespace germinv
