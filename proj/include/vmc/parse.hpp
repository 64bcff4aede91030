#pragma once

// A small recursive-descent parser shared by the expression dialects the
// library accepts: rational literals (including a/b), identifiers, call forms
// like tr(A^3), the operators + - * ^, and parentheses.  Consumers lower the
// generic tree into their own representations.

#include <cctype>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "vmc/rational.hpp"

namespace vmc {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, size_t position)
      : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  size_t position() const { return position_; }

 private:
  size_t position_;
};

struct ExprNode;
using ExprPtr = std::shared_ptr<const ExprNode>;

struct ExprNode {
  enum class Kind { Number, Symbol, Call, Add, Sub, Mul, Pow, Neg };
  Kind kind;
  Rational number;              // Number
  std::string name;             // Symbol / Call: identifier or function name
  std::string argument;         // Call: the inner identifier
  unsigned long argument_power = 1;  // Call: k in tr(X^k)
  ExprPtr lhs, rhs;             // binary operands; Neg and Pow use lhs
  unsigned long exponent = 0;   // Pow
};

namespace detail {

struct Token {
  enum class Kind { Number, Ident, Plus, Minus, Star, Caret, LParen, RParen, End };
  Kind kind;
  Rational number;
  std::string text;
  size_t position;
};

class Lexer {
 public:
  explicit Lexer(const std::string& src) : src_(src) { advance(); }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    size_t start = pos_;
    if (pos_ >= src_.size()) {
      current_ = {Token::Kind::End, Rational(0), "", start};
      return;
    }
    char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t end = pos_;
      while (end < src_.size() &&
             (std::isdigit(static_cast<unsigned char>(src_[end])) || src_[end] == '.'))
        ++end;
      // A '/' directly between digit runs is part of a rational literal.
      if (end < src_.size() && src_[end] == '/' && end + 1 < src_.size() &&
          std::isdigit(static_cast<unsigned char>(src_[end + 1]))) {
        ++end;
        while (end < src_.size() && std::isdigit(static_cast<unsigned char>(src_[end]))) ++end;
      }
      std::string text = src_.substr(pos_, end - pos_);
      pos_ = end;
      try {
        current_ = {Token::Kind::Number, Rational::parse(text), text, start};
      } catch (const std::exception&) {
        throw ParseError("invalid numeric literal '" + text + "'", start);
      }
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t end = pos_;
      while (end < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[end])) || src_[end] == '_'))
        ++end;
      current_ = {Token::Kind::Ident, Rational(0), src_.substr(pos_, end - pos_), start};
      pos_ = end;
      return;
    }
    ++pos_;
    switch (c) {
      case '+': current_ = {Token::Kind::Plus, Rational(0), "+", start}; return;
      case '-': current_ = {Token::Kind::Minus, Rational(0), "-", start}; return;
      case '*': current_ = {Token::Kind::Star, Rational(0), "*", start}; return;
      case '^': current_ = {Token::Kind::Caret, Rational(0), "^", start}; return;
      case '(': current_ = {Token::Kind::LParen, Rational(0), "(", start}; return;
      case ')': current_ = {Token::Kind::RParen, Rational(0), ")", start}; return;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", start);
    }
  }

  std::string src_;
  size_t pos_ = 0;
  Token current_{Token::Kind::End, Rational(0), "", 0};
};

class Parser {
 public:
  explicit Parser(const std::string& src) : lex_(src) {}

  ExprPtr parse() {
    ExprPtr e = expression();
    if (lex_.peek().kind != Token::Kind::End)
      throw ParseError("unexpected trailing input", lex_.peek().position);
    return e;
  }

 private:
  static ExprPtr make(ExprNode n) { return std::make_shared<const ExprNode>(std::move(n)); }

  ExprPtr expression() {
    ExprPtr left = term();
    while (lex_.peek().kind == Token::Kind::Plus ||
           lex_.peek().kind == Token::Kind::Minus) {
      bool plus = lex_.take().kind == Token::Kind::Plus;
      ExprPtr right = term();
      ExprNode n;
      n.kind = plus ? ExprNode::Kind::Add : ExprNode::Kind::Sub;
      n.lhs = left;
      n.rhs = right;
      left = make(std::move(n));
    }
    return left;
  }

  ExprPtr term() {
    ExprPtr left = unary();
    for (;;) {
      Token::Kind k = lex_.peek().kind;
      bool explicit_star = k == Token::Kind::Star;
      // Juxtaposition multiplies: "2tr(A^2)" and "tr(A)tr(B)" parse like
      // "2*tr(A^2)" and "tr(A)*tr(B)".
      bool adjacent = k == Token::Kind::Number || k == Token::Kind::Ident ||
                      k == Token::Kind::LParen;
      if (!explicit_star && !adjacent) break;
      if (explicit_star) lex_.take();
      ExprPtr right = explicit_star ? unary() : postfix();
      ExprNode n;
      n.kind = ExprNode::Kind::Mul;
      n.lhs = left;
      n.rhs = right;
      left = make(std::move(n));
    }
    return left;
  }

  ExprPtr unary() {
    if (lex_.peek().kind == Token::Kind::Minus) {
      size_t pos = lex_.take().position;
      (void)pos;
      ExprPtr inner = unary();
      ExprNode n;
      n.kind = ExprNode::Kind::Neg;
      n.lhs = inner;
      return make(std::move(n));
    }
    return postfix();
  }

  ExprPtr postfix() {
    ExprPtr base = primary();
    while (lex_.peek().kind == Token::Kind::Caret) {
      lex_.take();
      Token t = lex_.take();
      if (t.kind != Token::Kind::Number || !t.number.is_integer() || t.number.sign() < 0)
        throw ParseError("exponent must be a nonnegative integer", t.position);
      ExprNode n;
      n.kind = ExprNode::Kind::Pow;
      n.lhs = base;
      n.exponent = t.number.num().get_ui();
      base = make(std::move(n));
    }
    return base;
  }

  ExprPtr primary() {
    Token t = lex_.take();
    switch (t.kind) {
      case Token::Kind::Number: {
        ExprNode n;
        n.kind = ExprNode::Kind::Number;
        n.number = t.number;
        return make(std::move(n));
      }
      case Token::Kind::Ident: {
        if (lex_.peek().kind == Token::Kind::LParen) {
          lex_.take();
          Token arg = lex_.take();
          if (arg.kind != Token::Kind::Ident)
            throw ParseError("expected an identifier inside '" + t.text + "(...)'",
                             arg.position);
          unsigned long power = 1;
          if (lex_.peek().kind == Token::Kind::Caret) {
            lex_.take();
            Token e = lex_.take();
            if (e.kind != Token::Kind::Number || !e.number.is_integer() ||
                e.number.sign() <= 0)
              throw ParseError("argument power must be a positive integer", e.position);
            power = e.number.num().get_ui();
          }
          Token close = lex_.take();
          if (close.kind != Token::Kind::RParen)
            throw ParseError("expected ')'", close.position);
          ExprNode n;
          n.kind = ExprNode::Kind::Call;
          n.name = t.text;
          n.argument = arg.text;
          n.argument_power = power;
          return make(std::move(n));
        }
        ExprNode n;
        n.kind = ExprNode::Kind::Symbol;
        n.name = t.text;
        return make(std::move(n));
      }
      case Token::Kind::LParen: {
        ExprPtr inner = expression();
        Token close = lex_.take();
        if (close.kind != Token::Kind::RParen)
          throw ParseError("expected ')'", close.position);
        return inner;
      }
      default:
        throw ParseError("unexpected token '" + t.text + "'", t.position);
    }
  }

  Lexer lex_;
};

}  // namespace detail

inline ExprPtr parse_expression(const std::string& src) {
  return detail::Parser(src).parse();
}

}  // namespace vmc
