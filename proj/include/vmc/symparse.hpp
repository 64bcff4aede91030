#pragma once

// Parsing of symmetric polynomials from the p1/p2/... (power-sum) or
// e1/e2/... (elementary) symbol dialect.

#include <string>

#include "vmc/parse.hpp"
#include "vmc/symcore.hpp"

namespace vmc {

inline SymmetricPolynomial parse_symmetric_poly(const std::string& src, Basis basis) {
  const char letter = basis == Basis::PowerSum ? 'p' : 'e';
  ExprPtr root = parse_expression(src);
  auto lower = [&](auto&& self, const ExprPtr& n) -> SymmetricPolynomial {
    switch (n->kind) {
      case ExprNode::Kind::Number:
        return SymmetricPolynomial::constant(basis, n->number);
      case ExprNode::Kind::Symbol: {
        const std::string& name = n->name;
        bool ok = name.size() >= 2 && name[0] == letter;
        unsigned idx = 0;
        if (ok) {
          for (size_t i = 1; i < name.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(name[i]))) {
              ok = false;
              break;
            }
            idx = idx * 10 + static_cast<unsigned>(name[i] - '0');
          }
        }
        if (!ok || idx == 0)
          throw std::invalid_argument("unknown symbol '" + name + "': expected " +
                                      std::string(1, letter) + "1, " +
                                      std::string(1, letter) + "2, ...");
        return SymmetricPolynomial::symbol(basis, idx);
      }
      case ExprNode::Kind::Call:
        throw std::invalid_argument("function calls are not valid here");
      case ExprNode::Kind::Add:
        return self(self, n->lhs) + self(self, n->rhs);
      case ExprNode::Kind::Sub:
        return self(self, n->lhs) - self(self, n->rhs);
      case ExprNode::Kind::Mul:
        return self(self, n->lhs) * self(self, n->rhs);
      case ExprNode::Kind::Pow:
        return self(self, n->lhs).pow(n->exponent);
      case ExprNode::Kind::Neg:
        return Rational(-1) * self(self, n->lhs);
    }
    throw std::logic_error("unreachable expression kind");
  };
  return lower(lower, root);
}

}  // namespace vmc
