#pragma once

// Trace polynomials: expressions in tr(X^k) (or the normalized ntr(X^k) =
// tr(X^k)/dim) of real symmetric matrix variables.  On the spectral side a
// matrix variable is just its eigenvalue multiset, so trace expressions are
// multi-group symmetric polynomials; this header provides the AST with exact
// evaluation, the conversion to product-symmetric form, a deterministic
// counterexample search over small rational spectra, and the encoder that
// turns multivariate integer polynomials into equivalent trace-nonnegativity
// questions.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "vmc/parse.hpp"
#include "vmc/rational.hpp"
#include "vmc/symcore.hpp"

namespace vmc {

class TraceExpr {
 public:
  enum class Kind { Constant, Trace, Sum, Product, Power };

  static TraceExpr constant(Rational v) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Constant;
    n->value = std::move(v);
    return TraceExpr(std::move(n));
  }

  static TraceExpr trace(std::string var, unsigned long power, bool normalized) {
    if (power == 0) throw std::invalid_argument("trace power must be >= 1");
    if (var.empty()) throw std::invalid_argument("trace variable name must be nonempty");
    auto n = std::make_shared<Node>();
    n->kind = Kind::Trace;
    n->var = std::move(var);
    n->trace_power = power;
    n->normalized = normalized;
    return TraceExpr(std::move(n));
  }

  static TraceExpr sum(std::vector<TraceExpr> kids) {
    std::vector<TraceExpr> flat;
    for (auto& k : kids) {
      if (k.kind() == Kind::Sum)
        for (const auto& kk : k.children()) flat.push_back(kk);
      else
        flat.push_back(std::move(k));
    }
    if (flat.empty()) return constant(Rational(0));
    if (flat.size() == 1) return flat.front();
    auto n = std::make_shared<Node>();
    n->kind = Kind::Sum;
    n->kids = std::move(flat);
    return TraceExpr(std::move(n));
  }

  static TraceExpr product(std::vector<TraceExpr> kids) {
    std::vector<TraceExpr> flat;
    for (auto& k : kids) {
      if (k.kind() == Kind::Product)
        for (const auto& kk : k.children()) flat.push_back(kk);
      else
        flat.push_back(std::move(k));
    }
    if (flat.empty()) return constant(Rational(1));
    if (flat.size() == 1) return flat.front();
    auto n = std::make_shared<Node>();
    n->kind = Kind::Product;
    n->kids = std::move(flat);
    return TraceExpr(std::move(n));
  }

  static TraceExpr power(TraceExpr base, unsigned long exponent) {
    if (exponent == 0) return constant(Rational(1));
    if (exponent == 1) return base;
    auto n = std::make_shared<Node>();
    n->kind = Kind::Power;
    n->kids.push_back(std::move(base));
    n->exponent = exponent;
    return TraceExpr(std::move(n));
  }

  static TraceExpr negate(const TraceExpr& x) {
    if (x.kind() == Kind::Constant) return constant(-x.value());
    if (x.kind() == Kind::Product && x.children().front().kind() == Kind::Constant) {
      std::vector<TraceExpr> kids = x.children();
      Rational c = -kids.front().value();
      if (c == Rational(1)) {
        kids.erase(kids.begin());
        return product(std::move(kids));
      }
      kids.front() = constant(c);
      return product(std::move(kids));
    }
    std::vector<TraceExpr> kids{constant(Rational(-1)), x};
    return product(std::move(kids));
  }

  Kind kind() const { return node_->kind; }
  const Rational& value() const { return node_->value; }
  const std::string& variable() const { return node_->var; }
  unsigned long trace_power() const { return node_->trace_power; }
  bool normalized() const { return node_->normalized; }
  const std::vector<TraceExpr>& children() const { return node_->kids; }
  unsigned long exponent() const { return node_->exponent; }

  friend bool operator==(const TraceExpr& a, const TraceExpr& b) {
    if (a.node_ == b.node_) return true;
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
      case Kind::Constant: return a.value() == b.value();
      case Kind::Trace:
        return a.variable() == b.variable() && a.trace_power() == b.trace_power() &&
               a.normalized() == b.normalized();
      case Kind::Power:
        return a.exponent() == b.exponent() && a.children()[0] == b.children()[0];
      case Kind::Sum:
      case Kind::Product: {
        if (a.children().size() != b.children().size()) return false;
        for (size_t i = 0; i < a.children().size(); ++i)
          if (!(a.children()[i] == b.children()[i])) return false;
        return true;
      }
    }
    return false;
  }
  friend bool operator!=(const TraceExpr& a, const TraceExpr& b) { return !(a == b); }

 private:
  struct Node {
    Kind kind = Kind::Constant;
    Rational value;
    std::string var;
    unsigned long trace_power = 1;
    bool normalized = false;
    std::vector<TraceExpr> kids;
    unsigned long exponent = 0;
  };

  TraceExpr() = default;
  explicit TraceExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  std::shared_ptr<const Node> node_;
};

namespace detail {

inline void collect_trace_flags(const TraceExpr& e, bool& has_plain, bool& has_normalized) {
  if (e.kind() == TraceExpr::Kind::Trace) {
    (e.normalized() ? has_normalized : has_plain) = true;
    return;
  }
  for (const auto& k : e.children()) collect_trace_flags(k, has_plain, has_normalized);
}

inline TraceExpr lower_trace(const ExprPtr& n) {
  switch (n->kind) {
    case ExprNode::Kind::Number:
      return TraceExpr::constant(n->number);
    case ExprNode::Kind::Symbol:
      throw std::invalid_argument("bare identifier '" + n->name +
                                  "': matrix variables appear only inside tr(...) or ntr(...)");
    case ExprNode::Kind::Call: {
      if (n->name == "tr") return TraceExpr::trace(n->argument, n->argument_power, false);
      if (n->name == "ntr") return TraceExpr::trace(n->argument, n->argument_power, true);
      throw std::invalid_argument("unknown function '" + n->name +
                                  "': expected tr or ntr");
    }
    case ExprNode::Kind::Add:
      return TraceExpr::sum({lower_trace(n->lhs), lower_trace(n->rhs)});
    case ExprNode::Kind::Sub:
      return TraceExpr::sum({lower_trace(n->lhs), TraceExpr::negate(lower_trace(n->rhs))});
    case ExprNode::Kind::Mul:
      return TraceExpr::product({lower_trace(n->lhs), lower_trace(n->rhs)});
    case ExprNode::Kind::Pow:
      return TraceExpr::power(lower_trace(n->lhs), n->exponent);
    case ExprNode::Kind::Neg:
      return TraceExpr::negate(lower_trace(n->lhs));
  }
  throw std::logic_error("unreachable expression kind");
}

}  // namespace detail

inline TraceExpr parse_trace(const std::string& src) {
  TraceExpr e = detail::lower_trace(parse_expression(src));
  bool has_plain = false, has_normalized = false;
  detail::collect_trace_flags(e, has_plain, has_normalized);
  if (has_plain && has_normalized)
    throw std::invalid_argument(
        "mixed tr and ntr in one expression; normalize consistently");
  return e;
}

namespace detail {

inline std::string print_trace(const TraceExpr& e);

inline std::string print_trace_factor(const TraceExpr& e) {
  std::string s = print_trace(e);
  if (e.kind() == TraceExpr::Kind::Sum) return "(" + s + ")";
  return s;
}

inline std::string print_trace(const TraceExpr& e) {
  using Kind = TraceExpr::Kind;
  switch (e.kind()) {
    case Kind::Constant:
      return e.value().str();
    case Kind::Trace: {
      std::ostringstream os;
      os << (e.normalized() ? "ntr(" : "tr(") << e.variable();
      if (e.trace_power() > 1) os << '^' << e.trace_power();
      os << ')';
      return os.str();
    }
    case Kind::Power: {
      const TraceExpr& base = e.children()[0];
      std::string b = print_trace(base);
      bool parens = base.kind() == Kind::Sum || base.kind() == Kind::Product ||
                    (base.kind() == Kind::Constant && base.value().sign() < 0);
      std::ostringstream os;
      os << (parens ? "(" + b + ")" : b) << '^' << e.exponent();
      return os.str();
    }
    case Kind::Product: {
      const auto& kids = e.children();
      std::ostringstream os;
      size_t begin = 0;
      if (kids[0].kind() == Kind::Constant && kids[0].value() == Rational(-1) &&
          kids.size() > 1) {
        os << '-';
        begin = 1;
      }
      for (size_t i = begin; i < kids.size(); ++i) {
        if (i > begin) os << '*';
        os << print_trace_factor(kids[i]);
      }
      return os.str();
    }
    case Kind::Sum: {
      const auto& kids = e.children();
      std::string out = print_trace(kids[0]);
      for (size_t i = 1; i < kids.size(); ++i) {
        std::string part = print_trace(kids[i]);
        if (!part.empty() && part[0] == '-')
          out += " - " + part.substr(1);
        else
          out += " + " + part;
      }
      return out;
    }
  }
  return "?";
}

}  // namespace detail

inline std::string to_string(const TraceExpr& e) { return detail::print_trace(e); }

// Matrix variables in order of first appearance.
inline std::vector<std::string> trace_variables(const TraceExpr& e) {
  std::vector<std::string> vars;
  auto walk = [&](auto&& self, const TraceExpr& x) -> void {
    if (x.kind() == TraceExpr::Kind::Trace) {
      if (std::find(vars.begin(), vars.end(), x.variable()) == vars.end())
        vars.push_back(x.variable());
      return;
    }
    for (const auto& k : x.children()) self(self, k);
  };
  walk(walk, e);
  return vars;
}

using SpectraMap = std::map<std::string, std::vector<Rational>>;

inline Rational eval_on_spectra(const TraceExpr& e, const SpectraMap& spectra) {
  using Kind = TraceExpr::Kind;
  switch (e.kind()) {
    case Kind::Constant:
      return e.value();
    case Kind::Trace: {
      auto it = spectra.find(e.variable());
      if (it == spectra.end())
        throw std::invalid_argument("no spectrum given for variable '" + e.variable() + "'");
      if (it->second.empty())
        throw std::invalid_argument("empty spectrum for variable '" + e.variable() + "'");
      Rational s(0);
      for (const auto& v : it->second) s += v.pow(e.trace_power());
      if (e.normalized())
        s /= Rational(Integer(it->second.size()), Integer(1));
      return s;
    }
    case Kind::Sum: {
      Rational s(0);
      for (const auto& k : e.children()) s += eval_on_spectra(k, spectra);
      return s;
    }
    case Kind::Product: {
      Rational s(1);
      for (const auto& k : e.children()) s *= eval_on_spectra(k, spectra);
      return s;
    }
    case Kind::Power:
      return eval_on_spectra(e.children()[0], spectra).pow(e.exponent());
  }
  throw std::logic_error("unreachable expression kind");
}

// ---------------------------------------------------------------------------
// Product-symmetric form: polynomials in per-group symmetric symbols.

struct GroupFactor {
  unsigned group = 0;   // which variable group
  unsigned degree = 0;  // which symbol of that group (p_degree or e_degree)
  unsigned power = 1;
  friend auto operator<=>(const GroupFactor&, const GroupFactor&) = default;
};

using GroupMonomial = std::vector<GroupFactor>;  // sorted by (group, degree), powers merged

inline GroupMonomial canonical_group_monomial(GroupMonomial m) {
  std::sort(m.begin(), m.end(), [](const GroupFactor& a, const GroupFactor& b) {
    return std::pair(a.group, a.degree) < std::pair(b.group, b.degree);
  });
  GroupMonomial out;
  for (const auto& f : m) {
    if (f.power == 0) continue;
    if (!out.empty() && out.back().group == f.group && out.back().degree == f.degree)
      out.back().power += f.power;
    else
      out.push_back(f);
  }
  return out;
}

class ProductSymmetricPolynomial {
 public:
  ProductSymmetricPolynomial() = default;
  ProductSymmetricPolynomial(Basis basis, unsigned groups) : basis_(basis), groups_(groups) {}

  static ProductSymmetricPolynomial constant(Basis basis, unsigned groups, Rational c) {
    ProductSymmetricPolynomial f(basis, groups);
    f.add_term({}, c);
    return f;
  }

  static ProductSymmetricPolynomial symbol(Basis basis, unsigned groups, unsigned group,
                                           unsigned degree) {
    if (group >= groups) throw std::invalid_argument("symbol group out of range");
    if (degree == 0) throw std::invalid_argument("symbol degree must be >= 1");
    ProductSymmetricPolynomial f(basis, groups);
    f.add_term({{group, degree, 1}}, Rational(1));
    return f;
  }

  Basis basis() const { return basis_; }
  unsigned groups() const { return groups_; }
  const std::map<GroupMonomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(GroupMonomial m, const Rational& c) {
    if (c.is_zero()) return;
    m = canonical_group_monomial(std::move(m));
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(std::move(m), c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  ProductSymmetricPolynomial operator+(const ProductSymmetricPolynomial& o) const {
    check_compatible(o);
    ProductSymmetricPolynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
  }

  ProductSymmetricPolynomial operator*(const ProductSymmetricPolynomial& o) const {
    check_compatible(o);
    ProductSymmetricPolynomial r(basis_, groups_);
    for (const auto& [ma, ca] : terms_)
      for (const auto& [mb, cb] : o.terms_) {
        GroupMonomial m = ma;
        m.insert(m.end(), mb.begin(), mb.end());
        r.add_term(std::move(m), ca * cb);
      }
    return r;
  }

  ProductSymmetricPolynomial operator*(const Rational& c) const {
    ProductSymmetricPolynomial r(basis_, groups_);
    for (const auto& [m, cc] : terms_) r.add_term(m, cc * c);
    return r;
  }

  ProductSymmetricPolynomial pow(unsigned long e) const {
    ProductSymmetricPolynomial r = constant(basis_, groups_, Rational(1));
    for (unsigned long i = 0; i < e; ++i) r = r * *this;
    return r;
  }

  // Per-group degree vector of one monomial (symbol degree times power).
  std::vector<unsigned> degree_profile(const GroupMonomial& m) const {
    std::vector<unsigned> deg(groups_, 0);
    for (const auto& f : m) deg[f.group] += f.degree * f.power;
    return deg;
  }

  // values[g][j-1] is the j-th symbol value of group g.
  Rational eval(const std::vector<std::vector<Rational>>& values) const {
    if (values.size() != groups_)
      throw std::invalid_argument("ProductSymmetricPolynomial::eval: wrong group count");
    Rational total(0);
    for (const auto& [m, c] : terms_) {
      Rational prod = c;
      for (const auto& f : m) {
        if (f.degree > values[f.group].size())
          throw std::invalid_argument(
              "ProductSymmetricPolynomial::eval: missing symbol value");
        prod *= values[f.group][f.degree - 1].pow(f.power);
      }
      total += prod;
    }
    return total;
  }

  // Rewrites an elementary-basis polynomial in power sums (identity on
  // power-sum input).
  ProductSymmetricPolynomial to_power_sum() const {
    if (basis_ == Basis::PowerSum) return *this;
    ProductSymmetricPolynomial out(Basis::PowerSum, groups_);
    for (const auto& [m, c] : terms_) {
      ProductSymmetricPolynomial acc = constant(Basis::PowerSum, groups_, c);
      for (const auto& f : m) {
        SymmetricPolynomial sym =
            newton_convert(SymmetricPolynomial::symbol(Basis::Elementary, f.degree),
                           Basis::PowerSum);
        ProductSymmetricPolynomial lifted(Basis::PowerSum, groups_);
        for (const auto& [mono, cc] : sym.terms()) {
          GroupMonomial gm;
          for (unsigned part : mono) gm.push_back({f.group, part, 1});
          lifted.add_term(std::move(gm), cc);
        }
        acc = acc * lifted.pow(f.power);
      }
      out = out + acc;
    }
    return out;
  }

  std::string str(const std::vector<std::string>& group_names = {}) const {
    if (terms_.empty()) return "0";
    const char sym = basis_ == Basis::PowerSum ? 'p' : 'e';
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      Rational cc = c;
      if (first) {
        if (cc.sign() < 0) {
          os << '-';
          cc = -cc;
        }
      } else {
        os << (cc.sign() < 0 ? " - " : " + ");
        if (cc.sign() < 0) cc = -cc;
      }
      first = false;
      bool wrote = false;
      if (!(cc == Rational(1)) || m.empty()) {
        os << cc.str();
        wrote = true;
      }
      for (const auto& f : m) {
        if (wrote) os << '*';
        os << sym << f.degree << '(' << group_name(group_names, f.group) << ')';
        if (f.power > 1) os << '^' << f.power;
        wrote = true;
      }
    }
    return os.str();
  }

 private:
  static std::string group_name(const std::vector<std::string>& names, unsigned g) {
    if (g < names.size()) return names[g];
    if (g < 26) return std::string(1, static_cast<char>('A' + g));
    return "X" + std::to_string(g + 1);
  }

  void check_compatible(const ProductSymmetricPolynomial& o) const {
    if (basis_ != o.basis_ || groups_ != o.groups_)
      throw std::invalid_argument("incompatible product-symmetric polynomials");
  }

  Basis basis_ = Basis::PowerSum;
  unsigned groups_ = 0;
  std::map<GroupMonomial, Rational> terms_;
};

struct ProductSymmetricConversion {
  std::vector<std::string> group_names;            // variable per group
  ProductSymmetricPolynomial poly;                 // power-sum basis
  bool multihomogeneous = false;
  std::vector<unsigned> degrees;                   // per-group degrees when multihomogeneous
};

namespace detail {

inline ProductSymmetricPolynomial to_psp(const TraceExpr& e,
                                         const std::vector<std::string>& vars) {
  using Kind = TraceExpr::Kind;
  const unsigned g = static_cast<unsigned>(vars.size());
  switch (e.kind()) {
    case Kind::Constant:
      return ProductSymmetricPolynomial::constant(Basis::PowerSum, g, e.value());
    case Kind::Trace: {
      if (e.normalized())
        throw std::invalid_argument(
            "to_product_symmetric: normalized traces (ntr) have no fixed polynomial "
            "form; use unnormalized tr");
      auto it = std::find(vars.begin(), vars.end(), e.variable());
      unsigned idx = static_cast<unsigned>(it - vars.begin());
      return ProductSymmetricPolynomial::symbol(
          Basis::PowerSum, g, idx, static_cast<unsigned>(e.trace_power()));
    }
    case Kind::Sum: {
      ProductSymmetricPolynomial r(Basis::PowerSum, g);
      for (const auto& k : e.children()) r = r + to_psp(k, vars);
      return r;
    }
    case Kind::Product: {
      ProductSymmetricPolynomial r =
          ProductSymmetricPolynomial::constant(Basis::PowerSum, g, Rational(1));
      for (const auto& k : e.children()) r = r * to_psp(k, vars);
      return r;
    }
    case Kind::Power:
      return to_psp(e.children()[0], vars).pow(e.exponent());
  }
  throw std::logic_error("unreachable expression kind");
}

}  // namespace detail

inline ProductSymmetricConversion to_product_symmetric(const TraceExpr& e) {
  ProductSymmetricConversion conv;
  conv.group_names = trace_variables(e);
  conv.poly = detail::to_psp(e, conv.group_names);
  conv.multihomogeneous = true;
  std::optional<std::vector<unsigned>> profile;
  for (const auto& [m, c] : conv.poly.terms()) {
    (void)c;
    std::vector<unsigned> p = conv.poly.degree_profile(m);
    if (!profile)
      profile = p;
    else if (*profile != p)
      conv.multihomogeneous = false;
  }
  if (conv.multihomogeneous && profile) conv.degrees = *profile;
  if (!conv.multihomogeneous) conv.degrees.clear();
  return conv;
}

// ---------------------------------------------------------------------------
// Counterexample search over small rational spectra.

struct TraceWitness {
  std::vector<std::pair<std::string, std::vector<Rational>>> spectra;  // variable order
  Rational value;
};

struct TraceSearchResult {
  std::optional<TraceWitness> witness;
  unsigned long tried = 0;
};

struct TraceSearchOptions {
  unsigned long budget = 512;  // maximum number of spectrum tuples to evaluate
  unsigned seed = 2024;
};

// Deterministic search: all-ones spectra first (dimension 1..4), then the
// uniform simplex vertices (1/k repeated k times), then seeded random small
// rational spectra.  Tuples are enumerated by increasing total candidate
// index, lexicographic within, so cheap witnesses come out first and reruns
// are reproducible.
inline TraceSearchResult counterexample_search(const TraceExpr& e,
                                               const TraceSearchOptions& options = {}) {
  TraceSearchResult result;
  std::vector<std::string> vars = trace_variables(e);
  const size_t v = vars.size();
  if (v == 0) {
    Rational val = eval_on_spectra(e, {});
    result.tried = 1;
    if (val.sign() < 0) result.witness = TraceWitness{{}, val};
    return result;
  }

  std::vector<std::vector<Rational>> candidates;
  for (unsigned long k = 1; k <= 4; ++k)
    candidates.emplace_back(k, Rational(1));
  for (unsigned long k = 2; k <= 4; ++k)
    candidates.emplace_back(k, Rational(Integer(1), Integer(k)));
  {
    std::mt19937 rng(options.seed);
    std::uniform_int_distribution<int> num(-3, 3);
    std::uniform_int_distribution<int> den(1, 3);
    size_t want = std::min<size_t>(8 + options.budget, 5000);
    unsigned long size_cycle = 0;
    while (candidates.size() < want) {
      unsigned long sz = 1 + size_cycle % 3;
      ++size_cycle;
      std::vector<Rational> spectrum;
      for (unsigned long i = 0; i < sz; ++i)
        spectrum.push_back(Rational(Integer(num(rng)), Integer(den(rng))));
      candidates.push_back(std::move(spectrum));
    }
  }
  const unsigned long C = candidates.size();

  std::vector<unsigned long> pick(v, 0);
  auto evaluate_pick = [&]() -> bool {
    SpectraMap m;
    for (size_t i = 0; i < v; ++i) m[vars[i]] = candidates[pick[i]];
    Rational val = eval_on_spectra(e, m);
    ++result.tried;
    if (val.sign() < 0) {
      TraceWitness w;
      for (size_t i = 0; i < v; ++i) w.spectra.emplace_back(vars[i], candidates[pick[i]]);
      w.value = val;
      result.witness = std::move(w);
      return true;
    }
    return false;
  };

  unsigned long max_sum = v * (C - 1);
  for (unsigned long total = 0; total <= max_sum; ++total) {
    // Assign indices summing to `total`, first positions smallest first.
    auto rec = [&](auto&& self, size_t pos, unsigned long remaining) -> bool {
      if (result.tried >= options.budget) return true;  // stop; no witness from here
      if (pos + 1 == v) {
        if (remaining >= C) return false;
        pick[pos] = remaining;
        return evaluate_pick();
      }
      unsigned long hi = std::min<unsigned long>(C - 1, remaining);
      for (unsigned long i = 0; i <= hi; ++i) {
        unsigned long rest = remaining - i;
        if (rest > (v - pos - 1) * (C - 1)) continue;
        pick[pos] = i;
        if (self(self, pos + 1, rest)) return true;
      }
      return false;
    };
    if (rec(rec, 0, total)) break;
    if (result.tried >= options.budget) break;
  }
  return result;
}

// ---------------------------------------------------------------------------
// Multivariate polynomials with explicit variable count (dense exponent keys).

class MultiPoly {
 public:
  explicit MultiPoly(unsigned vars) : vars_(vars) {}

  static MultiPoly constant(unsigned vars, Rational c) {
    MultiPoly f(vars);
    f.add_term(std::vector<unsigned>(vars, 0), std::move(c));
    return f;
  }

  static MultiPoly variable(unsigned vars, unsigned index) {
    if (index >= vars) throw std::invalid_argument("MultiPoly: variable index out of range");
    MultiPoly f(vars);
    std::vector<unsigned> e(vars, 0);
    e[index] = 1;
    f.add_term(std::move(e), Rational(1));
    return f;
  }

  unsigned vars() const { return vars_; }
  const std::map<std::vector<unsigned>, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(std::vector<unsigned> e, const Rational& c) {
    if (e.size() != vars_) throw std::invalid_argument("MultiPoly: wrong exponent arity");
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(std::move(e), c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  MultiPoly operator+(const MultiPoly& o) const {
    check(o);
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
  }

  MultiPoly operator-(const MultiPoly& o) const {
    check(o);
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
  }

  MultiPoly operator*(const MultiPoly& o) const {
    check(o);
    MultiPoly r(vars_);
    for (const auto& [ea, ca] : terms_)
      for (const auto& [eb, cb] : o.terms_) {
        std::vector<unsigned> e(vars_);
        for (unsigned i = 0; i < vars_; ++i) e[i] = ea[i] + eb[i];
        r.add_term(std::move(e), ca * cb);
      }
    return r;
  }

  MultiPoly operator*(const Rational& c) const {
    MultiPoly r(vars_);
    for (const auto& [e, cc] : terms_) r.add_term(e, cc * c);
    return r;
  }

  MultiPoly pow(unsigned long e) const {
    MultiPoly r = constant(vars_, Rational(1));
    for (unsigned long i = 0; i < e; ++i) r = r * *this;
    return r;
  }

  // Re-embed into a polynomial ring with more variables, shifting indices.
  MultiPoly extended(unsigned new_vars, unsigned offset = 0) const {
    if (offset + vars_ > new_vars)
      throw std::invalid_argument("MultiPoly::extended: target too small");
    MultiPoly r(new_vars);
    for (const auto& [e, c] : terms_) {
      std::vector<unsigned> ne(new_vars, 0);
      for (unsigned i = 0; i < vars_; ++i) ne[offset + i] = e[i];
      r.add_term(std::move(ne), c);
    }
    return r;
  }

  Rational eval(const std::vector<Rational>& x) const {
    if (x.size() != vars_) throw std::invalid_argument("MultiPoly::eval: wrong arity");
    Rational total(0);
    for (const auto& [e, c] : terms_) {
      Rational prod = c;
      for (unsigned i = 0; i < vars_; ++i)
        if (e[i] > 0) prod *= x[i].pow(e[i]);
      total += prod;
    }
    return total;
  }

  unsigned total_degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) {
      (void)c;
      unsigned s = 0;
      for (unsigned v : e) s += v;
      d = std::max(d, s);
    }
    return d;
  }

  Rational coefficient_abs_sum() const {
    Rational s(0);
    for (const auto& [e, c] : terms_) {
      (void)e;
      s += c.sign() < 0 ? -c : c;
    }
    return s;
  }

  bool has_integer_coefficients() const {
    for (const auto& [e, c] : terms_) {
      (void)e;
      if (!c.is_integer()) return false;
    }
    return true;
  }

  std::string str(const std::vector<std::string>& names) const {
    if (names.size() != vars_) throw std::invalid_argument("MultiPoly::str: wrong name count");
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      Rational cc = c;
      if (first) {
        if (cc.sign() < 0) {
          os << '-';
          cc = -cc;
        }
      } else {
        os << (cc.sign() < 0 ? " - " : " + ");
        if (cc.sign() < 0) cc = -cc;
      }
      first = false;
      bool all_zero = true;
      for (unsigned v : e) all_zero &= v == 0;
      bool wrote = false;
      if (!(cc == Rational(1)) || all_zero) {
        os << cc.str();
        wrote = true;
      }
      for (unsigned i = 0; i < vars_; ++i) {
        if (e[i] == 0) continue;
        if (wrote) os << '*';
        os << names[i];
        if (e[i] > 1) os << '^' << e[i];
        wrote = true;
      }
    }
    return os.str();
  }

 private:
  void check(const MultiPoly& o) const {
    if (vars_ != o.vars_) throw std::invalid_argument("MultiPoly: arity mismatch");
  }

  unsigned vars_;
  std::map<std::vector<unsigned>, Rational> terms_;
};

// Parses a polynomial whose variables are exactly `names` (e.g. Y1, Y2).
inline MultiPoly parse_multipoly(const std::string& src,
                                 const std::vector<std::string>& names) {
  ExprPtr root = parse_expression(src);
  const unsigned nv = static_cast<unsigned>(names.size());
  auto lower = [&](auto&& self, const ExprPtr& n) -> MultiPoly {
    switch (n->kind) {
      case ExprNode::Kind::Number:
        return MultiPoly::constant(nv, n->number);
      case ExprNode::Kind::Symbol: {
        auto it = std::find(names.begin(), names.end(), n->name);
        if (it == names.end())
          throw std::invalid_argument("unknown variable '" + n->name + "'");
        return MultiPoly::variable(nv, static_cast<unsigned>(it - names.begin()));
      }
      case ExprNode::Kind::Call:
        throw std::invalid_argument("function calls are not valid in a polynomial");
      case ExprNode::Kind::Add:
        return self(self, n->lhs) + self(self, n->rhs);
      case ExprNode::Kind::Sub:
        return self(self, n->lhs) - self(self, n->rhs);
      case ExprNode::Kind::Mul:
        return self(self, n->lhs) * self(self, n->rhs);
      case ExprNode::Kind::Pow:
        return self(self, n->lhs).pow(n->exponent);
      case ExprNode::Kind::Neg:
        return self(self, n->lhs) * Rational(-1);
    }
    throw std::logic_error("unreachable expression kind");
  };
  return lower(lower, root);
}

// ---------------------------------------------------------------------------
// Encoder: integer polynomial nonnegativity on [0,1)^k x R^k as trace
// nonnegativity.

struct TauEncoding {
  unsigned k = 0;                 // number of Y variables (= matrix groups)
  Integer M;                      // penalty weight
  MultiPoly q{0};                 // over Y1..Yk, Z1..Zk (Z after Y)
  unsigned q_degree = 0;          // total degree D of q
  ProductSymmetricPolynomial tau_elementary;  // homogeneous of degree 3D per group
  ProductSymmetricPolynomial tau_power_sum;   // same, rewritten in power sums
};

// The curve constraint g pairs with the Y/Z substitution below: on a group
// whose n eigenvalues are uniform, Y evaluates to (n-1)/n and Z to g of it.
inline Rational tau_curve_g(const Rational& x) { return Rational(2) * x * x - x; }

inline TauEncoding tau_encode(const MultiPoly& p) {
  const unsigned k = p.vars();
  if (k == 0) throw std::invalid_argument("tau_encode: need at least one variable");
  if (p.is_zero()) throw std::invalid_argument("tau_encode: zero polynomial");
  if (!p.has_integer_coefficients())
    throw std::invalid_argument("tau_encode: integer coefficients required");
  const unsigned deg = p.total_degree();
  if (deg == 0) throw std::invalid_argument("tau_encode: constant polynomial");

  TauEncoding enc;
  enc.k = k;
  Rational a = p.coefficient_abs_sum();
  Integer abs_sum = a.num();  // integral by the check above
  enc.M = abs_sum * 100 * static_cast<long>(deg);

  // q(Y, Z) = p(Y) * prod_i (1 - Y_i)^6 + M * sum_i (Z_i - (2 Y_i^2 - Y_i)).
  const unsigned nv = 2 * k;
  MultiPoly q = p.extended(nv, 0);
  for (unsigned i = 0; i < k; ++i) {
    MultiPoly yi = MultiPoly::variable(nv, i);
    MultiPoly one = MultiPoly::constant(nv, Rational(1));
    q = q * (one - yi).pow(6);
  }
  Rational Mr(enc.M, Integer(1));
  for (unsigned i = 0; i < k; ++i) {
    MultiPoly yi = MultiPoly::variable(nv, i);
    MultiPoly zi = MultiPoly::variable(nv, k + i);
    MultiPoly gy = yi * yi * Rational(2) - yi;
    q = q + (zi - gy) * Mr;
  }
  enc.q = q;
  const unsigned D = q.total_degree();
  enc.q_degree = D;

  // Substitute Y_i -> 2 e2(i) / e1(i)^2 and Z_i -> 6 e3(i) / e1(i)^3, then
  // clear denominators with e1(i)^(3D) per group.
  ProductSymmetricPolynomial tau(Basis::Elementary, k);
  for (const auto& [e, c] : q.terms()) {
    Rational coeff = c;
    GroupMonomial mono;
    for (unsigned i = 0; i < k; ++i) {
      unsigned ai = e[i], bi = e[k + i];
      if (ai > 0) {
        coeff *= Rational(Integer(2), Integer(1)).pow(ai);
        mono.push_back({i, 2, ai});
      }
      if (bi > 0) {
        coeff *= Rational(Integer(6), Integer(1)).pow(bi);
        mono.push_back({i, 3, bi});
      }
      unsigned e1_pow = 3 * D - 2 * ai - 3 * bi;
      if (e1_pow > 0) mono.push_back({i, 1, e1_pow});
    }
    tau.add_term(std::move(mono), coeff);
  }
  enc.tau_elementary = tau;
  enc.tau_power_sum = tau.to_power_sum();
  return enc;
}

// ---------------------------------------------------------------------------
// The piecewise-linear lower envelope interpolating g between consecutive
// scaled-uniform Y-values (t-1)/t; linear on [(t-1)/t, t/(t+1)], with value 1
// at 1.  It dominates g on [0,1], with equality exactly at the interpolation
// nodes and at 1.

inline unsigned long envelope_segment(const Rational& x) {
  if (x.sign() < 0 || x >= Rational(1))
    throw std::invalid_argument("envelope_segment: need 0 <= x < 1");
  Rational inv = Rational(1) / (Rational(1) - x);
  Integer t = inv.floor();
  return t.get_ui();
}

inline Rational envelope_L(const Rational& x) {
  if (x.sign() < 0 || x > Rational(1))
    throw std::invalid_argument("envelope_L: need 0 <= x <= 1");
  if (x == Rational(1)) return Rational(1);
  Integer ti = envelope_segment(x);
  Rational t(ti, Integer(1));
  Rational slope = (Rational(3) * t * t - t - Rational(2)) / (t * (t + Rational(1)));
  Rational offset = Rational(2) * (t - Rational(1)) / (t + Rational(1));
  return slope * x - offset;
}

}  // namespace vmc
