#pragma once

// Core value types for symmetric-function geometry: points of the nonnegative
// orthant stored as value/multiplicity lists, images under power-sum maps, and
// polynomials in the power-sum or elementary symmetric bases with exact
// conversion between the two.

#include "vmc/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace vmc {

// A point of the nonnegative orthant up to coordinate order: a count of zero
// coordinates plus strictly increasing positive values with multiplicities.
class CompressedPoint {
 public:
  using Entry = std::pair<Rational, unsigned long>;  // (value, multiplicity)

  CompressedPoint(unsigned long zero_count, std::vector<Entry> entries)
      : zeros_(zero_count) {
    for (auto& [v, m] : entries) {
      if (v.sign() <= 0)
        throw std::invalid_argument("CompressedPoint: entry values must be positive");
      if (m == 0) throw std::invalid_argument("CompressedPoint: zero multiplicity");
    }
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.first < b.first; });
    for (auto& e : entries) {
      if (!entries_.empty() && entries_.back().first == e.first)
        entries_.back().second += e.second;
      else
        entries_.push_back(e);
    }
  }

  static CompressedPoint from_vector(const std::vector<Rational>& xs) {
    unsigned long zeros = 0;
    std::vector<Entry> es;
    for (const auto& x : xs) {
      if (x.sign() < 0)
        throw std::invalid_argument("CompressedPoint: negative coordinate");
      if (x.is_zero())
        ++zeros;
      else
        es.push_back({x, 1});
    }
    return CompressedPoint(zeros, std::move(es));
  }

  unsigned long zero_count() const { return zeros_; }
  const std::vector<Entry>& entries() const { return entries_; }

  unsigned long size() const {
    unsigned long n = zeros_;
    for (const auto& [v, m] : entries_) n += m;
    return n;
  }

  Rational coordinate_sum() const {
    Rational s;
    for (const auto& [v, m] : entries_) s += v * Rational(static_cast<long>(m));
    return s;
  }

  bool on_probability_simplex() const { return coordinate_sum() == Rational(1); }
  bool on_sub_simplex() const { return coordinate_sum() <= Rational(1); }

  // (m0, m1, ..., ml) with values in increasing order.
  std::vector<unsigned long> multiplicity_pattern() const {
    std::vector<unsigned long> m{zeros_};
    for (const auto& e : entries_) m.push_back(e.second);
    return m;
  }

  std::vector<Rational> to_vector() const {
    std::vector<Rational> xs(zeros_, Rational(0));
    for (const auto& [v, m] : entries_)
      for (unsigned long i = 0; i < m; ++i) xs.push_back(v);
    return xs;
  }

  friend bool operator==(const CompressedPoint& a, const CompressedPoint& b) {
    return a.zeros_ == b.zeros_ && a.entries_ == b.entries_;
  }

  std::string str() const {
    std::ostringstream os;
    os << "(0x" << zeros_;
    for (const auto& [v, m] : entries_) os << ", " << v.str() << "x" << m;
    os << ")";
    return os.str();
  }

 private:
  unsigned long zeros_ = 0;
  std::vector<Entry> entries_;
};

// Sum of a-th powers of the coordinates.
inline Rational eval_power_sum(const CompressedPoint& x, unsigned a) {
  if (a == 0) throw std::invalid_argument("eval_power_sum: exponent must be >= 1");
  Rational s;
  for (const auto& [v, m] : x.entries())
    s += v.pow(a) * Rational(static_cast<long>(m));
  return s;
}

// Naive full-vector power sum (negative coordinates allowed).
inline Rational power_sum(const std::vector<Rational>& xs, unsigned a) {
  if (a == 0) throw std::invalid_argument("power_sum: exponent must be >= 1");
  Rational s;
  for (const auto& x : xs) s += x.pow(a);
  return s;
}

// First K power sums p_1..p_K of a compressed point.
inline std::vector<Rational> power_sums(const CompressedPoint& x, unsigned k_max) {
  std::vector<Rational> ps;
  ps.reserve(k_max);
  for (unsigned a = 1; a <= k_max; ++a) ps.push_back(eval_power_sum(x, a));
  return ps;
}

// First K elementary symmetric values e_1..e_K, by expanding prod (1 + v t)^m.
inline std::vector<Rational> elementary_values(const CompressedPoint& x, unsigned k_max) {
  std::vector<Rational> c{Rational(1)};  // coefficients of prod so far
  for (const auto& [v, m] : x.entries()) {
    for (unsigned long rep = 0; rep < m; ++rep) {
      std::vector<Rational> next(std::min<size_t>(c.size() + 1, k_max + 1), Rational(0));
      for (size_t i = 0; i < c.size() && i < next.size(); ++i) next[i] += c[i];
      for (size_t i = 0; i + 1 < next.size() && i < c.size(); ++i) next[i + 1] += c[i] * v;
      c = std::move(next);
    }
  }
  std::vector<Rational> es;
  for (unsigned k = 1; k <= k_max; ++k)
    es.push_back(k < c.size() ? c[k] : Rational(0));
  return es;
}

// Image point of a power-sum map: exact coordinates, ambient dimension d means
// d-1 stored coordinates (the first power sum is pinned to 1 on the simplex).
class CellPoint {
 public:
  explicit CellPoint(std::vector<Rational> coords) : coords_(std::move(coords)) {
    if (coords_.empty()) throw std::invalid_argument("CellPoint: empty coordinates");
  }

  const std::vector<Rational>& coords() const { return coords_; }
  size_t ambient_d() const { return coords_.size() + 1; }

  std::vector<double> to_doubles() const {
    std::vector<double> v;
    v.reserve(coords_.size());
    for (const auto& c : coords_) v.push_back(c.to_double());
    return v;
  }

  friend bool operator==(const CellPoint& a, const CellPoint& b) {
    return a.coords_ == b.coords_;
  }

  std::string str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < coords_.size(); ++i)
      os << (i ? ", " : "") << coords_[i].str();
    os << ")";
    return os.str();
  }

 private:
  std::vector<Rational> coords_;
};

// Evaluates the tuple of power sums with the given strictly increasing
// positive exponents at x.
inline CellPoint nu_eval(const CompressedPoint& x, const std::vector<unsigned>& exponents) {
  if (exponents.empty()) throw std::invalid_argument("nu_eval: empty exponent tuple");
  for (size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] == 0)
      throw std::invalid_argument("nu_eval: exponents must be >= 1");
    if (i && exponents[i] <= exponents[i - 1])
      throw std::invalid_argument("nu_eval: exponents must be strictly increasing");
  }
  std::vector<Rational> coords;
  coords.reserve(exponents.size());
  for (unsigned a : exponents) coords.push_back(eval_power_sum(x, a));
  return CellPoint(std::move(coords));
}

// Exponents (2, 3, ..., d): the standard chart once the first power sum is 1.
inline std::vector<unsigned> standard_exponents(unsigned d) {
  if (d < 2) throw std::invalid_argument("standard_exponents: need d >= 2");
  std::vector<unsigned> e;
  for (unsigned a = 2; a <= d; ++a) e.push_back(a);
  return e;
}

enum class Basis { PowerSum, Elementary };

// The point with k coordinates equal to 1/k and n-k zeros.
inline CompressedPoint uniform_support_point(unsigned long k, unsigned long n) {
  if (k < 1 || k > n) throw std::invalid_argument("uniform_support_point: need 1 <= k <= n");
  return CompressedPoint(n - k, {{Rational(1, static_cast<long>(k)), k}});
}

// Image of the uniform k-support point: (1/k, ..., 1/k^{d-1}) in the power-sum
// chart, (C(k,2)/k^2, ..., C(k,d)/k^d) in the elementary chart.
inline CellPoint moment_vertex(unsigned long k, unsigned d, Basis basis) {
  if (k < 1) throw std::invalid_argument("moment_vertex: need k >= 1");
  if (d < 2) throw std::invalid_argument("moment_vertex: need d >= 2");
  std::vector<Rational> coords;
  for (unsigned j = 2; j <= d; ++j) {
    if (basis == Basis::PowerSum)
      coords.push_back(Rational(1, static_cast<long>(k)).pow(j - 1));
    else
      coords.push_back(Rational(binomial(k, j)) * Rational(Integer(k)).pow(j).pow(-1));
  }
  return CellPoint(std::move(coords));
}

// ---------------------------------------------------------------------------
// Symmetric polynomials in one family of symbols (p_k or e_k).

// A monomial is a partition: the multiset of symbol indices, stored descending,
// e.g. p2^2 * p6 -> {6, 2, 2}.  Empty monomial = the constant term.
using Monomial = std::vector<unsigned>;

inline Monomial canonical_monomial(Monomial m) {
  for (unsigned k : m)
    if (k == 0) throw std::invalid_argument("Monomial: symbol index must be >= 1");
  std::sort(m.begin(), m.end(), std::greater<unsigned>());
  return m;
}

inline unsigned monomial_degree(const Monomial& m) {
  unsigned d = 0;
  for (unsigned k : m) d += k;
  return d;
}

class SymmetricPolynomial {
 public:
  explicit SymmetricPolynomial(Basis b) : basis_(b) {}

  static SymmetricPolynomial zero(Basis b) { return SymmetricPolynomial(b); }

  static SymmetricPolynomial constant(Basis b, const Rational& c) {
    SymmetricPolynomial f(b);
    f.add_term({}, c);
    return f;
  }

  static SymmetricPolynomial symbol(Basis b, unsigned k) {
    SymmetricPolynomial f(b);
    f.add_term({k}, Rational(1));
    return f;
  }

  Basis basis() const { return basis_; }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  unsigned degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, monomial_degree(m));
    return d;
  }

  void add_term(Monomial m, const Rational& c) {
    if (c.is_zero()) return;
    m = canonical_monomial(std::move(m));
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(std::move(m), c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  friend SymmetricPolynomial operator+(const SymmetricPolynomial& a,
                                       const SymmetricPolynomial& b) {
    a.check_same_basis(b);
    SymmetricPolynomial r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
  }

  friend SymmetricPolynomial operator-(const SymmetricPolynomial& a,
                                       const SymmetricPolynomial& b) {
    a.check_same_basis(b);
    SymmetricPolynomial r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
    return r;
  }

  friend SymmetricPolynomial operator*(const SymmetricPolynomial& a,
                                       const SymmetricPolynomial& b) {
    a.check_same_basis(b);
    SymmetricPolynomial r(a.basis_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        Monomial m = ma;
        m.insert(m.end(), mb.begin(), mb.end());
        r.add_term(std::move(m), ca * cb);
      }
    return r;
  }

  friend SymmetricPolynomial operator*(const Rational& c, const SymmetricPolynomial& a) {
    SymmetricPolynomial r(a.basis_);
    for (const auto& [m, cf] : a.terms_) r.add_term(m, c * cf);
    return r;
  }

  SymmetricPolynomial pow(unsigned e) const {
    SymmetricPolynomial r = constant(basis_, Rational(1));
    for (unsigned i = 0; i < e; ++i) r = r * (*this);
    return r;
  }

  friend bool operator==(const SymmetricPolynomial& a, const SymmetricPolynomial& b) {
    return a.basis_ == b.basis_ && a.terms_ == b.terms_;
  }

  // Value given the symbol values vals[k-1] for symbol index k.
  Rational eval_symbols(const std::vector<Rational>& vals) const {
    Rational s;
    for (const auto& [m, c] : terms_) {
      Rational t = c;
      for (unsigned k : m) {
        if (k > vals.size())
          throw std::invalid_argument("eval_symbols: missing value for symbol index " +
                                      std::to_string(k));
        t *= vals[k - 1];
      }
      s += t;
    }
    return s;
  }

  // Value at a point of the nonnegative orthant (symbols become power sums or
  // elementary symmetric values of the point, per the basis).
  Rational eval_at_point(const CompressedPoint& x) const {
    unsigned k_max = 0;
    for (const auto& [m, c] : terms_)
      for (unsigned k : m) k_max = std::max(k_max, k);
    std::vector<Rational> vals = basis_ == Basis::PowerSum
                                     ? power_sums(x, k_max)
                                     : elementary_values(x, k_max);
    return eval_symbols(vals);
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    const char* sym = basis_ == Basis::PowerSum ? "p" : "e";
    std::ostringstream os;
    bool first = true;
    // Iterate highest-degree monomials first for readable output.
    std::vector<const std::pair<const Monomial, Rational>*> ts;
    for (const auto& t : terms_) ts.push_back(&t);
    std::sort(ts.begin(), ts.end(), [](auto* a, auto* b) {
      unsigned da = monomial_degree(a->first), db = monomial_degree(b->first);
      if (da != db) return da > db;
      return a->first < b->first;
    });
    for (auto* t : ts) {
      const auto& [m, c] = *t;
      Rational a = c.abs();
      os << (first ? (c.sign() < 0 ? "-" : "") : (c.sign() < 0 ? " - " : " + "));
      first = false;
      bool coeff_shown = (a != Rational(1)) || m.empty();
      if (coeff_shown) os << a.str();
      unsigned i = 0;
      while (i < m.size()) {
        unsigned j = i;
        while (j < m.size() && m[j] == m[i]) ++j;
        if (coeff_shown || i) os << "*";
        os << sym << m[i];
        if (j - i > 1) os << "^" << (j - i);
        i = j;
      }
    }
    return os.str();
  }

 private:
  void check_same_basis(const SymmetricPolynomial& o) const {
    if (basis_ != o.basis_)
      throw std::invalid_argument("SymmetricPolynomial: mixed bases; convert first");
  }

  Basis basis_;
  std::map<Monomial, Rational> terms_;
};

namespace detail {

// Tables p_k as a polynomial in e's and e_k as a polynomial in p's, grown on
// demand from the triangular recurrences
//   p_k = (-1)^{k-1} k e_k + sum_{i=1}^{k-1} (-1)^{k-1+i} e_{k-i} p_i,
//   e_k = (1/k)  sum_{i=1}^{k}   (-1)^{i-1} e_{k-i} p_i        (e_0 = 1).
inline const SymmetricPolynomial& basis_table(Basis from, unsigned k) {
  static std::mutex mu;
  static std::vector<SymmetricPolynomial> p_in_e;  // index k-1
  static std::vector<SymmetricPolynomial> e_in_p;
  if (k == 0 || k > 64)
    throw std::invalid_argument("newton_convert: symbol index out of supported range");
  std::lock_guard<std::mutex> lock(mu);
  auto& table = from == Basis::PowerSum ? p_in_e : e_in_p;
  Basis target = from == Basis::PowerSum ? Basis::Elementary : Basis::PowerSum;
  while (table.size() < k) {
    unsigned j = static_cast<unsigned>(table.size()) + 1;
    SymmetricPolynomial f(target);
    if (from == Basis::PowerSum) {
      long sign = (j % 2 == 1) ? 1 : -1;  // (-1)^{j-1}
      f = f + Rational(sign * static_cast<long>(j)) *
                  SymmetricPolynomial::symbol(target, j);
      for (unsigned i = 1; i < j; ++i) {
        long s = ((j - 1 + i) % 2 == 0) ? 1 : -1;
        f = f + Rational(s) * (SymmetricPolynomial::symbol(target, j - i) * table[i - 1]);
      }
    } else {
      for (unsigned i = 1; i <= j; ++i) {
        long s = (i % 2 == 1) ? 1 : -1;
        SymmetricPolynomial e_pref = (j - i == 0)
                                         ? SymmetricPolynomial::constant(target, Rational(1))
                                         : table[j - i - 1];
        f = f + Rational(s) * (e_pref * SymmetricPolynomial::symbol(target, i));
      }
      f = Rational(1, static_cast<long>(j)) * f;
    }
    table.push_back(f);
  }
  return table[k - 1];
}

}  // namespace detail

// Rewrites f exactly in the other symbol family via the triangular Newton
// recurrences.  Valid as an identity of abstract polynomials (equivalently,
// whenever the number of variables is at least deg f).
inline SymmetricPolynomial newton_convert(const SymmetricPolynomial& f, Basis target) {
  if (f.basis() == target) return f;
  SymmetricPolynomial r(target);
  for (const auto& [m, c] : f.terms()) {
    SymmetricPolynomial t = SymmetricPolynomial::constant(target, c);
    for (unsigned k : m) t = t * detail::basis_table(f.basis(), k);
    r = r + t;
  }
  return r;
}

}  // namespace vmc
