#pragma once

// Copositivity decisions for two families of symmetric polynomials whose
// nonnegativity on the nonnegative orthant reduces to finitely many test
// evaluations along scaled uniform supports:
//
//   * "hook" polynomials  f = c0*e1^d + sum_{j=2}^{d} c_j * e1^(d-j) * e_j,
//     tested through v(k) = c0 + sum_j c_j * C(k,j) / k^j, and
//   * even sextics  a*p2^3 + b*p4*p2 + c*p6, tested through
//     w(k) = a + b/k + c/k^2.
//
// Fixed-n decisions scan k = 1..n.  All-n decisions clear denominators,
// obtaining a polynomial in k, and scan k = 1 up to one past its Cauchy root
// bound; beyond that bound the sign equals the sign of the leading
// coefficient, so the finite scan is conclusive.

#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "vmc/rational.hpp"
#include "vmc/symcore.hpp"

namespace vmc {

class HookPolynomial {
 public:
  HookPolynomial(unsigned degree, Rational c0, std::map<unsigned, Rational> higher)
      : degree_(degree), c0_(std::move(c0)), higher_(std::move(higher)) {
    if (degree_ < 2) throw std::invalid_argument("HookPolynomial: degree must be >= 2");
    for (const auto& [j, c] : higher_) {
      if (j < 2 || j > degree_)
        throw std::invalid_argument("HookPolynomial: coefficient index out of range");
      (void)c;
    }
  }

  // Coefficient list (c_0, c_1, ..., c_d); c_1 must be zero since e1^(d-1)*e1
  // would duplicate the leading term.
  static HookPolynomial from_coefficients(const std::vector<Rational>& cs) {
    if (cs.size() < 3)
      throw std::invalid_argument("HookPolynomial: need coefficients c_0..c_d with d >= 2");
    if (cs.size() >= 2 && !cs[1].is_zero())
      throw std::invalid_argument("HookPolynomial: c_1 must be zero");
    unsigned d = static_cast<unsigned>(cs.size() - 1);
    std::map<unsigned, Rational> higher;
    for (unsigned j = 2; j <= d; ++j)
      if (!cs[j].is_zero()) higher.emplace(j, cs[j]);
    return HookPolynomial(d, cs[0], std::move(higher));
  }

  unsigned degree() const { return degree_; }
  const Rational& leading() const { return c0_; }
  const std::map<unsigned, Rational>& higher() const { return higher_; }

  // The polynomial in the elementary basis.
  SymmetricPolynomial to_symmetric() const {
    auto e1 = SymmetricPolynomial::symbol(Basis::Elementary, 1);
    SymmetricPolynomial f = c0_ * e1.pow(degree_);
    for (const auto& [j, c] : higher_)
      f = f + c * (e1.pow(degree_ - j) * SymmetricPolynomial::symbol(Basis::Elementary, j));
    return f;
  }

  std::string str() const { return to_symmetric().str(); }

 private:
  unsigned degree_;
  Rational c0_;
  std::map<unsigned, Rational> higher_;  // j -> c_j, 2 <= j <= degree
};

// v(k): the value of f at the scaled uniform support with k equal entries,
// normalized by e1^d.  Nonnegativity of f on the orthant for supports of size
// <= n is equivalent to v(k) >= 0 for k = 1..n.
inline Rational hook_test_value(const HookPolynomial& f, unsigned long k) {
  if (k == 0) throw std::invalid_argument("hook_test_value: k must be >= 1");
  Rational v = f.leading();
  for (const auto& [j, c] : f.higher()) {
    if (k < j) continue;  // C(k, j) = 0
    Rational term = c * Rational(binomial(k, j), Integer(1));
    v += term / Rational(Integer(k), Integer(1)).pow(j);
  }
  return v;
}

struct CopositivityReport {
  bool copositive = false;
  // Populated when !copositive: the smallest failing test index and its value.
  unsigned long witness_k = 0;
  Rational witness_value;
  // All-n scans: the limiting test value as k -> infinity, and the largest k
  // actually inspected (one past the root bound).
  std::optional<Rational> limit_value;
  unsigned long scanned_up_to = 0;
};

inline CopositivityReport hook_copositive(const HookPolynomial& f, unsigned long n) {
  if (n < f.degree())
    throw std::invalid_argument(
        "hook_copositive: the finite test set requires n >= degree");
  CopositivityReport rep;
  rep.scanned_up_to = n;
  for (unsigned long k = 1; k <= n; ++k) {
    Rational v = hook_test_value(f, k);
    if (v.sign() < 0) {
      rep.copositive = false;
      rep.witness_k = k;
      rep.witness_value = v;
      return rep;
    }
  }
  rep.copositive = true;
  return rep;
}

namespace detail {

// Dense univariate polynomial helpers over Rational; coeffs[i] multiplies k^i.
using Poly = std::vector<Rational>;

inline Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

inline void poly_add_to(Poly& a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (size_t i = 0; i < b.size(); ++i) a[i] += b[i];
}

inline void poly_trim(Poly& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

inline Rational poly_eval(const Poly& a, const Rational& x) {
  Rational v(0);
  for (size_t i = a.size(); i-- > 0;) v = v * x + a[i];
  return v;
}

// One plus the Cauchy bound: every real root of a (nonconstant, trimmed) poly
// has absolute value < 1 + max_i |a_i / a_lead|.
inline Rational cauchy_root_bound(const Poly& a) {
  Rational m(0);
  const Rational& lead = a.back();
  for (size_t i = 0; i + 1 < a.size(); ++i) {
    Rational q = a[i] / lead;
    if (q.sign() < 0) q = -q;
    if (m < q) m = q;
  }
  return Rational(1) + m;
}

}  // namespace detail

// Decides v(k) >= 0 for every k >= 1 simultaneously.  Clearing k^(d-1) turns
// v into the polynomial
//   P(k) = c0*k^(d-1) + sum_j c_j * (k-1)(k-2)...(k-j+1) * k^(d-j) / j!,
// whose sign agrees with v(k) at every positive integer.  All real roots of P
// lie strictly below B = 1 + max|a_i/a_lead|, so checking k = 1..ceil(B)+1
// exactly decides the sign for all k: past the bound the sign is constant and
// is witnessed at ceil(B)+1.
inline CopositivityReport hook_copositive_all_n(const HookPolynomial& f) {
  const unsigned d = f.degree();
  detail::Poly P;
  {
    detail::Poly lead(d, Rational(0));
    lead[d - 1] = f.leading();
    P = lead;
  }
  for (const auto& [j, c] : f.higher()) {
    // c_j / j! * k^(d-j) * prod_{i=1}^{j-1} (k - i)
    detail::Poly term(d - j + 1, Rational(0));
    term[d - j] = c / Rational(factorial(j), Integer(1));
    for (unsigned i = 1; i < j; ++i) {
      Integer mi = -Integer(i);
      detail::Poly lin{Rational(mi, Integer(1)), Rational(1)};
      term = detail::poly_mul(term, lin);
    }
    detail::poly_add_to(P, term);
  }
  detail::poly_trim(P);

  CopositivityReport rep;
  // Limit of v(k) as k -> infinity: the k^(d-1) coefficient of P.
  rep.limit_value = (P.size() >= d) ? P[d - 1] : Rational(0);

  if (P.empty()) {  // v identically zero
    rep.copositive = true;
    rep.scanned_up_to = 1;
    return rep;
  }

  unsigned long kmax = 1;
  if (P.size() >= 2) {
    Rational bound = detail::cauchy_root_bound(P);
    Integer top = bound.ceil() + 1;
    kmax = top.get_ui();
  } else {
    kmax = 1;
  }
  rep.scanned_up_to = kmax;
  for (unsigned long k = 1; k <= kmax; ++k) {
    Rational pk = detail::poly_eval(P, Rational(Integer(k), Integer(1)));
    if (pk.sign() < 0) {
      rep.copositive = false;
      rep.witness_k = k;
      rep.witness_value = hook_test_value(f, k);
      return rep;
    }
  }
  rep.copositive = true;
  return rep;
}

// Even sextics a*p2^3 + b*p4*p2 + c*p6 in the squared variables.
struct SexticCoeffs {
  Rational a, b, c;

  SymmetricPolynomial to_symmetric() const {
    auto p2 = SymmetricPolynomial::symbol(Basis::PowerSum, 2);
    auto p4 = SymmetricPolynomial::symbol(Basis::PowerSum, 4);
    auto p6 = SymmetricPolynomial::symbol(Basis::PowerSum, 6);
    return a * p2.pow(3) + b * (p4 * p2) + c * p6;
  }
};

// w(k) = a + b/k + c/k^2: the sextic divided by p2^3 at a support of k equal
// squares.
inline Rational sextic_test_value(const SexticCoeffs& s, unsigned long k) {
  if (k == 0) throw std::invalid_argument("sextic_test_value: k must be >= 1");
  Rational kk(Integer(k), Integer(1));
  return s.a + s.b / kk + s.c / (kk * kk);
}

inline CopositivityReport clr_sextic(const SexticCoeffs& s, unsigned long n) {
  if (n < 3)
    throw std::invalid_argument("clr_sextic: the finite test set requires n >= 3");
  CopositivityReport rep;
  rep.scanned_up_to = n;
  for (unsigned long k = 1; k <= n; ++k) {
    Rational w = sextic_test_value(s, k);
    if (w.sign() < 0) {
      rep.copositive = false;
      rep.witness_k = k;
      rep.witness_value = w;
      return rep;
    }
  }
  rep.copositive = true;
  return rep;
}

inline CopositivityReport clr_sextic_all_n(const SexticCoeffs& s) {
  detail::Poly Q{s.c, s.b, s.a};
  detail::poly_trim(Q);
  CopositivityReport rep;
  rep.limit_value = s.a;
  if (Q.empty()) {
    rep.copositive = true;
    rep.scanned_up_to = 1;
    return rep;
  }
  unsigned long kmax = 1;
  if (Q.size() >= 2) {
    Integer top = detail::cauchy_root_bound(Q).ceil() + 1;
    kmax = top.get_ui();
  }
  rep.scanned_up_to = kmax;
  for (unsigned long k = 1; k <= kmax; ++k) {
    Rational qk = detail::poly_eval(Q, Rational(Integer(k), Integer(1)));
    if (qk.sign() < 0) {
      rep.copositive = false;
      rep.witness_k = k;
      rep.witness_value = sextic_test_value(s, k);
      return rep;
    }
  }
  rep.copositive = true;
  return rep;
}

// A degree-4 cautionary example: for f = 2*p4 - 3*p3*p1 + p2*p1^2, every
// scaled-uniform-support test value is nonnegative, yet f is negative at a
// two-value spectrum.  The report packages both computations so callers (and
// tests) can see the test family pass while copositivity fails.
struct PowerSumTestsetReport {
  SymmetricPolynomial f = SymmetricPolynomial::zero(Basis::PowerSum);  // 2*p4 - 3*p3*p1 + p2*p1^2
  std::vector<Rational> test_values;   // value at (1, 1/k, 1/k^2, 1/k^3), k = 1..k_limit
  unsigned long witness_m = 0;         // spectrum (t, 1, ..., 1) with m ones
  Rational witness_t;
  Rational witness_value;              // via the reduced cubic in t
  Rational direct_value;               // f evaluated directly at the spectrum
};

// g_m(t): f restricted to the spectrum (t, 1, ..., 1) with m trailing ones.
inline Rational power_sum_diagonal_value(unsigned long m, const Rational& t) {
  Rational mm(Integer(m), Integer(1));
  return -mm * t.pow(3) + (mm * mm + mm) * t.pow(2) +
         (Rational(2) * mm * mm - Rational(3) * mm) * t + mm.pow(3) -
         Rational(3) * mm.pow(2) + Rational(2) * mm;
}

inline PowerSumTestsetReport power_sum_testset_counterexample(unsigned long k_limit = 1000) {
  PowerSumTestsetReport rep;
  auto p1 = SymmetricPolynomial::symbol(Basis::PowerSum, 1);
  auto p2 = SymmetricPolynomial::symbol(Basis::PowerSum, 2);
  auto p3 = SymmetricPolynomial::symbol(Basis::PowerSum, 3);
  auto p4 = SymmetricPolynomial::symbol(Basis::PowerSum, 4);
  rep.f = Rational(2) * p4 - Rational(3) * (p3 * p1) + p2 * p1 * p1;

  rep.test_values.reserve(k_limit);
  for (unsigned long k = 1; k <= k_limit; ++k) {
    Rational kk(Integer(k), Integer(1));
    std::vector<Rational> geom{Rational(1), Rational(1) / kk,
                               Rational(1) / (kk * kk), Rational(1) / (kk * kk * kk)};
    rep.test_values.push_back(rep.f.eval_symbols(geom));
  }

  rep.witness_m = 2;
  rep.witness_t = Rational(4);
  rep.witness_value = power_sum_diagonal_value(rep.witness_m, rep.witness_t);

  std::vector<Rational> spectrum(rep.witness_m + 1, Rational(1));
  spectrum[0] = rep.witness_t;
  std::vector<Rational> ps;
  for (unsigned a = 1; a <= 4; ++a) ps.push_back(power_sum(spectrum, a));
  rep.direct_value = rep.f.eval_symbols(ps);
  return rep;
}

}  // namespace vmc
