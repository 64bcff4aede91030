// Standalone acceptance gate: one line per criterion, nonzero exit on failure.
//
// Every tolerance used below is pinned here, next to the criterion that uses
// it.  Exact comparisons use rational arithmetic; the tolerances only govern
// the places where a floating-point oracle or quadrature is involved.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "vmc/cell.hpp"
#include "vmc/cell2d.hpp"
#include "vmc/copositivity.hpp"
#include "vmc/gale.hpp"
#include "vmc/halfdegree.hpp"
#include "vmc/neldermead.hpp"
#include "vmc/rational.hpp"
#include "vmc/symcore.hpp"
#include "vmc/trace.hpp"

using namespace vmc;

namespace {

// Pinned tolerances.
constexpr double kAreaAgreementTol = 1e-8;       // closed form vs quadrature
constexpr double kLimitAreaTol = 1e-6;           // truncated series vs reference
constexpr double kOracleMargin = 1e-6;           // numeric-minimum margin filter
constexpr double kReductionTol = 1e-6;           // double-path consistency
constexpr double kCollisionBudgetSeconds = 1.0;  // criterion 1 runtime budget
const double kLimitAreaReference = 0.044287716368863215;

// --- shared numeric oracle -------------------------------------------------

// Floating-point minimum over the probability simplex via multi-start local
// descent, independent of the finite test sets used by the library.
double simplex_min(const std::function<double(const std::vector<double>&)>& f,
                   size_t dims, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double best = std::numeric_limits<double>::infinity();
  auto project = [](std::vector<double>& x) { project_to_simplex(x); };
  std::vector<std::vector<double>> starts;
  for (size_t k = 1; k <= dims; ++k) {
    std::vector<double> x(dims, 0.0);
    for (size_t i = 0; i < k; ++i) x[i] = 1.0 / static_cast<double>(k);
    starts.push_back(std::move(x));
  }
  for (int s = 0; s < 40; ++s) {
    std::vector<double> x(dims);
    double total = 0.0;
    for (auto& v : x) total += (v = -std::log(1.0 - unit(rng)));
    for (auto& v : x) v /= total;
    starts.push_back(std::move(x));
  }
  for (const auto& s : starts) {
    NelderMeadOptions opt;
    opt.max_iterations = 400;
    auto res = nelder_mead(f, project, s, opt);
    best = std::min(best, res.value);
  }
  return best;
}

std::vector<double> elem_doubles(const std::vector<double>& x, unsigned k_max) {
  std::vector<double> e(k_max + 1, 0.0);
  e[0] = 1.0;
  for (double v : x)
    for (unsigned k = k_max; k >= 1; --k) e[k] += v * e[k - 1];
  return e;
}

double hook_eval_doubles(const HookPolynomial& f, const std::vector<double>& x) {
  unsigned d = f.degree();
  auto e = elem_doubles(x, d);
  double e1 = e[1];
  double acc = f.leading().to_double() * std::pow(e1, d);
  for (const auto& [j, c] : f.higher())
    acc += c.to_double() * std::pow(e1, d - j) * e[j];
  return acc;
}

// --- criterion bodies ------------------------------------------------------

// 1. Two different weighted supports land on the same exact planar image
//    data, and their domain representatives coincide; everything in < 1 s.
bool criterion_collision(std::string& note) {
  auto t0 = std::chrono::steady_clock::now();

  GaleSubset s1(4, {2, 4});
  std::vector<Rational> w1{Rational(1, 13), Rational(12, 13)};
  GaleSubset s2(5, {3, 5});
  std::vector<Rational> w2{Rational(27, 52), Rational(25, 52)};

  CellPoint img1 = kappa_facet(s1, w1);
  CellPoint img2 = kappa_facet(s2, w2);
  bool ok = img1 == CellPoint({Rational(85, 338), Rational(43, 676)});
  ok = ok && img2 == CellPoint({Rational(319, 1352), Rational(4241, 70304)});

  CellPoint dom1 = kappa_domain_point(s1, w1);
  CellPoint dom2 = kappa_domain_point(s2, w2);
  ok = ok && dom1 == dom2;
  ok = ok && dom1 == CellPoint({Rational(7, 26), Rational(1, 13)});

  // The images really are the power-sum values of the combination points.
  CellPoint chk1 = nu_eval(convex_support_combination({2, 4}, w1, 4),
                           standard_exponents(3));
  CellPoint chk2 = nu_eval(convex_support_combination({3, 5}, w2, 5),
                           standard_exponents(3));
  ok = ok && chk1 == img1 && chk2 == img2;

  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3f s", secs);
  note = buf;
  return ok && secs < kCollisionBudgetSeconds;
}

// 2. Exact arc endpoints for weights up to 50, and exact slopes at every
//    junction of the planar boundary.
bool criterion_arcs(std::string&) {
  for (unsigned long k = 1; k <= 50; ++k) {
    Arc a = Arc::lower(k);
    Rational lo(1, static_cast<long>(k + 1)), hi(1, static_cast<long>(k));
    if (!(arc_eval(a, a.t_lo()) == CellPoint({lo, lo * lo}))) return false;
    if (!(arc_eval(a, a.t_hi()) == CellPoint({hi, hi * hi}))) return false;
    if (arc_slope(a, a.t_lo()) != Rational(3, static_cast<long>(k + 1))) return false;
    if (arc_slope(a, a.t_hi()) != Rational(3, static_cast<long>(2 * k))) return false;
  }
  for (unsigned long n = 2; n <= 50; ++n) {
    Arc u = Arc::upper(n);
    Rational inv(1, static_cast<long>(n));
    if (!(arc_eval(u, u.t_lo()) == CellPoint({Rational(1), Rational(1)}))) return false;
    if (!(arc_eval(u, u.t_hi()) == CellPoint({inv, inv * inv}))) return false;
    if (arc_slope(u, u.t_lo()) != Rational(3, 2)) return false;
    if (arc_slope(u, u.t_hi()) != Rational(3, static_cast<long>(n))) return false;
  }
  for (unsigned long n = 3; n <= 12; ++n) {
    for (const auto& sp : singular_points(n)) {
      long k = static_cast<long>(sp.k);
      Rational inv(1, k);
      if (!(sp.point == CellPoint({inv, inv * inv}))) return false;
      if (sp.k == 1) {
        if (sp.kind != SingularKind::Cusp) return false;
        if (sp.slope_small_x != Rational(3, 2) || sp.slope_large_x != Rational(3, 2))
          return false;
      } else if (sp.k == n) {
        if (sp.kind != SingularKind::Cusp) return false;
        if (sp.slope_small_x != Rational(3, k) || sp.slope_large_x != Rational(3, k))
          return false;
      } else {
        if (sp.kind != SingularKind::Corner) return false;
        if (sp.slope_small_x != Rational(3, 2 * k)) return false;
        if (sp.slope_large_x != Rational(3, k)) return false;
      }
    }
  }
  return true;
}

// 3. Closed-form areas match quadrature for n = 3..20; the n = 3 value is
//    exactly 1/80; the limit value sits within 1e-6 of the reference constant.
bool criterion_areas(std::string& note) {
  auto a3 = area(Domain2::finite(3), AreaMode::ClosedForm);
  if (!a3.exact || *a3.exact != Rational(1, 80)) return false;
  double worst = 0.0;
  for (unsigned long n = 3; n <= 20; ++n) {
    auto closed = area(Domain2::finite(n), AreaMode::ClosedForm);
    auto green = area(Domain2::finite(n), AreaMode::GreenNumeric);
    worst = std::max(worst, std::abs(closed.value - green.value));
    if (std::abs(closed.value - green.value) >= kAreaAgreementTol) return false;
  }
  auto lc = area(Domain2::limit(), AreaMode::ClosedForm);
  auto lg = area(Domain2::limit(), AreaMode::GreenNumeric);
  if (std::abs(lc.value - kLimitAreaReference) >= kLimitAreaTol) return false;
  if (std::abs(lg.value - kLimitAreaReference) >= kLimitAreaTol) return false;
  char buf[96];
  std::snprintf(buf, sizeof(buf), "max closed-vs-quadrature gap %.2e", worst);
  note = buf;
  return true;
}

// 4. The multiplicity encoding is a bijection onto the brute-force facet
//    list for n <= 10, d <= 6, and the planar-image patch count is n.
bool criterion_bijection(std::string&) {
  for (unsigned long n = 2; n <= 10; ++n) {
    for (unsigned d = 1; d <= std::min<unsigned long>(6, n - 1); ++d) {
      auto facets = enumerate_facets(n, d);

      // Brute force: every size-d subset, filtered by the evenness test.
      std::vector<std::vector<unsigned long>> brute;
      std::vector<unsigned long> cur;
      std::function<void(unsigned long)> rec = [&](unsigned long next) {
        if (cur.size() == d) {
          if (is_gale(cur, n, d)) brute.push_back(cur);
          return;
        }
        for (unsigned long v = next; v <= n; ++v) {
          cur.push_back(v);
          rec(v + 1);
          cur.pop_back();
        }
      };
      rec(1);
      if (brute.size() != facets.size()) return false;
      for (size_t i = 0; i < brute.size(); ++i)
        if (facets[i].elements() != brute[i]) return false;

      // Round trip facet -> multiplicities -> facet, with admissible type.
      std::set<std::vector<unsigned long>> facet_set;
      for (const auto& f : facets) {
        auto mv = gale_to_multiplicity(f);
        if (!mv.is_type1() && !mv.is_type2()) return false;
        if (mv.total() != n) return false;
        if (multiplicity_to_gale(mv).elements() != f.elements()) return false;
        facet_set.insert(f.elements());
      }

      // Surjectivity: every admissible multiplicity vector with d positive
      // slots lands inside the facet set, and the counts agree.
      size_t admissible = 0;
      std::vector<unsigned long> parts;
      std::function<void(unsigned long)> comp = [&](unsigned long rest) {
        if (parts.size() == d) {
          if (rest != 0) return;
          unsigned long used = 0;
          for (auto p : parts) used += p;
          MultiplicityVector mv(n - used, parts);
          if (!mv.is_type1() && !mv.is_type2()) return;
          if (!facet_set.count(multiplicity_to_gale(mv).elements())) return;
          ++admissible;
          return;
        }
        for (unsigned long v = 1; v + (d - parts.size() - 1) <= rest; ++v) {
          parts.push_back(v);
          comp(rest - v);
          parts.pop_back();
        }
      };
      for (unsigned long used = d; used <= n; ++used) comp(used);
      if (admissible != facets.size()) return false;
    }
  }
  for (unsigned long n = 3; n <= 20; ++n)
    if (enumerate_patches(n, 3, PatchSource::Simplex).size() != n) return false;
  return true;
}

// 5. Hook-shaped decisions match an independent numeric minimum on 200
//    non-marginal random instances, and the worked degree-3 example behaves
//    exactly as recorded, including its two-variable factorization.
bool criterion_hooks(std::string& note) {
  std::mt19937 rng(4501);
  std::uniform_int_distribution<long> cnum(-3, 3);
  std::uniform_int_distribution<unsigned> dpick(2, 5);
  std::uniform_int_distribution<unsigned long> npick(2, 6);
  int tested = 0, attempts = 0;
  while (tested < 200 && attempts < 2000) {
    ++attempts;
    unsigned d = dpick(rng);
    unsigned long n = std::max<unsigned long>(npick(rng), d);
    std::vector<Rational> cs{Rational(cnum(rng), 1), Rational(0)};
    for (unsigned j = 2; j <= d; ++j) cs.emplace_back(cnum(rng), 1);
    HookPolynomial f = HookPolynomial::from_coefficients(cs);
    auto rep = hook_copositive(f, n);
    double numeric = simplex_min(
        [&](const std::vector<double>& x) { return hook_eval_doubles(f, x); }, n,
        4600 + static_cast<unsigned>(attempts));
    if (std::abs(numeric) < kOracleMargin) continue;
    if (rep.copositive != (numeric > 0.0)) return false;
    ++tested;
  }
  if (tested < 200) return false;
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%d instances, %d attempts", tested, attempts);
  note = buf;

  auto g = HookPolynomial::from_coefficients(
      {Rational(1), Rational(0), Rational(-4), Rational(0)});
  auto at3 = hook_copositive(g, 3);
  if (at3.copositive || at3.witness_k != 3) return false;
  if (at3.witness_value != Rational(-1, 3)) return false;

  // The two-variable decision: the cubic is e1 times the quadratic with the
  // same coefficient tail, so the degree-2 list decides it; their test
  // values coincide slot for slot.
  auto g2 = HookPolynomial::from_coefficients({Rational(1), Rational(0), Rational(-4)});
  for (unsigned long k = 1; k <= 6; ++k)
    if (hook_test_value(g, k) != hook_test_value(g2, k)) return false;
  if (!hook_copositive(g2, 2).copositive) return false;

  // On two variables the polynomial is (x + y)(x - y)^2.
  auto sym = g.to_symmetric();
  std::uniform_int_distribution<long> num(-9, 9);
  for (int trial = 0; trial < 50; ++trial) {
    Rational x(num(rng), 4), y(num(rng), 4);
    Rational direct = sym.eval_symbols({x + y, x * y, Rational(0)});
    if (direct != (x + y) * (x - y) * (x - y)) return false;
  }
  return true;
}

// 6. Even-sextic decisions: the two reference triples behave exactly as
//    recorded, and 100 random triples agree with the numeric oracle.
bool criterion_sextics(std::string& note) {
  SexticCoeffs good{Rational(1), Rational(-2), Rational(1)};
  if (!clr_sextic_all_n(good).copositive) return false;
  SexticCoeffs bad{Rational(0), Rational(-1), Rational(1)};
  auto rep = clr_sextic_all_n(bad);
  if (rep.copositive || rep.witness_k != 2) return false;
  if (rep.witness_value != Rational(-1, 4)) return false;

  std::mt19937 rng(6001);
  std::uniform_int_distribution<long> cnum(-3, 3);
  std::uniform_int_distribution<unsigned long> npick(3, 6);
  int tested = 0;
  for (int trial = 0; trial < 100; ++trial) {
    SexticCoeffs s{Rational(cnum(rng), 1), Rational(cnum(rng), 1),
                   Rational(cnum(rng), 1)};
    unsigned long n = npick(rng);
    auto dec = clr_sextic(s, n);
    double a = s.a.to_double(), b = s.b.to_double(), c = s.c.to_double();
    double numeric = simplex_min(
        [&](const std::vector<double>& y) {
          double s2 = 0.0, s3 = 0.0;
          for (double v : y) {
            s2 += v * v;
            s3 += v * v * v;
          }
          return a + b * s2 + c * s3;
        },
        n, 6100 + static_cast<unsigned>(trial));
    if (std::abs(numeric) < kOracleMargin) continue;
    if (dec.copositive != (numeric > 0.0)) return false;
    ++tested;
  }
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%d non-marginal of 100", tested);
  note = buf;
  return tested >= 60;
}

// 7. The scaled-uniform test values of the degree-4 cautionary example are
//    exactly (k-1)(k-2)/k^3 >= 0 for k <= 1000, while the diagonal spectrum
//    (4,1,1) drives the polynomial to -24 by two separate evaluations.
bool criterion_testset(std::string&) {
  auto rep = power_sum_testset_counterexample(1000);
  if (rep.test_values.size() != 1000) return false;
  for (unsigned long k = 1; k <= 1000; ++k) {
    long kl = static_cast<long>(k);
    Integer numr((kl - 1) * (kl - 2));
    Integer den = Integer(kl) * kl * kl;
    if (rep.test_values[k - 1] != Rational(numr, den)) return false;
    if (rep.test_values[k - 1].sign() < 0) return false;
  }
  if (rep.witness_m != 2 || rep.witness_t != Rational(4)) return false;
  if (rep.witness_value != Rational(-24)) return false;
  if (rep.direct_value != Rational(-24)) return false;
  if (power_sum_diagonal_value(2, Rational(4)) != Rational(-24)) return false;

  // Independent: power sums of (4,1,1) pushed through 2p4 - 3p3p1 + p2p1^2.
  auto pt = CompressedPoint::from_vector({Rational(4), Rational(1), Rational(1)});
  Rational p1 = eval_power_sum(pt, 1), p2 = eval_power_sum(pt, 2);
  Rational p3 = eval_power_sum(pt, 3), p4 = eval_power_sum(pt, 4);
  Rational direct = Rational(2) * p4 - Rational(3) * p3 * p1 + p2 * p1 * p1;
  return direct == Rational(-24);
}

// 8. Grounding identity for the two-stage encoder on uniform spectra for
//    n <= 20, and exact domination of the curve by its piecewise-linear
//    envelope on the 10^4-point grid with the predicted equality set.
bool criterion_encoder(std::string&) {
  std::mt19937 rng(8101);
  std::uniform_int_distribution<long> cnum(-4, 4);
  int built = 0;
  for (int trial = 0; trial < 12; ++trial) {
    unsigned k = 1 + trial % 2;
    MultiPoly p = MultiPoly::constant(k, Rational(0));
    for (int t = 0; t < 3; ++t) {
      MultiPoly mono = MultiPoly::constant(k, Rational(cnum(rng), 1));
      unsigned budget = 3;  // total degree of the input stays <= 3
      for (unsigned i = 0; i < k; ++i) {
        std::uniform_int_distribution<unsigned> expo(0, budget);
        unsigned e = expo(rng);
        budget -= e;
        if (e > 0) mono = mono * MultiPoly::variable(k, i).pow(e);
      }
      p = p + mono;
    }
    if (p.total_degree() < 1 || p.terms().empty()) continue;
    ++built;

    auto enc = tau_encode(p);
    for (unsigned long n = 1; n <= 20; ++n) {
      Rational nn(Integer(n), Integer(1));
      Rational ystar = (nn - Rational(1)) / nn;
      Rational zstar = (nn - Rational(1)) * (nn - Rational(2)) / (nn * nn);
      if (tau_curve_g(ystar) != zstar) return false;

      std::vector<Rational> q_args(2 * k);
      std::vector<std::vector<Rational>> power_values, elem_values;
      Rational scale(1);
      for (unsigned i = 0; i < k; ++i) {
        q_args[i] = ystar;
        q_args[k + i] = zstar;
        power_values.emplace_back(3 * enc.q_degree, nn);
        std::vector<Rational> es;
        for (unsigned j = 1; j <= 3 * enc.q_degree; ++j)
          es.push_back(j <= n ? Rational(binomial(n, j)) : Rational(0));
        elem_values.push_back(std::move(es));
        scale *= nn.pow(static_cast<long>(3 * enc.q_degree));
      }
      Rational target = enc.q.eval(q_args) * scale;
      if (enc.tau_power_sum.eval(power_values) != target) return false;
      if (enc.tau_elementary.eval(elem_values) != target) return false;
    }
  }
  if (built < 6) return false;

  const long N = 10000;
  for (long i = 0; i <= N; ++i) {
    Rational x(i, N);
    Rational L = envelope_L(x), g = tau_curve_g(x);
    if (L < g) return false;
    bool expect_equal = (i == N) || (N % (N - i) == 0);
    if ((L == g) != expect_equal) return false;
  }
  return true;
}

// Phi evaluated straight from its term list; the cross-check for criterion 9.
Rational phi_direct(const PhiFunction& phi, const std::vector<Rational>& s,
                    const std::vector<Rational>& t) {
  Rational acc(0);
  for (const auto& [c, mono] : phi.terms()) {
    Rational prod = c;
    for (unsigned a : mono) {
      Rational inner(0);
      for (size_t i = 0; i < s.size(); ++i) inner += s[i] * t[i].pow(a);
      prod *= inner;
    }
    acc += prod;
  }
  return acc;
}

// 9. The quartic power-mean counterexample is realized exactly at n = 2 with
//    value -1, and the fixed-n reductions agree with the block function and
//    with direct spectrum evaluation on random degree-4/6 inputs for n <= 8.
bool criterion_power_mean(std::string&) {
  SymmetricPolynomial target = SymmetricPolynomial::zero(Basis::PowerSum);
  target.add_term({1, 3}, Rational(1));
  target.add_term({2, 2}, Rational(-1));
  auto verdict = check_power_mean_all_n(target);
  if (verdict.kind != PowerMeanVerdictKind::Counterexample) return false;
  if (!verdict.witness) return false;
  const auto& w = *verdict.witness;
  if (w.value != Rational(-1) || w.realized_n != 2) return false;
  if (w.spectrum.size() != 2) return false;
  if (w.spectrum[0] != std::make_pair(Rational(-1), 1ul)) return false;
  if (w.spectrum[1] != std::make_pair(Rational(1), 1ul)) return false;
  if (power_mean_value(target, w.spectrum) != w.value) return false;

  static const std::vector<Monomial> kQuartics = {
      {4}, {1, 3}, {2, 2}, {1, 1, 2}, {1, 1, 1, 1}};
  static const std::vector<Monomial> kSextics = {
      {6}, {1, 5}, {2, 4}, {3, 3}, {1, 1, 4}, {1, 2, 3}, {2, 2, 2},
      {1, 1, 1, 3}, {1, 1, 2, 2}, {1, 1, 1, 1, 2}, {1, 1, 1, 1, 1, 1}};

  std::mt19937 rng(9001);
  std::uniform_int_distribution<long> cnum(-3, 3);
  std::uniform_int_distribution<unsigned long> npick(2, 8);
  std::uniform_int_distribution<long> xnum(-8, 8);
  for (int trial = 0; trial < 40; ++trial) {
    const auto& pool = (trial % 2 == 0) ? kQuartics : kSextics;
    SymmetricPolynomial f = SymmetricPolynomial::zero(Basis::PowerSum);
    std::uniform_int_distribution<size_t> mpick(0, pool.size() - 1);
    for (int tmono = 0; tmono < 2; ++tmono)
      f.add_term(pool[mpick(rng)], Rational(cnum(rng), 1));
    if (f.is_zero()) continue;

    unsigned long n = npick(rng);
    auto red = reduce_fixed_n(f, n);
    PhiFunction phi(f);
    unsigned blocks = phi.blocks();
    for (size_t j = 0; j < red.multiplicity_lists.size(); ++j) {
      const auto& mult = red.multiplicity_lists[j];
      std::vector<Rational> x;
      for (size_t i = 0; i < mult.size(); ++i) x.emplace_back(xnum(rng), 2);

      // Zero-padded block arguments matching this reduced problem.
      std::vector<Rational> s(blocks, Rational(0)), t(blocks, Rational(0));
      std::vector<std::pair<Rational, unsigned long>> spectrum;
      for (size_t i = 0; i < mult.size(); ++i) {
        s[i] = Rational(Integer(mult[i]), Integer(n));
        t[i] = x[i];
        spectrum.emplace_back(x[i], mult[i]);
      }

      Rational via_reduction = red.eval(j, x);
      if (via_reduction != phi_direct(phi, s, t)) return false;
      if (via_reduction != power_mean_value(f, spectrum)) return false;

      std::vector<double> xd, sd, td;
      for (const auto& v : x) xd.push_back(v.to_double());
      for (const auto& v : s) sd.push_back(v.to_double());
      for (const auto& v : t) td.push_back(v.to_double());
      double dval = red.eval(j, xd);
      double pval = phi.eval(sd, td);
      double denom = std::max(1.0, std::abs(dval));
      if (std::abs(dval - pval) > kReductionTol * denom) return false;
      if (std::abs(dval - via_reduction.to_double()) > kReductionTol * denom)
        return false;
    }
  }
  return true;
}

// 10. Ten thousand random power-sum images of simplex points never classify
//     as Outside, and the scaling flow keeps every one of them inside the
//     limit region.
bool criterion_membership(std::string&) {
  std::mt19937 rng(101010);
  std::uniform_int_distribution<unsigned long> npick(2, 8);
  std::uniform_int_distribution<long> wnum(0, 12);
  std::uniform_int_distribution<long> tnum(0, 16);
  auto exps = standard_exponents(3);
  for (int trial = 0; trial < 10000; ++trial) {
    unsigned long n = npick(rng);
    std::vector<Rational> x(n);
    long total = 0;
    for (auto& v : x) {
      long a = wnum(rng);
      v = Rational(a);
      total += a;
    }
    if (total == 0) {
      x[0] = Rational(1);
      total = 1;
    }
    for (auto& v : x) v /= Rational(total);

    CellPoint q = nu_eval(CompressedPoint::from_vector(x), exps);
    if (membership(q, Domain2::finite(n)) == Membership::Outside) return false;
    if (membership(q, Domain2::limit()) == Membership::Outside) return false;

    Rational t(tnum(rng), 16);
    if (membership(scale_flow(q, t), Domain2::limit()) == Membership::Outside)
      return false;
  }
  return true;
}

struct Criterion {
  const char* what;
  std::function<bool(std::string&)> run;
};

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {"collision of weighted supports reproduced exactly", criterion_collision},
      {"arc endpoints and junction slopes exact up to weight 50", criterion_arcs},
      {"planar areas: closed form vs quadrature, exact n=3, limit constant",
       criterion_areas},
      {"multiplicity encoding bijects onto facet lists; patch count = n",
       criterion_bijection},
      {"hook-shaped decisions match the numeric oracle on 200 instances",
       criterion_hooks},
      {"even-sextic decisions match the reference triples and the oracle",
       criterion_sextics},
      {"scaled-uniform values stay nonnegative while a diagonal spectrum fails",
       criterion_testset},
      {"encoder grounding identity for n <= 20 and exact envelope domination",
       criterion_encoder},
      {"power-mean counterexample realized exactly; reductions consistent",
       criterion_power_mean},
      {"random power-sum images never classify Outside; scaling flow preserved",
       criterion_membership},
  };

  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    std::string note;
    bool ok = false;
    try {
      ok = criteria[i].run(note);
    } catch (const std::exception& e) {
      note = std::string("exception: ") + e.what();
    }
    if (!ok) ++failed;
    std::printf("[%s] criterion %2zu: %s%s%s\n", ok ? "PASS" : "FAIL", i + 1,
                criteria[i].what, note.empty() ? "" : " -- ", note.c_str());
  }
  if (failed == 0)
    std::printf("acceptance: all %zu criteria passed\n", criteria.size());
  else
    std::printf("acceptance: %d of %zu criteria FAILED\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
