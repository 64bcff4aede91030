#pragma once

// Deciding nonnegativity of symmetric polynomial inequalities in normalized
// power sums, uniformly in the number of variables.  A polynomial f in the
// normalized power sums q_a = p_a / n attains its minimum over R^n at points
// with at most kappa = max(deg(f)/2, 2) distinct coordinate values, so the
// all-n infimum equals the infimum of the weighted two-stage function
//
//   Phi(s, t) = sum_lambda c_lambda * prod_i <s, t^(lambda_i)>,
//
// over the probability simplex in the weights s (kappa blocks) and real block
// values t.  Rational weight vectors s = alpha / n realize actual instances:
// Phi(alpha/n, t) is exactly f evaluated at the point with value t_j repeated
// alpha_j times.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "vmc/neldermead.hpp"
#include "vmc/rational.hpp"
#include "vmc/symcore.hpp"

namespace vmc {

inline unsigned half_degree_blocks(const SymmetricPolynomial& f) {
  if (f.basis() != Basis::PowerSum)
    throw std::invalid_argument("half_degree_blocks: expected a power-sum polynomial");
  unsigned deg = f.degree();
  if (deg % 2 != 0)
    throw std::invalid_argument(
        "half_degree_blocks: the block bound applies to even-degree polynomials");
  return std::max(deg / 2, 2u);
}

// The weighted block form of f.  Terms are kept exactly; evaluation is
// available both over rationals (for certification) and doubles (for search).
class PhiFunction {
 public:
  explicit PhiFunction(const SymmetricPolynomial& f) : blocks_(half_degree_blocks(f)) {
    for (const auto& [mono, c] : f.terms()) terms_.emplace_back(c, mono);
  }

  unsigned blocks() const { return blocks_; }
  const std::vector<std::pair<Rational, Monomial>>& terms() const { return terms_; }

  Rational eval(const std::vector<Rational>& s, const std::vector<Rational>& t) const {
    if (s.size() != t.size())
      throw std::invalid_argument("PhiFunction::eval: weight/value size mismatch");
    Rational total(0);
    for (const auto& [c, mono] : terms_) {
      Rational prod = c;
      for (unsigned part : mono) {
        Rational inner(0);
        for (size_t j = 0; j < s.size(); ++j) inner += s[j] * t[j].pow(part);
        prod *= inner;
      }
      total += prod;
    }
    return total;
  }

  double eval(const std::vector<double>& s, const std::vector<double>& t) const {
    double total = 0.0;
    for (const auto& [c, mono] : terms_) {
      double prod = c.to_double();
      for (unsigned part : mono) {
        double inner = 0.0;
        for (size_t j = 0; j < s.size(); ++j)
          inner += s[j] * std::pow(t[j], static_cast<double>(part));
        prod *= inner;
      }
      total += prod;
    }
    return total;
  }

 private:
  unsigned blocks_;
  std::vector<std::pair<Rational, Monomial>> terms_;
};

// f evaluated at the point whose distinct values and multiplicities are given;
// normalized power sums are taken with n = total multiplicity.
inline Rational power_mean_value(
    const SymmetricPolynomial& f,
    const std::vector<std::pair<Rational, unsigned long>>& spectrum) {
  if (f.basis() != Basis::PowerSum)
    throw std::invalid_argument("power_mean_value: expected a power-sum polynomial");
  unsigned long n = 0;
  for (const auto& [v, m] : spectrum) {
    (void)v;
    n += m;
  }
  if (n == 0) throw std::invalid_argument("power_mean_value: empty spectrum");
  unsigned deg = f.degree();
  std::vector<Rational> q;
  Rational nn(Integer(n), Integer(1));
  for (unsigned a = 1; a <= deg; ++a) {
    Rational pa(0);
    for (const auto& [v, m] : spectrum) pa += Rational(Integer(m), Integer(1)) * v.pow(a);
    q.push_back(pa / nn);
  }
  return f.eval_symbols(q);
}

// Fixed-n reduction: minimizing f over R^n is equivalent to minimizing the
// weighted forms below, one per composition of n into at most kappa positive
// parts (the multiplicities of the distinct coordinate values).
struct FixedNReduction {
  PhiFunction phi;
  unsigned long n = 0;
  std::vector<std::vector<unsigned long>> multiplicity_lists;

  Rational eval(size_t problem, const std::vector<Rational>& x) const {
    const auto& alpha = multiplicity_lists.at(problem);
    if (x.size() != alpha.size())
      throw std::invalid_argument("FixedNReduction::eval: wrong number of block values");
    Rational nn(Integer(n), Integer(1));
    std::vector<Rational> s;
    s.reserve(alpha.size());
    for (unsigned long a : alpha) s.push_back(Rational(Integer(a), Integer(1)) / nn);
    return phi.eval(s, x);
  }

  double eval(size_t problem, const std::vector<double>& x) const {
    const auto& alpha = multiplicity_lists.at(problem);
    std::vector<double> s;
    s.reserve(alpha.size());
    for (unsigned long a : alpha)
      s.push_back(static_cast<double>(a) / static_cast<double>(n));
    return phi.eval(s, x);
  }
};

namespace detail {

inline void compositions_of(unsigned long n, unsigned parts,
                            std::vector<unsigned long>& cur,
                            std::vector<std::vector<unsigned long>>& out) {
  if (parts == 1) {
    if (n >= 1) {
      cur.push_back(n);
      out.push_back(cur);
      cur.pop_back();
    }
    return;
  }
  for (unsigned long first = 1; first + (parts - 1) <= n; ++first) {
    cur.push_back(first);
    compositions_of(n - first, parts - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace detail

inline FixedNReduction reduce_fixed_n(const SymmetricPolynomial& f, unsigned long n) {
  if (n == 0) throw std::invalid_argument("reduce_fixed_n: n must be >= 1");
  FixedNReduction red{PhiFunction(f), n, {}};
  unsigned kappa = red.phi.blocks();
  unsigned long jmax = std::min<unsigned long>(kappa, n);
  std::vector<unsigned long> cur;
  for (unsigned long j = 1; j <= jmax; ++j)
    detail::compositions_of(n, static_cast<unsigned>(j), cur, red.multiplicity_lists);
  return red;
}

enum class PowerMeanVerdictKind {
  Counterexample,           // exact rational point with a certified negative value
  NumericallyNonnegative,   // search found nothing below -tolerance
  Inconclusive              // numeric negativity seen but exact certification failed
};

inline const char* to_string(PowerMeanVerdictKind k) {
  switch (k) {
    case PowerMeanVerdictKind::Counterexample: return "Counterexample";
    case PowerMeanVerdictKind::NumericallyNonnegative: return "NumericallyNonnegative";
    case PowerMeanVerdictKind::Inconclusive: return "Inconclusive";
  }
  return "?";
}

struct PowerMeanWitness {
  std::vector<Rational> s;  // exact weights on the simplex
  std::vector<Rational> t;  // exact block values
  Rational value;           // Phi(s, t) < 0, certified
  unsigned long realized_n = 0;
  std::vector<std::pair<Rational, unsigned long>> spectrum;  // value, multiplicity
};

struct PowerMeanVerdict {
  PowerMeanVerdictKind kind = PowerMeanVerdictKind::NumericallyNonnegative;
  double numeric_min = 0.0;
  std::vector<double> min_s, min_t;
  std::optional<PowerMeanWitness> witness;
};

struct PowerMeanOptions {
  unsigned starts = 64;         // search restarts per box stage
  double box_radius = 10.0;     // block values confined to [-R, R]; one retry at 10R
  unsigned seed = 2024;
  double tolerance = 1e-9;      // negativity threshold for the numeric phase
};

namespace detail {

struct PhiSearchPoint {
  double value;
  std::vector<double> s, t;
};

inline PhiSearchPoint phi_search(const PhiFunction& phi, double radius, unsigned starts,
                                 unsigned seed) {
  const unsigned d = phi.blocks();
  auto objective = [&](const std::vector<double>& z) {
    std::vector<double> s(z.begin(), z.begin() + d), t(z.begin() + d, z.end());
    return phi.eval(s, t);
  };
  auto project = [&](std::vector<double>& z) {
    std::vector<double> s(z.begin(), z.begin() + d);
    project_to_simplex(s);
    std::copy(s.begin(), s.end(), z.begin());
    for (unsigned j = 0; j < d; ++j)
      z[d + j] = std::clamp(z[d + j], -radius, radius);
  };

  std::vector<std::vector<double>> start_list;
  std::vector<double> uniform(d, 1.0 / d);
  // Sign patterns on unit block values cover the sign structure of minima.
  unsigned patterns = d <= 6 ? (1u << d) : 64u;
  for (unsigned mask = 0; mask < patterns; ++mask) {
    std::vector<double> t(d);
    for (unsigned j = 0; j < d; ++j) t[j] = (mask >> j) & 1u ? -1.0 : 1.0;
    std::vector<double> z = uniform;
    z.insert(z.end(), t.begin(), t.end());
    start_list.push_back(std::move(z));
  }
  {
    std::vector<double> ramp(d), nramp(d);
    for (unsigned j = 0; j < d; ++j) {
      ramp[j] = static_cast<double>(j + 1);
      nramp[j] = -static_cast<double>(j + 1);
    }
    for (const auto& t : {ramp, nramp}) {
      std::vector<double> z = uniform;
      z.insert(z.end(), t.begin(), t.end());
      start_list.push_back(std::move(z));
    }
  }
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> box(-radius, radius);
  std::exponential_distribution<double> expd(1.0);
  while (start_list.size() < starts) {
    std::vector<double> s(d), t(d);
    double tot = 0.0;
    for (unsigned j = 0; j < d; ++j) {
      s[j] = expd(rng) + 1e-12;
      tot += s[j];
    }
    for (unsigned j = 0; j < d; ++j) s[j] /= tot;
    for (unsigned j = 0; j < d; ++j) t[j] = box(rng);
    std::vector<double> z = std::move(s);
    z.insert(z.end(), t.begin(), t.end());
    start_list.push_back(std::move(z));
  }

  PhiSearchPoint best{std::numeric_limits<double>::infinity(), {}, {}};
  NelderMeadOptions opt;
  opt.max_iterations = 800;
  for (const auto& z0 : start_list) {
    auto res = nelder_mead(objective, project, z0, opt);
    if (res.value < best.value) {
      best.value = res.value;
      best.s.assign(res.x.begin(), res.x.begin() + d);
      best.t.assign(res.x.begin() + d, res.x.end());
    }
  }
  return best;
}

// Snap doubles to nearby rationals, preferring small denominators; the
// simplex sum constraint is restored on the largest weight.
inline std::optional<std::pair<std::vector<Rational>, std::vector<Rational>>>
snap_candidate(const std::vector<double>& s, const std::vector<double>& t, double eps) {
  std::vector<Rational> rs, rt;
  Rational sum(0);
  size_t top = 0;
  for (size_t i = 0; i < s.size(); ++i)
    if (s[i] > s[top]) top = i;
  for (size_t i = 0; i < s.size(); ++i) {
    double lo = std::max(0.0, s[i] - eps), hi = std::min(1.0, s[i] + eps);
    if (lo > hi) return std::nullopt;
    Rational r =
        Rational::simplest_between(Rational::from_double(lo), Rational::from_double(hi));
    rs.push_back(r);
    sum += r;
  }
  rs[top] += Rational(1) - sum;
  if (rs[top].sign() < 0) return std::nullopt;
  for (size_t i = 0; i < t.size(); ++i) {
    double scale = std::max(1.0, std::abs(t[i]));
    Rational lo = Rational::from_double(t[i] - eps * scale);
    Rational hi = Rational::from_double(t[i] + eps * scale);
    rt.push_back(Rational::simplest_between(lo, hi));
  }
  return std::make_pair(std::move(rs), std::move(rt));
}

}  // namespace detail

// All-n decision procedure: numeric descent over (s, t), then exact
// certification of any negative value found by rounding to rational points and
// re-evaluating Phi exactly.  A certified negative point is realized as a
// finite instance via a common denominator n of the weights.
inline PowerMeanVerdict check_power_mean_all_n(const SymmetricPolynomial& f,
                                               const PowerMeanOptions& options = {}) {
  PhiFunction phi(f);
  const unsigned d = phi.blocks();

  bool homogeneous = true;
  {
    std::optional<unsigned> deg;
    for (const auto& [mono, c] : f.terms()) {
      (void)c;
      unsigned dm = monomial_degree(mono);
      if (!deg)
        deg = dm;
      else if (*deg != dm)
        homogeneous = false;
    }
  }

  PowerMeanVerdict verdict;
  detail::PhiSearchPoint best{std::numeric_limits<double>::infinity(), {}, {}};
  for (int stage = 0; stage < 2; ++stage) {
    double radius = stage == 0 ? options.box_radius : options.box_radius * 10.0;
    auto found = detail::phi_search(phi, radius, options.starts,
                                    options.seed + static_cast<unsigned>(stage));
    if (found.value < best.value) best = found;
    if (best.value < -options.tolerance) break;
  }
  verdict.numeric_min = best.value;
  verdict.min_s = best.s;
  verdict.min_t = best.t;

  if (!(best.value < -options.tolerance)) {
    verdict.kind = PowerMeanVerdictKind::NumericallyNonnegative;
    return verdict;
  }

  // Certification.  For homogeneous f the block values can be rescaled by
  // 1/max|t| without changing the sign, which lands on far simpler rationals.
  std::vector<double> t_scaled = best.t;
  if (homogeneous) {
    double m = 0.0;
    for (double v : t_scaled) m = std::max(m, std::abs(v));
    if (m > 0)
      for (double& v : t_scaled) v /= m;
  }
  const double ladder[] = {0.25, 1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6, 1e-7, 1e-8, 0.0};
  for (double eps : ladder) {
    std::optional<std::pair<std::vector<Rational>, std::vector<Rational>>> cand;
    if (eps > 0.0) {
      cand = detail::snap_candidate(best.s, t_scaled, eps);
    } else {
      // Exact dyadic fallback: certify the numeric point itself.
      std::vector<Rational> rs, rt;
      Rational sum(0);
      for (double v : best.s) {
        Rational r = Rational::from_double(std::max(0.0, v));
        rs.push_back(r);
        sum += r;
      }
      if (sum.is_zero()) continue;
      for (auto& r : rs) r /= sum;
      for (double v : t_scaled) rt.push_back(Rational::from_double(v));
      cand = std::make_pair(std::move(rs), std::move(rt));
    }
    if (!cand) continue;
    auto [rs, rt] = *cand;
    // Canonical block order: ascending block values (the blocks are unordered).
    {
      std::vector<size_t> idx(rs.size());
      for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
      std::sort(idx.begin(), idx.end(),
                [&](size_t a, size_t b) { return rt[a] < rt[b]; });
      std::vector<Rational> rs2, rt2;
      for (size_t i : idx) {
        rs2.push_back(rs[i]);
        rt2.push_back(rt[i]);
      }
      rs = std::move(rs2);
      rt = std::move(rt2);
    }
    Rational value = phi.eval(rs, rt);
    if (value.sign() >= 0) continue;

    PowerMeanWitness w;
    w.s = rs;
    w.t = rt;
    w.value = value;
    Integer n(1);
    for (const auto& r : rs) {
      Integer den = r.den();
      mpz_lcm(n.get_mpz_t(), n.get_mpz_t(), den.get_mpz_t());
    }
    w.realized_n = n.get_ui();
    for (size_t j = 0; j < rs.size(); ++j) {
      Rational alpha = rs[j] * Rational(n, Integer(1));
      if (alpha.is_zero()) continue;
      w.spectrum.emplace_back(rt[j], alpha.num().get_ui());
    }
    verdict.kind = PowerMeanVerdictKind::Counterexample;
    verdict.witness = std::move(w);
    return verdict;
  }

  verdict.kind = PowerMeanVerdictKind::Inconclusive;
  return verdict;
}

}  // namespace vmc
