#pragma once

// The planar case d = 3: explicit boundary arcs of the cell for n points (and
// of its closure as n grows), exact membership tests, vertical fibers, area by
// closed form or by a Green's-theorem line integral, and the singular points
// of the boundary.

#include "vmc/symcore.hpp"

#include <array>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

namespace vmc {

// Either the cell for a fixed number of points n, or the closure of the union
// over all n.
struct Domain2 {
  unsigned long n = 0;  // 0 encodes the limit domain

  static Domain2 finite(unsigned long n) {
    if (n < 2) throw std::invalid_argument("Domain2: need n >= 2");
    return Domain2{n};
  }
  static Domain2 limit() { return Domain2{0}; }
  bool is_limit() const { return n == 0; }
};

// One boundary arc.  Lower(k): (k t^2 + (1-kt)^2, k t^3 + (1-kt)^3) for
// t in [1/(k+1), 1/k].  Upper(n): the same formulas with n-1 in place of k,
// t in [0, 1/n].  UpperLimit: (t, t^{3/2}) for t in [0, 1].
struct Arc {
  enum class Kind { Lower, Upper, UpperLimit };
  Kind kind;
  unsigned long index = 0;  // k for Lower, n for Upper, unused for UpperLimit

  static Arc lower(unsigned long k) {
    if (k < 1) throw std::invalid_argument("Arc::lower: need k >= 1");
    return Arc{Kind::Lower, k};
  }
  static Arc upper(unsigned long n) {
    if (n < 2) throw std::invalid_argument("Arc::upper: need n >= 2");
    return Arc{Kind::Upper, n};
  }
  static Arc upper_limit() { return Arc{Kind::UpperLimit, 0}; }

  Rational t_lo() const {
    switch (kind) {
      case Kind::Lower: return Rational(1, static_cast<long>(index + 1));
      default: return Rational(0);
    }
  }
  Rational t_hi() const {
    switch (kind) {
      case Kind::Lower: return Rational(1, static_cast<long>(index));
      case Kind::Upper: return Rational(1, static_cast<long>(index));
      default: return Rational(1);
    }
  }

  // Multiplier in the parametrization polynomials (k, or n-1 for the upper arc).
  unsigned long weight() const {
    return kind == Kind::Upper ? index - 1 : index;
  }

  std::string label() const {
    switch (kind) {
      case Kind::Lower: return "L" + std::to_string(index);
      case Kind::Upper: return "U";
      default: return "Ulim";
    }
  }
};

namespace detail {

inline Rational arc_x(unsigned long k, const Rational& t) {
  Rational u = Rational(1) - Rational(static_cast<long>(k)) * t;
  return Rational(static_cast<long>(k)) * t * t + u * u;
}
inline Rational arc_y(unsigned long k, const Rational& t) {
  Rational u = Rational(1) - Rational(static_cast<long>(k)) * t;
  return Rational(static_cast<long>(k)) * t * t * t + u * u * u;
}
inline double arc_x(unsigned long k, double t) {
  double u = 1.0 - static_cast<double>(k) * t;
  return static_cast<double>(k) * t * t + u * u;
}
inline double arc_y(unsigned long k, double t) {
  double u = 1.0 - static_cast<double>(k) * t;
  return static_cast<double>(k) * t * t * t + u * u * u;
}

}  // namespace detail

// Exact evaluation.  For the limit upper arc the parameter must be a perfect
// square (t = u^2 gives the exact point (u^2, u^3)); use arc_eval_f otherwise.
inline CellPoint arc_eval(const Arc& arc, const Rational& t) {
  if (t < arc.t_lo() || t > arc.t_hi())
    throw std::invalid_argument("arc_eval: parameter outside the arc domain");
  if (arc.kind == Arc::Kind::UpperLimit) {
    auto u = t.sqrt_exact();
    if (!u)
      throw std::domain_error("arc_eval: t^{3/2} irrational here; use arc_eval_f or a square t");
    return CellPoint({t, t * *u});
  }
  unsigned long k = arc.weight();
  return CellPoint({detail::arc_x(k, t), detail::arc_y(k, t)});
}

inline std::array<double, 2> arc_eval_f(const Arc& arc, double t) {
  double lo = arc.t_lo().to_double(), hi = arc.t_hi().to_double();
  if (t < lo - 1e-12 || t > hi + 1e-12)
    throw std::invalid_argument("arc_eval_f: parameter outside the arc domain");
  if (arc.kind == Arc::Kind::UpperLimit) return {t, std::pow(t, 1.5)};
  unsigned long k = arc.weight();
  return {detail::arc_x(k, t), detail::arc_y(k, t)};
}

// Tangent slope dy/dx along a polynomial arc: (3/2)(1 - (w-1) t) for weight w.
inline Rational arc_slope(const Arc& arc, const Rational& t) {
  if (arc.kind == Arc::Kind::UpperLimit)
    throw std::invalid_argument("arc_slope: use (3/2)sqrt(t) for the limit arc");
  if (t < arc.t_lo() || t > arc.t_hi())
    throw std::invalid_argument("arc_slope: parameter outside the arc domain");
  unsigned long w = arc.weight();
  return Rational(3, 2) * (Rational(1) - Rational(static_cast<long>(w) - 1) * t);
}

// Boundary arcs of the domain, in the counterclockwise traversal order used by
// the Green's-theorem integrator: lower arcs right-to-left index, then upper.
inline std::vector<Arc> boundary_arcs(const Domain2& dom, unsigned long limit_k_max = 32) {
  std::vector<Arc> arcs;
  if (dom.is_limit()) {
    for (unsigned long k = limit_k_max; k >= 1; --k) arcs.push_back(Arc::lower(k));
    arcs.push_back(Arc::upper_limit());
  } else {
    if (dom.n < 3)
      throw std::invalid_argument("boundary_arcs: need n >= 3 for a two-dimensional cell");
    for (unsigned long k = dom.n - 1; k >= 1; --k) arcs.push_back(Arc::lower(k));
    arcs.push_back(Arc::upper(dom.n));
  }
  return arcs;
}

// A bound that is exact when the inversion discriminant is a perfect square.
struct BoundValue {
  std::optional<Rational> exact;
  double approx = 0.0;

  double value() const { return exact ? exact->to_double() : approx; }

  static BoundValue of(const Rational& r) { return BoundValue{r, r.to_double()}; }
  static BoundValue of(double x) { return BoundValue{std::nullopt, x}; }
};

struct FiberInterval {
  BoundValue lower, upper;
};

namespace detail {

// Index k of the lower arc whose x-range contains a; exact reciprocals are
// assigned to the arc having a as its left endpoint.
inline unsigned long lower_arc_index(const Rational& a) {
  Rational inv = Rational(1) / a;
  Integer fl = inv.floor();
  unsigned long k = static_cast<unsigned long>(fl.get_ui());
  if (inv.is_integer() && k >= 2) return k - 1;
  return k;
}

// y-value on the arc of weight k over abscissa a, on the increasing branch
// (lower boundary) or the decreasing branch (upper boundary, weight n-1).
inline BoundValue invert_arc(unsigned long k, const Rational& a, bool increasing) {
  Rational kk(static_cast<long>(k));
  Rational disc = kk * kk - kk * (kk + Rational(1)) * (Rational(1) - a);
  if (disc.sign() < 0)
    throw std::logic_error("invert_arc: negative discriminant (abscissa out of range)");
  if (auto s = disc.sqrt_exact()) {
    Rational t = (increasing ? kk + *s : kk - *s) / (kk * (kk + Rational(1)));
    return BoundValue::of(arc_y(k, t));
  }
  double kf = static_cast<double>(k);
  double s = std::sqrt(disc.to_double());
  double t = (increasing ? kf + s : kf - s) / (kf * (kf + 1.0));
  return BoundValue::of(arc_y(k, t));
}

inline BoundValue upper_limit_bound(const Rational& a) {
  if (auto u = a.sqrt_exact()) return BoundValue::of(a * *u);  // a^{3/2} exactly
  return BoundValue::of(std::pow(a.to_double(), 1.5));
}

}  // namespace detail

// Vertical fiber {b : (a, b) in the cell} as [lower, upper].  Degenerates to a
// single point at a = 1 and (for finite n) at a = 1/n.
inline FiberInterval fiber_interval(const Rational& a, const Domain2& dom) {
  if (dom.is_limit()) {
    if (a.sign() <= 0 || a > Rational(1))
      throw std::invalid_argument("fiber_interval: need 0 < a <= 1 in the limit domain");
  } else {
    if (a < Rational(1, static_cast<long>(dom.n)) || a > Rational(1))
      throw std::invalid_argument("fiber_interval: need 1/n <= a <= 1");
  }
  unsigned long k = detail::lower_arc_index(a);
  FiberInterval fi;
  fi.lower = detail::invert_arc(k, a, /*increasing=*/true);
  fi.upper = dom.is_limit() ? detail::upper_limit_bound(a)
                            : detail::invert_arc(dom.n - 1, a, /*increasing=*/false);
  return fi;
}

enum class Membership { Inside, Boundary, Outside };

inline const char* to_string(Membership m) {
  switch (m) {
    case Membership::Inside: return "Inside";
    case Membership::Boundary: return "Boundary";
    default: return "Outside";
  }
}

// Classifies q = (a, b) against the cell.  Exact bounds give exact verdicts;
// when an inversion falls back to floating point, `tol` is the boundary band.
inline Membership membership(const CellPoint& q, const Domain2& dom, double tol = 1e-9) {
  if (q.coords().size() != 2)
    throw std::invalid_argument("membership: expected a planar point (two coordinates)");
  const Rational& a = q.coords()[0];
  const Rational& b = q.coords()[1];
  if (a.sign() < 0 || b.sign() < 0)
    throw std::invalid_argument("membership: coordinates must be nonnegative");

  if (dom.is_limit()) {
    if (a > Rational(1)) return Membership::Outside;
    if (a.is_zero()) return b.is_zero() ? Membership::Boundary : Membership::Outside;
  } else {
    if (a > Rational(1) || a < Rational(1, static_cast<long>(dom.n)))
      return Membership::Outside;
  }

  FiberInterval fi = fiber_interval(a, dom);
  bool on_boundary = false;
  // Lower bound.
  if (fi.lower.exact) {
    if (b < *fi.lower.exact) return Membership::Outside;
    if (b == *fi.lower.exact) on_boundary = true;
  } else {
    double bf = b.to_double();
    if (bf < fi.lower.approx - tol) return Membership::Outside;
    if (bf <= fi.lower.approx + tol) on_boundary = true;
  }
  // Upper bound.
  if (fi.upper.exact) {
    if (b > *fi.upper.exact) return Membership::Outside;
    if (b == *fi.upper.exact) on_boundary = true;
  } else {
    double bf = b.to_double();
    if (bf > fi.upper.approx + tol) return Membership::Outside;
    if (bf >= fi.upper.approx - tol) on_boundary = true;
  }
  return on_boundary ? Membership::Boundary : Membership::Inside;
}

enum class AreaMode { ClosedForm, GreenNumeric };

struct AreaResult {
  std::optional<Rational> exact;  // set for the finite closed form
  double value = 0.0;
};

namespace detail {

// 8-point Gauss-Legendre quadrature of f over [lo, hi]; exact through
// polynomial degree 15, which covers every arc integrand here.
template <typename F>
double gauss_legendre(F&& f, double lo, double hi) {
  static const double xs[4] = {0.18343464249564980, 0.52553240991632899,
                               0.79666647741362674, 0.96028985649753623};
  static const double ws[4] = {0.36268378337836198, 0.31370664587788729,
                               0.22238103445337447, 0.10122853629037626};
  double c = 0.5 * (lo + hi), h = 0.5 * (hi - lo);
  double s = 0.0;
  for (int i = 0; i < 4; ++i)
    s += ws[i] * (f(c - h * xs[i]) + f(c + h * xs[i]));
  return s * h;
}

// Green's-theorem contribution (1/2) int (x y' - y x') dt of a polynomial arc
// of weight k traversed with t increasing over [lo, hi].
inline double green_arc(unsigned long k, double lo, double hi) {
  double kf = static_cast<double>(k);
  auto integrand = [kf](double t) {
    double u = 1.0 - kf * t;
    double x = kf * t * t + u * u;
    double y = kf * t * t * t + u * u * u;
    double xp = 2.0 * kf * t - 2.0 * kf * u;
    double yp = 3.0 * kf * t * t - 3.0 * kf * u * u;
    return 0.5 * (x * yp - y * xp);
  };
  return gauss_legendre(integrand, lo, hi);
}

}  // namespace detail

// Area of the cell.  ClosedForm: (1/10) sum_{k=2}^{n-1} (1/k^2 - 1/k^3)
// exactly for finite n, and its zeta-value limit as a double.  GreenNumeric:
// counterclockwise boundary line integral by Gauss-Legendre quadrature (the
// limit domain truncates the lower arc chain at `limit_k_max` and closes with
// a chord through the origin, which contributes nothing).
inline AreaResult area(const Domain2& dom, AreaMode mode, unsigned long limit_k_max = 10000) {
  if (!dom.is_limit() && dom.n < 3)
    throw std::invalid_argument("area: need n >= 3 for a two-dimensional cell");
  AreaResult r;
  if (mode == AreaMode::ClosedForm) {
    if (dom.is_limit()) {
      const double zeta2 = 1.6449340668482264;  // pi^2/6
      const double zeta3 = 1.2020569031595943;
      r.value = (zeta2 - zeta3) / 10.0;
    } else {
      Rational s;
      for (unsigned long k = 2; k + 1 <= dom.n; ++k) {
        Rational kk(static_cast<long>(k));
        s += Rational(1) / (kk * kk) - Rational(1) / (kk * kk * kk);
      }
      r.exact = Rational(1, 10) * s;
      r.value = r.exact->to_double();
    }
    return r;
  }
  double total = 0.0;
  unsigned long top = dom.is_limit() ? limit_k_max : dom.n - 1;
  for (unsigned long k = top; k >= 1; --k)
    total += detail::green_arc(k, 1.0 / static_cast<double>(k + 1),
                               1.0 / static_cast<double>(k));
  if (dom.is_limit()) {
    // Upper limit arc in the square parameter: (u^2, u^3), traversed u: 1 -> 0;
    // integrand (1/2)(x y' - y x') = u^4 / 2.
    total += detail::gauss_legendre([](double u) { return 0.5 * u * u * u * u; }, 1.0, 0.0);
  } else {
    unsigned long w = dom.n - 1;
    // Upper arc traversed with t increasing 0 -> 1/n runs from (1,1) leftward.
    total += detail::green_arc(w, 0.0, 1.0 / static_cast<double>(dom.n));
  }
  r.value = total;
  return r;
}

enum class SingularKind { Corner, Cusp };

// Junction (1/k, 1/k^2) of the boundary with one-sided tangent slopes:
// slope_small_x from the arc on the small-x side, slope_large_x from the arc
// on the large-x side.  Interior junctions are genuine corners (3/(2k) vs
// 3/k); the extreme points k = 1 and k = n have matching slopes (cusps).
struct SingularPoint {
  unsigned long k = 0;
  CellPoint point{{Rational(0), Rational(0)}};
  Rational slope_small_x;
  Rational slope_large_x;
  SingularKind kind = SingularKind::Corner;
};

inline std::vector<SingularPoint> singular_points(unsigned long n) {
  if (n < 3) throw std::invalid_argument("singular_points: need n >= 3");
  std::vector<SingularPoint> out;
  for (unsigned long k = 1; k <= n; ++k) {
    SingularPoint sp;
    sp.k = k;
    long kl = static_cast<long>(k);
    sp.point = CellPoint({Rational(1, kl), Rational(1, kl * kl)});
    if (k == 1) {
      sp.slope_small_x = sp.slope_large_x = Rational(3, 2);
      sp.kind = SingularKind::Cusp;
    } else if (k == n) {
      sp.slope_small_x = sp.slope_large_x = Rational(3, static_cast<long>(n));
      sp.kind = SingularKind::Cusp;
    } else {
      sp.slope_small_x = Rational(3, 2 * kl);  // right endpoint of Lower(k)
      sp.slope_large_x = Rational(3, kl);      // left endpoint of Lower(k-1)
      sp.kind = SingularKind::Corner;
    }
    out.push_back(std::move(sp));
  }
  return out;
}

}  // namespace vmc
