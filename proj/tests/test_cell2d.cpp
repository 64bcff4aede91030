#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "vmc/cell.hpp"
#include "vmc/cell2d.hpp"

using namespace vmc;

TEST_CASE("lower arcs run between consecutive reciprocal points") {
  for (unsigned long k = 1; k <= 50; ++k) {
    Arc a = Arc::lower(k);
    long kl = static_cast<long>(k);
    CellPoint lo = arc_eval(a, a.t_lo());
    CellPoint hi = arc_eval(a, a.t_hi());
    CHECK(lo.coords()[0] == Rational(1, kl + 1));
    CHECK(lo.coords()[1] == Rational(1, (kl + 1) * (kl + 1)));
    CHECK(hi.coords()[0] == Rational(1, kl));
    CHECK(hi.coords()[1] == Rational(1, kl * kl));
    CHECK(a.weight() == k);
  }
}

TEST_CASE("upper arcs run from the corner of mass one to the reciprocal point") {
  for (unsigned long n = 2; n <= 20; ++n) {
    Arc a = Arc::upper(n);
    long nl = static_cast<long>(n);
    CellPoint lo = arc_eval(a, a.t_lo());
    CellPoint hi = arc_eval(a, a.t_hi());
    CHECK(lo.coords()[0] == Rational(1));
    CHECK(lo.coords()[1] == Rational(1));
    CHECK(hi.coords()[0] == Rational(1, nl));
    CHECK(hi.coords()[1] == Rational(1, nl * nl));
    CHECK(a.weight() == n - 1);
  }
}

TEST_CASE("arc slopes at junctions follow the closed formulas") {
  for (unsigned long k = 1; k <= 50; ++k) {
    Arc a = Arc::lower(k);
    long kl = static_cast<long>(k);
    CHECK(arc_slope(a, a.t_lo()) == Rational(3, kl + 1));
    CHECK(arc_slope(a, a.t_hi()) == Rational(3, 2 * kl));
  }
  for (unsigned long n = 3; n <= 20; ++n) {
    Arc a = Arc::upper(n);
    long nl = static_cast<long>(n);
    CHECK(arc_slope(a, a.t_lo()) == Rational(3, 2));
    CHECK(arc_slope(a, a.t_hi()) == Rational(3, nl));
  }
}

TEST_CASE("singular points at n = 5: interior corners and two boundary cusps") {
  auto sps = singular_points(5);
  REQUIRE(sps.size() == 5);

  CHECK(sps[0].k == 1);
  CHECK(sps[0].kind == SingularKind::Cusp);
  CHECK(sps[0].point.coords()[0] == Rational(1));
  CHECK(sps[0].slope_small_x == Rational(3, 2));
  CHECK(sps[0].slope_large_x == Rational(3, 2));

  for (unsigned long k = 2; k <= 4; ++k) {
    const auto& sp = sps[k - 1];
    long kl = static_cast<long>(k);
    CHECK(sp.k == k);
    CHECK(sp.kind == SingularKind::Corner);
    CHECK(sp.point.coords()[0] == Rational(1, kl));
    CHECK(sp.point.coords()[1] == Rational(1, kl * kl));
    CHECK(sp.slope_small_x == Rational(3, 2 * kl));
    CHECK(sp.slope_large_x == Rational(3, kl));
  }

  CHECK(sps[4].k == 5);
  CHECK(sps[4].kind == SingularKind::Cusp);
  CHECK(sps[4].point.coords()[0] == Rational(1, 5));
  CHECK(sps[4].slope_small_x == Rational(3, 5));
  CHECK(sps[4].slope_large_x == Rational(3, 5));
}

TEST_CASE("boundary arcs traverse the cell counterclockwise") {
  auto arcs = boundary_arcs(Domain2::finite(4));
  REQUIRE(arcs.size() == 4);
  CHECK(arcs[0].label() == "L3");
  CHECK(arcs[1].label() == "L2");
  CHECK(arcs[2].label() == "L1");
  CHECK(arcs[3].label() == "U");
  // endpoints chain: each arc ends where the traversal continues
  CellPoint end0 = arc_eval(arcs[0], arcs[0].t_hi());
  CellPoint start1 = arc_eval(arcs[1], arcs[1].t_lo());
  CHECK(end0 == start1);
  // the upper arc is traversed from (1,1) back toward (1/4, 1/16)
  CHECK(arc_eval(arcs[3], arcs[3].t_lo()).coords()[0] == Rational(1));
  CHECK(arc_eval(arcs[3], arcs[3].t_hi()).coords()[0] == Rational(1, 4));
}

TEST_CASE("membership on frozen sample points at n = 3") {
  Domain2 dom = Domain2::finite(3);
  CHECK(membership(CellPoint({Rational(9, 25), Rational(17, 125)}), dom) ==
        Membership::Boundary);
  CHECK(membership(CellPoint({Rational(1, 2), Rational(7, 25)}), dom) ==
        Membership::Inside);
  CHECK(membership(CellPoint({Rational(1, 2), Rational(1, 3)}), dom) ==
        Membership::Outside);
  CHECK(membership(CellPoint({Rational(2), Rational(1)}), dom) == Membership::Outside);
  // vertices lie on the boundary
  CHECK(membership(CellPoint({Rational(1), Rational(1)}), dom) == Membership::Boundary);
  CHECK(membership(CellPoint({Rational(1, 3), Rational(1, 9)}), dom) ==
        Membership::Boundary);
}

TEST_CASE("rational points on every arc are classified as boundary") {
  for (unsigned long n = 3; n <= 8; ++n) {
    Domain2 dom = Domain2::finite(n);
    for (const auto& a : boundary_arcs(dom)) {
      Rational span = a.t_hi() - a.t_lo();
      for (int i = 1; i <= 3; ++i) {
        Rational t = a.t_lo() + Rational(i, 4) * span;
        CellPoint q = arc_eval(a, t);
        CHECK(membership(q, dom) == Membership::Boundary);
        // strictly above the fiber or strictly below it, the verdict flips
        Rational x = q.coords()[0];
        auto fi = fiber_interval(x, dom);
        CellPoint above({x, Rational::from_double(fi.upper.value()) + Rational(1, 100)});
        CellPoint below({x, Rational::from_double(fi.lower.value()) - Rational(1, 100)});
        CHECK(membership(above, dom) == Membership::Outside);
        CHECK(membership(below, dom) == Membership::Outside);
        if (fi.upper.value() - fi.lower.value() > 0.02) {
          Rational mid = Rational::from_double((fi.upper.value() + fi.lower.value()) / 2);
          CHECK(membership(CellPoint({x, mid}), dom) == Membership::Inside);
        }
      }
    }
  }
}

TEST_CASE("fiber over 1/2 at n = 3 is [1/4, 11/36]") {
  auto fi = fiber_interval(Rational(1, 2), Domain2::finite(3));
  REQUIRE(fi.lower.exact.has_value());
  REQUIRE(fi.upper.exact.has_value());
  CHECK(*fi.lower.exact == Rational(1, 4));
  CHECK(*fi.upper.exact == Rational(11, 36));
}

TEST_CASE("fiber at the left edge of the n = 3 cell degenerates to a point") {
  auto fi = fiber_interval(Rational(1, 3), Domain2::finite(3));
  REQUIRE(fi.lower.exact.has_value());
  REQUIRE(fi.upper.exact.has_value());
  CHECK(*fi.lower.exact == Rational(1, 9));
  CHECK(*fi.upper.exact == Rational(1, 9));
}

TEST_CASE("limit fiber over 1/2 has an irrational upper bound") {
  auto fi = fiber_interval(Rational(1, 2), Domain2::limit());
  REQUIRE(fi.lower.exact.has_value());
  CHECK(*fi.lower.exact == Rational(1, 4));
  CHECK_FALSE(fi.upper.exact.has_value());
  CHECK(fi.upper.value() == Catch::Approx(std::pow(0.5, 1.5)).epsilon(1e-12));
}

TEST_CASE("limit fiber over a square abscissa is exact on both ends") {
  auto fi = fiber_interval(Rational(1, 4), Domain2::limit());
  REQUIRE(fi.upper.exact.has_value());
  CHECK(*fi.upper.exact == Rational(1, 8));
}

TEST_CASE("fiber endpoints agree with membership transitions") {
  Domain2 dom = Domain2::finite(4);
  for (long i = 1; i <= 7; ++i) {
    Rational a(1, 4);
    a += Rational(i, 10) * Rational(3, 4);
    if (a > Rational(1)) break;
    auto fi = fiber_interval(a, dom);
    if (!fi.lower.exact || !fi.upper.exact) continue;
    Rational lo = *fi.lower.exact, hi = *fi.upper.exact;
    CHECK(membership(CellPoint({a, lo}), dom) == Membership::Boundary);
    CHECK(membership(CellPoint({a, hi}), dom) == Membership::Boundary);
    if (lo < hi) {
      Rational mid = (lo + hi) / Rational(2);
      CHECK(membership(CellPoint({a, mid}), dom) == Membership::Inside);
    }
    CHECK(membership(CellPoint({a, hi + Rational(1, 50)}), dom) == Membership::Outside);
  }
}

TEST_CASE("closed-form areas match the frozen exact values") {
  auto a3 = area(Domain2::finite(3), AreaMode::ClosedForm);
  auto a4 = area(Domain2::finite(4), AreaMode::ClosedForm);
  REQUIRE(a3.exact.has_value());
  REQUIRE(a4.exact.has_value());
  CHECK(*a3.exact == Rational(1, 80));
  CHECK(*a4.exact == Rational(43, 2160));
}

TEST_CASE("the boundary integral reproduces the closed form for n = 3..20") {
  for (unsigned long n = 3; n <= 20; ++n) {
    auto c = area(Domain2::finite(n), AreaMode::ClosedForm);
    auto g = area(Domain2::finite(n), AreaMode::GreenNumeric);
    CHECK(std::abs(c.value - g.value) < 1e-8);
  }
}

TEST_CASE("the limit area approaches the zeta-value constant") {
  auto g = area(Domain2::limit(), AreaMode::GreenNumeric, 10000);
  CHECK(std::abs(g.value - 0.044287716368863215) < 1e-6);
  auto c = area(Domain2::limit(), AreaMode::ClosedForm);
  CHECK(std::abs(c.value - 0.044287716368863215) < 1e-12);
}

TEST_CASE("finite areas increase with n toward the limit value") {
  double prev = 0.0;
  for (unsigned long n = 3; n <= 30; ++n) {
    auto c = area(Domain2::finite(n), AreaMode::ClosedForm);
    CHECK(c.value > prev);
    prev = c.value;
  }
  CHECK(prev < 0.044287716368863215);
}

TEST_CASE("the coordinate scaling flow stays inside the limit cell") {
  std::vector<CellPoint> pts{CellPoint({Rational(1, 2), Rational(7, 25)}),
                             CellPoint({Rational(9, 25), Rational(17, 125)}),
                             CellPoint({Rational(1), Rational(1)}),
                             CellPoint({Rational(3, 4), Rational(5, 8)})};
  for (const auto& q : pts) {
    REQUIRE(membership(q, Domain2::limit()) != Membership::Outside);
    for (long j = 0; j <= 10; ++j) {
      CellPoint scaled = scale_flow(q, Rational(j, 10));
      CHECK(membership(scaled, Domain2::limit()) != Membership::Outside);
    }
  }
}

TEST_CASE("exact arc evaluation refuses irrational limit parameters") {
  Arc ul = Arc::upper_limit();
  CHECK_THROWS_AS(arc_eval(ul, Rational(1, 2)), std::domain_error);
  CellPoint p = arc_eval(ul, Rational(1, 4));
  CHECK(p.coords()[0] == Rational(1, 4));
  CHECK(p.coords()[1] == Rational(1, 8));
  CHECK_THROWS_AS(arc_slope(ul, Rational(1, 4)), std::invalid_argument);
}

TEST_CASE("fiber queries outside the abscissa range are rejected") {
  CHECK_THROWS_AS(fiber_interval(Rational(1, 5), Domain2::finite(3)),
                  std::invalid_argument);
  CHECK_THROWS_AS(fiber_interval(Rational(2), Domain2::finite(3)),
                  std::invalid_argument);
  CHECK_THROWS_AS(fiber_interval(Rational(0), Domain2::limit()), std::invalid_argument);
  CHECK_THROWS_AS(fiber_interval(Rational(-1, 2), Domain2::limit()),
                  std::invalid_argument);
}
