#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "vmc/symcore.hpp"

using namespace vmc;

namespace {

// Reference power sum computed directly from the list of values.
Rational naive_power_sum(const std::vector<Rational>& xs, unsigned a) {
  Rational s(0);
  for (const auto& x : xs) s += x.pow(static_cast<long>(a));
  return s;
}

// Reference elementary symmetric values via the recurrence
// prod (1 + x_i T) = sum e_k T^k.
std::vector<Rational> naive_elementary(const std::vector<Rational>& xs, unsigned k_max) {
  std::vector<Rational> e(k_max + 1, Rational(0));
  e[0] = Rational(1);
  for (const auto& x : xs)
    for (unsigned k = k_max; k >= 1; --k) e[k] += x * e[k - 1];
  return {e.begin() + 1, e.end()};
}

std::vector<Rational> random_point(std::mt19937& rng, size_t len) {
  std::uniform_int_distribution<long> num(0, 6), den(1, 5);
  std::vector<Rational> xs;
  for (size_t i = 0; i < len; ++i) xs.emplace_back(num(rng), den(rng));
  return xs;
}

}  // namespace

TEST_CASE("compressed points sort values and merge multiplicities") {
  auto p = CompressedPoint::from_vector(
      {Rational(1, 2), Rational(1, 4), Rational(1, 4), Rational(0)});
  CHECK(p.zero_count() == 1);
  REQUIRE(p.entries().size() == 2);
  CHECK(p.entries()[0].first == Rational(1, 4));
  CHECK(p.entries()[0].second == 2);
  CHECK(p.entries()[1].first == Rational(1, 2));
  CHECK(p.entries()[1].second == 1);
  unsigned long support = 0;
  for (const auto& [v, m] : p.entries()) support += m;
  CHECK(p.zero_count() + support == 4);
}

TEST_CASE("power sums match the direct sum of powers") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    auto xs = random_point(rng, 1 + trial % 6);
    auto cp = CompressedPoint::from_vector(xs);
    for (unsigned a = 1; a <= 6; ++a) {
      CHECK(power_sum(xs, a) == naive_power_sum(xs, a));
      CHECK(eval_power_sum(cp, a) == naive_power_sum(xs, a));
    }
  }
}

TEST_CASE("elementary values match the generating-function recurrence") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    auto xs = random_point(rng, 1 + trial % 6);
    auto got = elementary_values(CompressedPoint::from_vector(xs),
                                 static_cast<unsigned>(xs.size()) + 2);
    auto want = naive_elementary(xs, static_cast<unsigned>(xs.size()) + 2);
    CHECK(got == want);
  }
}

TEST_CASE("the moment map at a uniform support gives pure powers") {
  for (unsigned long k = 1; k <= 12; ++k) {
    auto u = uniform_support_point(k, k + 3);
    for (unsigned a = 2; a <= 6; ++a) {
      Integer kk(k);
      Rational expect = Rational(1) / Rational(kk, Integer(1)).pow(static_cast<long>(a) - 1);
      CHECK(eval_power_sum(u, a) == expect);
    }
  }
}

TEST_CASE("moment vertices in both bases agree with direct evaluation") {
  for (unsigned long k = 1; k <= 8; ++k)
    for (unsigned d = 2; d <= 6; ++d) {
      auto u = uniform_support_point(k, k);
      CellPoint vp = moment_vertex(k, d, Basis::PowerSum);
      CellPoint ve = moment_vertex(k, d, Basis::Elementary);
      auto es = elementary_values(u, d);
      for (unsigned a = 2; a <= d; ++a) {
        CHECK(vp.coords()[a - 2] == eval_power_sum(u, a));
        CHECK(ve.coords()[a - 2] == es[a - 1]);
      }
    }
}

TEST_CASE("nu evaluation lists consecutive power sums") {
  auto xs = std::vector<Rational>{Rational(1, 2), Rational(1, 3), Rational(1, 6)};
  CellPoint img = nu_eval(CompressedPoint::from_vector(xs), standard_exponents(4));
  REQUIRE(img.coords().size() == 3);
  CHECK(img.coords()[0] == naive_power_sum(xs, 2));
  CHECK(img.coords()[1] == naive_power_sum(xs, 3));
  CHECK(img.coords()[2] == naive_power_sum(xs, 4));
}

TEST_CASE("polynomial arithmetic in a fixed basis") {
  auto p1 = SymmetricPolynomial::symbol(Basis::PowerSum, 1);
  auto p2 = SymmetricPolynomial::symbol(Basis::PowerSum, 2);
  auto f = p1 * p1 - Rational(2) * p2;
  CHECK(f.degree() == 2);
  CHECK(f.eval_symbols({Rational(3), Rational(5)}) == Rational(-1));
  auto g = f * f;
  CHECK(g.degree() == 4);
  CHECK(g.eval_symbols({Rational(3), Rational(5)}) == Rational(1));
  CHECK((f - f).is_zero());
  CHECK(f.pow(0).eval_symbols({Rational(3), Rational(5)}) == Rational(1));
  CHECK(f.pow(3).eval_symbols({Rational(3), Rational(5)}) == Rational(-1));
}

TEST_CASE("basis conversion reproduces the classical identities") {
  auto p2 = SymmetricPolynomial::symbol(Basis::PowerSum, 2);
  auto p3 = SymmetricPolynomial::symbol(Basis::PowerSum, 3);
  auto e1 = SymmetricPolynomial::symbol(Basis::Elementary, 1);
  auto e2 = SymmetricPolynomial::symbol(Basis::Elementary, 2);
  auto e3 = SymmetricPolynomial::symbol(Basis::Elementary, 3);

  CHECK(newton_convert(p2, Basis::Elementary) == e1 * e1 - Rational(2) * e2);
  CHECK(newton_convert(p3, Basis::Elementary) ==
        e1.pow(3) - Rational(3) * (e1 * e2) + Rational(3) * e3);
  CHECK(newton_convert(e2, Basis::PowerSum) ==
        Rational(1, 2) * (SymmetricPolynomial::symbol(Basis::PowerSum, 1).pow(2) -
                          SymmetricPolynomial::symbol(Basis::PowerSum, 2)));
}

TEST_CASE("basis conversion round-trips and preserves evaluation") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<long> cnum(-4, 4);
  std::uniform_int_distribution<unsigned> deg(1, 4);
  for (int trial = 0; trial < 30; ++trial) {
    auto f = SymmetricPolynomial::zero(Basis::PowerSum);
    for (int t = 0; t < 4; ++t) {
      Monomial m;
      unsigned entries = 1 + trial % 3;
      for (unsigned i = 0; i < entries; ++i) m.push_back(deg(rng));
      f.add_term(m, Rational(cnum(rng), 1));
    }
    auto g = newton_convert(f, Basis::Elementary);
    auto back = newton_convert(g, Basis::PowerSum);
    CHECK(back == f);

    auto xs = random_point(rng, 5);
    auto cp = CompressedPoint::from_vector(xs);
    std::vector<Rational> ps, es = elementary_values(cp, 16);
    for (unsigned a = 1; a <= 16; ++a) ps.push_back(power_sum(xs, a));
    CHECK(f.eval_symbols(ps) == g.eval_symbols(es));
  }
}

TEST_CASE("on the standard simplex the low-degree identities hold") {
  std::mt19937 rng(19);
  std::uniform_int_distribution<long> num(1, 9);
  for (int trial = 0; trial < 40; ++trial) {
    // random positive point normalized to sum 1
    std::vector<Rational> xs;
    Rational total(0);
    for (int i = 0; i < 4; ++i) {
      xs.emplace_back(num(rng), 1);
      total += xs.back();
    }
    for (auto& x : xs) x = x / total;
    Rational p2v = naive_power_sum(xs, 2), p3v = naive_power_sum(xs, 3);
    auto es = naive_elementary(xs, 3);
    CHECK(es[1] == (Rational(1) - p2v) / Rational(2));
    CHECK(es[2] == Rational(1, 6) - p2v / Rational(2) + p3v / Rational(3));
  }
}

TEST_CASE("monomials canonicalize to descending exponent order") {
  Monomial m{1, 3, 2};
  auto c = canonical_monomial(m);
  CHECK(c == Monomial{3, 2, 1});
  CHECK(monomial_degree(Monomial{3, 2, 1}) == 6);
}
