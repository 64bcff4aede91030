#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <functional>
#include <set>
#include <vector>

#include "vmc/gale.hpp"

using namespace vmc;

namespace {

// Independent evenness oracle: a subset S of {1..n} qualifies iff every
// maximal run of consecutive elements of S that touches neither endpoint 1
// nor endpoint n has even length.
bool evenness_oracle(unsigned long n, const std::vector<unsigned long>& sorted) {
  size_t i = 0;
  while (i < sorted.size()) {
    size_t j = i;
    while (j + 1 < sorted.size() && sorted[j + 1] == sorted[j] + 1) ++j;
    size_t run = j - i + 1;
    bool touches = sorted[i] == 1 || sorted[j] == n;
    if (!touches && run % 2 != 0) return false;
    i = j + 1;
  }
  return true;
}

std::vector<std::vector<unsigned long>> subsets_of_size(unsigned long n, unsigned k) {
  std::vector<std::vector<unsigned long>> out;
  std::vector<unsigned long> cur;
  std::function<void(unsigned long)> rec = [&](unsigned long start) {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (unsigned long v = start; v <= n; ++v) {
      cur.push_back(v);
      rec(v + 1);
      cur.pop_back();
    }
  };
  rec(1);
  return out;
}

}  // namespace

TEST_CASE("evenness test agrees with the run-length oracle on every subset") {
  for (unsigned long n = 2; n <= 12; ++n)
    for (unsigned k = 1; k <= std::min<unsigned long>(n, 7); ++k)
      for (const auto& s : subsets_of_size(n, k)) {
        CHECK(is_gale(s, n, k) == evenness_oracle(n, s));
        CHECK(is_gale_separation(s, n) == evenness_oracle(n, s));
      }
}

TEST_CASE("facet enumeration equals the brute-force filter") {
  for (unsigned long n = 4; n <= 10; ++n)
    for (unsigned d = 2; d <= std::min<unsigned long>(n - 1, 6); ++d) {
      auto facets = enumerate_facets(n, d);
      std::vector<std::vector<unsigned long>> expect;
      for (const auto& s : subsets_of_size(n, d))
        if (evenness_oracle(n, s)) expect.push_back(s);
      REQUIRE(facets.size() == expect.size());
      for (size_t i = 0; i < facets.size(); ++i)
        CHECK(facets[i].elements() == expect[i]);
      CHECK(std::is_sorted(facets.begin(), facets.end()));
    }
}

TEST_CASE("planar facet count is n; the (6,3) count is 8") {
  for (unsigned long n = 3; n <= 15; ++n) CHECK(enumerate_facets(n, 2).size() == n);
  CHECK(enumerate_facets(6, 3).size() == 8);
}

TEST_CASE("evenness is invariant under order reversal") {
  for (unsigned long n = 2; n <= 10; ++n)
    for (unsigned k = 1; k <= std::min<unsigned long>(n, 6); ++k)
      for (const auto& s : subsets_of_size(n, k)) {
        std::vector<unsigned long> rev;
        for (auto v : s) rev.push_back(n + 1 - v);
        std::sort(rev.begin(), rev.end());
        CHECK(is_gale(s, n, k) == is_gale(rev, n, k));
      }
}

TEST_CASE("multiplicity patterns classify into the two boundary types") {
  // odd slots all 1 -> first kind; zero head with even slots all 1 -> second
  CHECK(MultiplicityVector(2, {1, 2}).classify() == MultiplicityVector::Kind::Type1);
  CHECK(MultiplicityVector(3, {1, 1}).classify() == MultiplicityVector::Kind::Type1);
  CHECK(MultiplicityVector(0, {1, 4, 1}).classify() == MultiplicityVector::Kind::Type1);
  CHECK(MultiplicityVector(0, {4, 1}).classify() == MultiplicityVector::Kind::Type2);
  CHECK(MultiplicityVector(1, {2, 1}).classify() == MultiplicityVector::Kind::Neither);
  CHECK(MultiplicityVector(0, {2, 2}).classify() == MultiplicityVector::Kind::Neither);
  CHECK(MultiplicityVector(0, {1, 2}).classify() == MultiplicityVector::Kind::Type1);
  // both patterns can hold at once; the classifier then reports the first
  MultiplicityVector both(0, {1, 1});
  CHECK(both.is_type1());
  CHECK(both.is_type2());
  CHECK(both.classify() == MultiplicityVector::Kind::Type1);
}

TEST_CASE("multiplicity-to-subset conversion matches frozen examples") {
  CHECK(multiplicity_to_gale(MultiplicityVector(2, {1, 2})).elements() ==
        std::vector<unsigned long>{2, 3});
  CHECK(multiplicity_to_gale(MultiplicityVector(0, {4, 1})).elements() ==
        std::vector<unsigned long>{1, 5});
  CHECK(multiplicity_to_gale(MultiplicityVector(3, {1, 1})).elements() ==
        std::vector<unsigned long>{1, 2});
}

TEST_CASE("the pattern-subset correspondence is a bijection onto facet supports") {
  for (unsigned long n = 3; n <= 10; ++n)
    for (unsigned d = 2; d <= std::min<unsigned long>(n - 1, 6); ++d) {
      // every admissible subset comes from exactly one pattern, and back;
      // inadmissible subsets have no pattern at all
      for (const auto& s : subsets_of_size(n, d)) {
        GaleSubset g(n, s);
        if (!evenness_oracle(n, s)) {
          CHECK_THROWS_AS(gale_to_multiplicity(g), std::invalid_argument);
          continue;
        }
        MultiplicityVector mv = gale_to_multiplicity(g);
        CHECK(mv.total() == n);
        GaleSubset back = multiplicity_to_gale(mv);
        CHECK(back.elements() == s);
        CHECK(back.ground_size() == n);
      }
    }
}

TEST_CASE("type-1 and type-2 patterns map exactly onto evenness subsets") {
  // Patterns of either boundary type with d positive parts hit exactly the
  // admissible supports of size d, one pattern per support.
  for (unsigned long n = 4; n <= 9; ++n)
    for (unsigned d = 2; d <= std::min<unsigned long>(n - 1, 5); ++d) {
      std::set<std::vector<unsigned long>> admissible, from_types;
      for (const auto& s : subsets_of_size(n, d))
        if (evenness_oracle(n, s)) admissible.insert(s);

      size_t pattern_count = 0;
      std::vector<unsigned long> parts;
      std::function<void(unsigned long)> gen = [&](unsigned long rest) {
        if (parts.size() == d) {
          if (rest != 0) return;
          unsigned long used = 0;
          for (auto p : parts) used += p;
          MultiplicityVector mv(n - used, parts);
          if (mv.classify() == MultiplicityVector::Kind::Neither) return;
          ++pattern_count;
          from_types.insert(multiplicity_to_gale(mv).elements());
          return;
        }
        for (unsigned long v = 1; v + (d - parts.size() - 1) <= rest; ++v) {
          parts.push_back(v);
          gen(rest - v);
          parts.pop_back();
        }
      };
      for (unsigned long used = d; used <= n; ++used) gen(used);

      CHECK(admissible == from_types);
      CHECK(pattern_count == from_types.size());  // one pattern per support
    }
}

TEST_CASE("extended subsets with the limit element follow the shifted rule") {
  // ground (inf, k_max, ..., 1): inf occupies position 1 and k occupies
  // position k_max + 2 - k.
  CHECK(is_gale_extended(GaleSubset(3, {1}, true)));
  CHECK(is_gale_extended(GaleSubset(3, {3}, true)));
  CHECK(is_gale_extended(GaleSubset(3, {1, 2}, false)));
  CHECK(is_gale_extended(GaleSubset(3, {2, 3}, false)));
  CHECK_FALSE(is_gale_extended(GaleSubset(3, {2}, true)));
  CHECK_FALSE(is_gale_extended(GaleSubset(3, {1, 3}, false)));
}
