#pragma once

// Facet combinatorics of cyclic polytopes via Gale's evenness condition, and
// the bijection between facets and multiplicity patterns of boundary points.

#include "vmc/rational.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace vmc {

// A subset of the ordered ground set of moment-curve parameters.  Plain
// subsets live on indices 1..n (parameter values 1/k, whose order-reversal
// leaves the evenness condition unchanged).  Extended subsets may contain the
// extra element with parameter value 0, denoted "inf" since it is the
// uniform-support limit; it precedes every index in parameter order.
class GaleSubset {
 public:
  GaleSubset(unsigned long ground_size, std::vector<unsigned long> elements,
             bool has_inf = false)
      : ground_(ground_size), elems_(std::move(elements)), inf_(has_inf) {
    std::sort(elems_.begin(), elems_.end());
    for (size_t i = 0; i < elems_.size(); ++i) {
      if (elems_[i] < 1 || elems_[i] > ground_)
        throw std::invalid_argument("GaleSubset: element out of range");
      if (i && elems_[i] == elems_[i - 1])
        throw std::invalid_argument("GaleSubset: duplicate element");
    }
  }

  unsigned long ground_size() const { return ground_; }
  const std::vector<unsigned long>& elements() const { return elems_; }
  bool has_inf() const { return inf_; }
  size_t size() const { return elems_.size() + (inf_ ? 1 : 0); }

  friend bool operator==(const GaleSubset& a, const GaleSubset& b) {
    return a.ground_ == b.ground_ && a.inf_ == b.inf_ && a.elems_ == b.elems_;
  }
  friend bool operator<(const GaleSubset& a, const GaleSubset& b) {
    if (a.inf_ != b.inf_) return a.inf_ && !b.inf_;  // inf-sets sort first
    return a.elems_ < b.elems_;
  }

  std::string str() const {
    std::ostringstream os;
    os << "{";
    bool first = true;
    if (inf_) {
      os << "inf";
      first = false;
    }
    for (auto e : elems_) {
      if (!first) os << ",";
      os << e;
      first = false;
    }
    os << "}";
    return os.str();
  }

 private:
  unsigned long ground_;
  std::vector<unsigned long> elems_;
  bool inf_;
};

// Multiplicity pattern (m0; m1..ml) of a point (0^m0, x1^m1, ..., xl^ml) with
// 0 < x1 < ... < xl.  The two boundary-producing shapes:
//   type 1: every odd slot m_{2i-1} equals 1 (m0 arbitrary),
//   type 2: m0 = 0 and every even slot m_{2i} equals 1.
class MultiplicityVector {
 public:
  enum class Kind { Type1, Type2, Neither };

  MultiplicityVector(unsigned long m0, std::vector<unsigned long> m)
      : m0_(m0), m_(std::move(m)) {
    for (auto mi : m_)
      if (mi == 0)
        throw std::invalid_argument("MultiplicityVector: positive-slot multiplicity must be >= 1");
  }

  unsigned long m0() const { return m0_; }
  const std::vector<unsigned long>& m() const { return m_; }
  size_t length() const { return m_.size(); }

  unsigned long total() const {
    unsigned long t = m0_;
    for (auto mi : m_) t += mi;
    return t;
  }

  bool is_type1() const {
    for (size_t i = 0; i < m_.size(); i += 2)  // slots 1, 3, 5, ... (1-indexed)
      if (m_[i] != 1) return false;
    return true;
  }

  bool is_type2() const {
    if (m0_ != 0) return false;
    for (size_t i = 1; i < m_.size(); i += 2)  // slots 2, 4, 6, ...
      if (m_[i] != 1) return false;
    return true;
  }

  Kind classify() const {
    if (is_type1()) return Kind::Type1;
    if (is_type2()) return Kind::Type2;
    return Kind::Neither;
  }

  friend bool operator==(const MultiplicityVector& a, const MultiplicityVector& b) {
    return a.m0_ == b.m0_ && a.m_ == b.m_;
  }
  friend bool operator<(const MultiplicityVector& a, const MultiplicityVector& b) {
    if (a.m0_ != b.m0_) return a.m0_ < b.m0_;
    return a.m_ < b.m_;
  }

  std::string str() const {
    std::ostringstream os;
    os << "(" << m0_;
    for (auto mi : m_) os << "," << mi;
    os << ")";
    return os.str();
  }

 private:
  unsigned long m0_;
  std::vector<unsigned long> m_;
};

namespace detail {

// True when S decomposes as disjoint consecutive pairs {i, i+1}.
inline bool is_pair_union(const std::vector<unsigned long>& s) {
  if (s.size() % 2 != 0) return false;
  for (size_t i = 0; i < s.size(); i += 2)
    if (s[i + 1] != s[i] + 1) return false;
  return true;
}

}  // namespace detail

// Gale's evenness condition for a size-d subset of {1..n}: the facet test for
// the cyclic polytope C(n, d).  Structural form: for even d, S is a disjoint
// union of consecutive pairs, optionally with the wrap pair {1, n}; for odd d,
// a disjoint union of consecutive pairs plus the singleton {1} or {n}.
inline bool is_gale(const std::vector<unsigned long>& subset, unsigned long n, unsigned d) {
  if (subset.size() != d)
    throw std::invalid_argument("is_gale: subset size does not match d");
  std::vector<unsigned long> s = subset;
  std::sort(s.begin(), s.end());
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 1 || s[i] > n) throw std::invalid_argument("is_gale: element out of range");
    if (i && s[i] == s[i - 1]) throw std::invalid_argument("is_gale: duplicate element");
  }
  if (d == 0) return true;
  if (d % 2 == 0) {
    if (detail::is_pair_union(s)) return true;
    if (s.front() == 1 && s.back() == n) {
      std::vector<unsigned long> mid(s.begin() + 1, s.end() - 1);
      if (detail::is_pair_union(mid)) return true;
    }
    return false;
  }
  if (s.front() == 1) {
    std::vector<unsigned long> rest(s.begin() + 1, s.end());
    if (detail::is_pair_union(rest)) return true;
  }
  if (s.back() == n) {
    std::vector<unsigned long> rest(s.begin(), s.end() - 1);
    if (detail::is_pair_union(rest)) return true;
  }
  return false;
}

// Equivalent separation form, used as the cross-check and for extended ground
// sets: every two omitted elements are separated by an even number of chosen
// elements.
inline bool is_gale_separation(const std::vector<unsigned long>& subset, unsigned long n) {
  std::vector<bool> in(n + 1, false);
  for (auto e : subset) {
    if (e < 1 || e > n) throw std::invalid_argument("is_gale_separation: element out of range");
    in[e] = true;
  }
  // Count chosen elements between consecutive omitted positions; pairwise
  // evenness is equivalent to evenness between adjacent omitted elements.
  long run = -1;  // chosen-count since previous omitted element, -1 before first
  for (unsigned long i = 1; i <= n; ++i) {
    if (in[i]) {
      if (run >= 0) ++run;
    } else {
      if (run > 0 && run % 2 != 0) return false;
      run = 0;
    }
  }
  return true;
}

// Evenness condition for an extended subset on the ground set
// (inf, k_max, k_max-1, ..., 1) ordered by moment parameter value.
inline bool is_gale_extended(const GaleSubset& s) {
  unsigned long n = s.ground_size() + 1;  // positions: 1 = inf, 1 + (k_max+1-k) = index k
  std::vector<unsigned long> pos;
  if (s.has_inf()) pos.push_back(1);
  for (auto e : s.elements()) pos.push_back(s.ground_size() + 2 - e);
  return is_gale(pos, n, static_cast<unsigned>(pos.size()));
}

namespace detail {

// Appends to `out` every way of placing `pairs` disjoint consecutive pairs
// with start indices in [lo, hi-1], prefixed by `acc`.
inline void pack_pairs(unsigned long lo, unsigned long hi, unsigned pairs,
                       std::vector<unsigned long>& acc,
                       std::set<std::vector<unsigned long>>& out) {
  if (pairs == 0) {
    std::vector<unsigned long> s = acc;
    std::sort(s.begin(), s.end());
    out.insert(std::move(s));
    return;
  }
  if (hi < lo + 1) return;
  for (unsigned long start = lo; start + 1 <= hi; ++start) {
    // Remaining pairs need room: start+2 .. hi must fit pairs-1 pairs.
    if (hi >= start + 1 && (hi - start - 1) / 2 + 1 >= pairs) {
      acc.push_back(start);
      acc.push_back(start + 1);
      pack_pairs(start + 2, hi, pairs - 1, acc, out);
      acc.pop_back();
      acc.pop_back();
    }
  }
}

}  // namespace detail

// All facets of the cyclic polytope C(n, d) as Gale subsets, generated
// directly from the pair-decomposition patterns and sorted lexicographically.
inline std::vector<GaleSubset> enumerate_facets(unsigned long n, unsigned d) {
  if (d < 1 || d >= n)
    throw std::invalid_argument("enumerate_facets: need 1 <= d < n");
  std::set<std::vector<unsigned long>> sets;
  std::vector<unsigned long> acc;
  if (d % 2 == 0) {
    detail::pack_pairs(1, n, d / 2, acc, sets);
    if (n >= 2) {
      acc = {1, n};
      std::set<std::vector<unsigned long>> with_wrap;
      detail::pack_pairs(2, n - 1, d / 2 - 1, acc, with_wrap);
      sets.insert(with_wrap.begin(), with_wrap.end());
    }
  } else {
    acc = {1};
    detail::pack_pairs(2, n, (d - 1) / 2, acc, sets);
    acc = {n};
    detail::pack_pairs(1, n - 1, (d - 1) / 2, acc, sets);
  }
  std::vector<GaleSubset> out;
  out.reserve(sets.size());
  for (auto& s : sets) out.emplace_back(n, s);
  std::sort(out.begin(), out.end());
  return out;
}

// Vertex set of the boundary simplex attached to a type-1/type-2 multiplicity
// pattern: the suffix sums of (m1..ml), on the ground set of size n = total.
inline GaleSubset multiplicity_to_gale(const MultiplicityVector& mv) {
  if (mv.classify() == MultiplicityVector::Kind::Neither)
    throw std::invalid_argument("multiplicity_to_gale: vector is neither type 1 nor type 2");
  if (mv.length() == 0)
    throw std::invalid_argument("multiplicity_to_gale: empty positive part");
  std::vector<unsigned long> suffix;
  unsigned long run = 0;
  const auto& m = mv.m();
  for (size_t i = m.size(); i-- > 0;) {
    run += m[i];
    suffix.push_back(run);
  }
  return GaleSubset(mv.total(), std::move(suffix));
}

// Inverse: recover the multiplicity pattern from a facet of C(n, |S|).
// Rejects subsets that fail the evenness condition.
inline MultiplicityVector gale_to_multiplicity(const GaleSubset& s) {
  if (s.has_inf())
    throw std::invalid_argument("gale_to_multiplicity: extended subsets have no finite pattern");
  if (s.size() == 0) throw std::invalid_argument("gale_to_multiplicity: empty subset");
  if (!is_gale(s.elements(), s.ground_size(), static_cast<unsigned>(s.size())))
    throw std::invalid_argument("gale_to_multiplicity: subset fails the evenness condition");
  std::vector<unsigned long> desc(s.elements().rbegin(), s.elements().rend());
  unsigned long m0 = s.ground_size() - desc.front();
  std::vector<unsigned long> m;
  for (size_t i = 0; i + 1 < desc.size(); ++i) m.push_back(desc[i] - desc[i + 1]);
  m.push_back(desc.back());
  return MultiplicityVector(m0, std::move(m));
}

}  // namespace vmc
