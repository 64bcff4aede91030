#pragma once

// Boundary decomposition of the power-sum cell in general ambient dimension d:
// enumerating the boundary patches (for the simplex of n points, for the
// sub-simplex variant, and for the all-n limit via the extended ground set),
// sampling patches, the formal piecewise-linear map on moment vertices, and
// the scaling flow that sweeps the cell toward the origin.

#include "vmc/gale.hpp"
#include "vmc/symcore.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace vmc {

enum class PatchSource { Simplex, SubSimplex, Limit };

// One boundary patch: a (d-2)-dimensional simplex of ordered-multiplicity
// points mapped through the power-sum chart.  `vertices` are the uniform
// support sizes of its extreme points (suffix sums of the multiplicity
// pattern); patches carrying the `inf` vertex are cones to the origin swept by
// the scaling flow.
struct BoundaryPatch {
  PatchSource source = PatchSource::Simplex;
  unsigned d = 3;
  MultiplicityVector mult{0, {1}};
  GaleSubset vertices{1, {1}};

  bool cone_to_origin() const { return vertices.has_inf(); }
};

namespace detail {

// All vectors (m1..ml) with every entry >= 1 and the given sum.
inline void compositions_exact(unsigned long sum, size_t slots,
                               std::vector<unsigned long>& acc,
                               std::vector<std::vector<unsigned long>>& out) {
  if (slots == 0) {
    if (sum == 0) out.push_back(acc);
    return;
  }
  if (sum < slots) return;  // each remaining slot needs at least 1
  for (unsigned long v = 1; v + (slots - 1) <= sum; ++v) {
    acc.push_back(v);
    compositions_exact(sum - v, slots - 1, acc, out);
    acc.pop_back();
  }
}

inline std::vector<std::vector<unsigned long>> positive_compositions(unsigned long sum,
                                                                     size_t slots) {
  std::vector<std::vector<unsigned long>> out;
  std::vector<unsigned long> acc;
  compositions_exact(sum, slots, acc, out);
  return out;
}

// Subsets of a given size from {1..k_max} plus the optional inf element.
inline void extended_subsets(unsigned long k_max, size_t size,
                             std::vector<GaleSubset>& out) {
  for (int with_inf = 0; with_inf <= 1; ++with_inf) {
    if (static_cast<size_t>(with_inf) > size) continue;
    size_t need = size - static_cast<size_t>(with_inf);
    if (need > k_max) continue;
    std::vector<unsigned long> comb;
    auto rec = [&](auto&& self, unsigned long next) -> void {
      if (comb.size() == need) {
        out.emplace_back(k_max, comb, with_inf != 0);
        return;
      }
      for (unsigned long v = next; v + (need - comb.size()) <= k_max + 1; ++v) {
        comb.push_back(v);
        self(self, v + 1);
        comb.pop_back();
      }
    };
    rec(rec, 1);
  }
}

}  // namespace detail

// Boundary patches of the cell in ambient dimension d.
//   Simplex:    points of the probability simplex on n coordinates; patches are
//               the type-1/type-2 patterns of length d-1 with total n.
//   SubSimplex: coordinate sum <= 1; type-1 patterns of length d-1 with sum 1
//               plus type-1/type-2 patterns of length d-2 coned to the origin.
//   Limit:      all-n closure; subsets of the extended ground set
//               {inf} u {1..k_max} of size d-1 satisfying the evenness
//               condition there (n is ignored, k_max truncates the ground).
inline std::vector<BoundaryPatch> enumerate_patches(unsigned long n, unsigned d,
                                                    PatchSource source,
                                                    unsigned long limit_k_max = 8) {
  if (d < 3) throw std::invalid_argument("enumerate_patches: need d >= 3");
  std::vector<BoundaryPatch> out;
  auto push_finite = [&](unsigned long m0, const std::vector<unsigned long>& m,
                         bool require_type1_only) {
    MultiplicityVector mv(m0, m);
    auto kind = mv.classify();
    if (kind == MultiplicityVector::Kind::Neither) return;
    if (require_type1_only && !mv.is_type1()) return;
    BoundaryPatch p;
    p.source = source;
    p.d = d;
    p.mult = mv;
    p.vertices = multiplicity_to_gale(mv);
    out.push_back(std::move(p));
  };

  if (source == PatchSource::Simplex || source == PatchSource::SubSimplex) {
    if (n + 1 < static_cast<unsigned long>(d))
      throw std::invalid_argument("enumerate_patches: need n >= d - 1");
    // Length d-1, coordinate sum exactly 1 (total multiplicity n).  For the
    // sub-simplex only the type-1 patterns stay on the boundary.
    for (unsigned long m0 = 0; m0 + (d - 1) <= n; ++m0)
      for (const auto& m : detail::positive_compositions(n - m0, d - 1))
        push_finite(m0, m, source == PatchSource::SubSimplex);
    if (source == PatchSource::SubSimplex) {
      // Length d-2 patterns, coordinate sum <= 1, coned to the origin.
      for (unsigned long s = d - 2; s <= n; ++s)
        for (const auto& m : detail::positive_compositions(s, d - 2)) {
          MultiplicityVector mv(n - s, m);
          if (mv.classify() == MultiplicityVector::Kind::Neither) continue;
          BoundaryPatch p;
          p.source = source;
          p.d = d;
          p.mult = mv;
          GaleSubset base = multiplicity_to_gale(mv);
          p.vertices = GaleSubset(n, base.elements(), /*has_inf=*/true);
          out.push_back(std::move(p));
        }
    }
  } else {
    if (limit_k_max + 1 < static_cast<unsigned long>(d) - 1)
      throw std::invalid_argument("enumerate_patches: k_max too small for this d");
    std::vector<GaleSubset> candidates;
    detail::extended_subsets(limit_k_max, d - 1, candidates);
    for (const auto& s : candidates) {
      if (!is_gale_extended(s)) continue;
      BoundaryPatch p;
      p.source = source;
      p.d = d;
      p.vertices = s;
      // Multiplicity pattern of the finite part (zero padding is implicit in
      // the limit; m0 is recorded as 0).
      std::vector<unsigned long> desc(s.elements().rbegin(), s.elements().rend());
      std::vector<unsigned long> m;
      for (size_t i = 0; i + 1 < desc.size(); ++i) m.push_back(desc[i] - desc[i + 1]);
      if (!desc.empty()) m.push_back(desc.back());
      p.mult = MultiplicityVector(0, std::move(m));
      out.push_back(std::move(p));
    }
  }
  std::sort(out.begin(), out.end(), [](const BoundaryPatch& a, const BoundaryPatch& b) {
    return a.vertices < b.vertices;
  });
  return out;
}

// The point sum_k lambda_k * (uniform k-support point) of the simplex on
// `ground` coordinates; weights are paired with the sorted support sizes.
inline CompressedPoint convex_support_combination(const std::vector<unsigned long>& supports,
                                                 const std::vector<Rational>& weights,
                                                 unsigned long ground) {
  if (supports.size() != weights.size())
    throw std::invalid_argument("convex_support_combination: size mismatch");
  std::vector<Rational> x(ground, Rational(0));
  for (size_t i = 0; i < supports.size(); ++i) {
    unsigned long k = supports[i];
    if (k < 1 || k > ground)
      throw std::invalid_argument("convex_support_combination: support out of range");
    if (weights[i].sign() < 0)
      throw std::invalid_argument("convex_support_combination: negative weight");
    Rational add = weights[i] / Rational(static_cast<long>(k));
    for (unsigned long j = ground - k; j < ground; ++j) x[j] += add;
  }
  return CompressedPoint::from_vector(x);
}

struct PatchSample {
  std::vector<Rational> params;  // barycentric weights; cones prepend the sweep s
  CellPoint point{{Rational(0)}};
};

// Barycentric lattice sample of a patch at the given resolution.  Ordinary
// patches: all weight vectors with denominator `resolution` over the sorted
// vertex list.  Cone patches: the base face is sampled the same way and swept
// along the scaling flow s in {0, 1/R, ..., 1}.
inline std::vector<PatchSample> patch_sample(const BoundaryPatch& patch,
                                             unsigned long resolution) {
  if (resolution < 1) throw std::invalid_argument("patch_sample: resolution must be >= 1");
  const unsigned long R = resolution;
  unsigned long ground = patch.vertices.ground_size();
  std::vector<unsigned> exps = standard_exponents(patch.d);
  std::vector<PatchSample> samples;

  auto weights_from_counts = [R](const std::vector<unsigned long>& counts) {
    std::vector<Rational> w;
    w.reserve(counts.size());
    for (auto c : counts)
      w.push_back(Rational(static_cast<long>(c), static_cast<long>(R)));
    return w;
  };

  // Compositions of R into `slots` nonnegative parts.
  auto nonneg_compositions = [R](size_t slots) {
    std::vector<std::vector<unsigned long>> out;
    std::vector<unsigned long> acc;
    auto rec = [&](auto&& self, unsigned long left, size_t rest) -> void {
      if (rest == 1) {
        acc.push_back(left);
        out.push_back(acc);
        acc.pop_back();
        return;
      }
      for (unsigned long v = 0; v <= left; ++v) {
        acc.push_back(v);
        self(self, left - v, rest - 1);
        acc.pop_back();
      }
    };
    rec(rec, R, slots);
    return out;
  };

  const auto& verts = patch.vertices.elements();
  if (!patch.cone_to_origin()) {
    for (const auto& counts : nonneg_compositions(verts.size())) {
      std::vector<Rational> w = weights_from_counts(counts);
      CompressedPoint x = convex_support_combination(verts, w, ground);
      samples.push_back({w, nu_eval(x, exps)});
    }
  } else {
    for (const auto& counts : nonneg_compositions(verts.size())) {
      std::vector<Rational> w = weights_from_counts(counts);
      for (unsigned long j = 0; j <= R; ++j) {
        Rational s(static_cast<long>(j), static_cast<long>(R));
        std::vector<Rational> scaled;
        scaled.reserve(w.size());
        for (const auto& wi : w) scaled.push_back(wi * s);
        CompressedPoint x = convex_support_combination(verts, scaled, ground);
        std::vector<Rational> params{s};
        params.insert(params.end(), w.begin(), w.end());
        samples.push_back({std::move(params), nu_eval(x, exps)});
      }
    }
  }
  return samples;
}

// Formal piecewise-linear image: the power-sum image of the written convex
// combination sum lambda_k * (uniform k-support).  Defined on vertex-weight
// lists precisely because the underlying map does not descend to polytope
// points away from facets.
inline CellPoint kappa_facet(const GaleSubset& s, const std::vector<Rational>& weights) {
  if (s.has_inf()) throw std::invalid_argument("kappa_facet: finite supports only");
  if (s.size() == 0) throw std::invalid_argument("kappa_facet: empty support set");
  Rational total;
  for (const auto& w : weights) total += w;
  if (total != Rational(1))
    throw std::invalid_argument("kappa_facet: weights must sum to 1");
  CompressedPoint x =
      convex_support_combination(s.elements(), weights, s.ground_size());
  return nu_eval(x, standard_exponents(static_cast<unsigned>(s.size()) + 1));
}

// The matching point of the moment-vertex polytope (domain side of the map):
// sum lambda_k * (1/k, 1/k^2, ..., 1/k^{d-1}).
inline CellPoint kappa_domain_point(const GaleSubset& s, const std::vector<Rational>& weights) {
  if (s.has_inf()) throw std::invalid_argument("kappa_domain_point: finite supports only");
  if (s.size() == 0 || s.size() != weights.size())
    throw std::invalid_argument("kappa_domain_point: bad support/weight lists");
  unsigned d = static_cast<unsigned>(s.size()) + 1;
  std::vector<Rational> acc(d - 1, Rational(0));
  for (size_t i = 0; i < weights.size(); ++i) {
    CellPoint v = moment_vertex(s.elements()[i], d, Basis::PowerSum);
    for (size_t j = 0; j + 1 < d; ++j) acc[j] += weights[i] * v.coords()[j];
  }
  return CellPoint(std::move(acc));
}

// Scaling flow on image points: (u1, u2, ..., u_{d-1}) -> (t^2 u1, t^3 u2,
// ..., t^d u_{d-1}).  Keeps the cell invariant for t in [0, 1].
inline CellPoint scale_flow(const CellPoint& u, const Rational& t) {
  if (t.sign() < 0 || t > Rational(1))
    throw std::invalid_argument("scale_flow: need t in [0, 1]");
  std::vector<Rational> coords;
  coords.reserve(u.coords().size());
  for (size_t i = 0; i < u.coords().size(); ++i)
    coords.push_back(u.coords()[i] * t.pow(static_cast<long>(i) + 2));
  return CellPoint(std::move(coords));
}

}  // namespace vmc
