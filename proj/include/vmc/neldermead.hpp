#pragma once

// Derivative-free simplex descent (Nelder-Mead) with a projection hook so the
// search can stay on constrained domains (probability simplices, boxes).

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <numeric>
#include <vector>

namespace vmc {

struct NelderMeadOptions {
  int max_iterations = 500;
  double spread_tolerance = 1e-12;  // stop when value spread across the simplex is below
  double initial_step = 0.25;
};

struct NelderMeadResult {
  std::vector<double> x;
  double value = 0.0;
  int iterations = 0;
};

// Minimizes f over the image of `project`.  Every candidate point is projected
// before evaluation and stored projected, so the returned minimizer is feasible.
template <typename F, typename P>
NelderMeadResult nelder_mead(F&& f, P&& project, std::vector<double> start,
                             const NelderMeadOptions& opt = {}) {
  const size_t n = start.size();
  project(start);
  std::vector<std::vector<double>> xs;
  std::vector<double> fx;
  xs.push_back(start);
  fx.push_back(f(start));
  for (size_t i = 0; i < n; ++i) {
    std::vector<double> p = start;
    p[i] += opt.initial_step * (std::abs(p[i]) > 1.0 ? std::abs(p[i]) : 1.0);
    project(p);
    xs.push_back(p);
    fx.push_back(f(p));
  }

  auto order = [&] {
    std::vector<size_t> idx(xs.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return fx[a] < fx[b]; });
    std::vector<std::vector<double>> nxs;
    std::vector<double> nfx;
    for (size_t i : idx) {
      nxs.push_back(xs[i]);
      nfx.push_back(fx[i]);
    }
    xs = std::move(nxs);
    fx = std::move(nfx);
  };

  int it = 0;
  for (; it < opt.max_iterations; ++it) {
    order();
    if (fx.back() - fx.front() < opt.spread_tolerance) break;
    std::vector<double> centroid(n, 0.0);
    for (size_t i = 0; i + 1 < xs.size(); ++i)
      for (size_t j = 0; j < n; ++j) centroid[j] += xs[i][j];
    for (size_t j = 0; j < n; ++j) centroid[j] /= static_cast<double>(n);

    auto moved = [&](double coef) {
      std::vector<double> p(n);
      for (size_t j = 0; j < n; ++j)
        p[j] = centroid[j] + coef * (centroid[j] - xs.back()[j]);
      project(p);
      return p;
    };

    std::vector<double> refl = moved(1.0);
    double f_refl = f(refl);
    if (f_refl < fx.front()) {
      std::vector<double> expa = moved(2.0);
      double f_expa = f(expa);
      if (f_expa < f_refl) {
        xs.back() = expa;
        fx.back() = f_expa;
      } else {
        xs.back() = refl;
        fx.back() = f_refl;
      }
      continue;
    }
    if (f_refl < fx[fx.size() - 2]) {
      xs.back() = refl;
      fx.back() = f_refl;
      continue;
    }
    std::vector<double> contr = moved(-0.5);
    double f_contr = f(contr);
    if (f_contr < fx.back()) {
      xs.back() = contr;
      fx.back() = f_contr;
      continue;
    }
    // Shrink toward the best vertex.
    for (size_t i = 1; i < xs.size(); ++i) {
      for (size_t j = 0; j < n; ++j)
        xs[i][j] = xs[0][j] + 0.5 * (xs[i][j] - xs[0][j]);
      project(xs[i]);
      fx[i] = f(xs[i]);
    }
  }
  order();
  return {xs.front(), fx.front(), it};
}

// Euclidean projection onto the probability simplex {x >= 0, sum x = 1}.
inline void project_to_simplex(std::vector<double>& x) {
  if (x.empty()) return;
  std::vector<double> u = x;
  std::sort(u.begin(), u.end(), std::greater<double>());
  double css = 0.0, theta = 0.0;
  int rho = -1;
  for (size_t i = 0; i < u.size(); ++i) {
    css += u[i];
    double t = (css - 1.0) / static_cast<double>(i + 1);
    if (u[i] - t > 0) {
      rho = static_cast<int>(i);
      theta = t;
    }
  }
  if (rho < 0) {  // degenerate input (all -inf/NaN-ish): fall back to uniform
    for (auto& v : x) v = 1.0 / static_cast<double>(x.size());
    return;
  }
  for (auto& v : x) v = std::max(0.0, v - theta);
}

}  // namespace vmc
