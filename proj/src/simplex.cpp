#include "suita/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace suita {

namespace {

Point2 affine(const Point2& base, const Point2& toward, double scale) {
  return {base[0] + scale * (toward[0] - base[0]), base[1] + scale * (toward[1] - base[1])};
}

}  // namespace

SimplexResult nelder_mead(const std::function<double(const Point2&)>& f, Point2 x0, Point2 step,
                          const SimplexOptions& opts) {
  std::array<Point2, 3> v{x0, Point2{x0[0] + step[0], x0[1]}, Point2{x0[0], x0[1] + step[1]}};
  std::array<double, 3> fv{};
  int evals = 0;
  auto eval = [&](const Point2& p) {
    ++evals;
    return f(p);
  };
  for (int k = 0; k < 3; ++k) fv[k] = eval(v[k]);

  auto order = [&] {
    std::array<int, 3> idx{0, 1, 2};
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return fv[a] < fv[b]; });
    std::array<Point2, 3> v2{v[idx[0]], v[idx[1]], v[idx[2]]};
    std::array<double, 3> f2{fv[idx[0]], fv[idx[1]], fv[idx[2]]};
    v = v2;
    fv = f2;
  };

  for (int iter = 0; iter < opts.max_iterations; ++iter) {
    order();
    double diameter = 0.0;
    for (int k = 1; k < 3; ++k) {
      diameter = std::max(diameter, std::hypot(v[k][0] - v[0][0], v[k][1] - v[0][1]));
    }
    if (diameter < opts.diameter_tol && fv[2] - fv[0] < opts.spread_tol) {
      return {v[0], fv[0], iter, evals};
    }

    const Point2 centroid{(v[0][0] + v[1][0]) / 2.0, (v[0][1] + v[1][1]) / 2.0};
    const Point2 xr = affine(centroid, v[2], -1.0);
    const double fr = eval(xr);

    if (fr < fv[0]) {
      const Point2 xe = affine(centroid, v[2], -2.0);
      const double fe = eval(xe);
      if (fe < fr) {
        v[2] = xe;
        fv[2] = fe;
      } else {
        v[2] = xr;
        fv[2] = fr;
      }
      continue;
    }
    if (fr < fv[1]) {
      v[2] = xr;
      fv[2] = fr;
      continue;
    }

    // Outside contraction if the reflection beat the worst vertex, else inside.
    const bool outside = fr < fv[2];
    const Point2 xc = outside ? affine(centroid, xr, 0.5) : affine(centroid, v[2], 0.5);
    const double fc = eval(xc);
    if (fc < (outside ? fr : fv[2])) {
      v[2] = xc;
      fv[2] = fc;
      continue;
    }

    for (int k = 1; k < 3; ++k) {
      v[k] = affine(v[0], v[k], 0.5);
      fv[k] = eval(v[k]);
    }
  }

  order();
  throw SimplexNonConvergence(
      "nelder_mead: no convergence within " + std::to_string(opts.max_iterations) + " iterations",
      {v[0], fv[0], opts.max_iterations, evals});
}

}  // namespace suita
