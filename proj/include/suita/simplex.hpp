#pragma once

// Two-dimensional Nelder-Mead descent with the standard coefficients
// (reflection 1, expansion 2, contraction 1/2, shrink 1/2).

#include <array>
#include <functional>

#include "suita/error.hpp"

namespace suita {

using Point2 = std::array<double, 2>;

struct SimplexOptions {
  double diameter_tol = 1e-6;  // max distance from the best vertex
  double spread_tol = 1e-10;   // f_worst - f_best
  int max_iterations = 2000;
};

struct SimplexResult {
  Point2 x;
  double f;
  int iterations;
  int evaluations;
};

class SimplexNonConvergence : public NonConvergenceError {
 public:
  SimplexNonConvergence(const std::string& msg, SimplexResult best)
      : NonConvergenceError(msg), best_(best) {}
  const SimplexResult& best() const noexcept { return best_; }

 private:
  SimplexResult best_;
};

// Minimizes f from the simplex {x0, x0 + step[0] e0, x0 + step[1] e1}.
// f may return +inf to reject infeasible points.
SimplexResult nelder_mead(const std::function<double(const Point2&)>& f, Point2 x0, Point2 step,
                          const SimplexOptions& opts = {});

}  // namespace suita
