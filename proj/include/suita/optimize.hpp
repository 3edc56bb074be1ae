#pragma once

// Mesh sweeps of F(tau) over a rectangle of the upper half-plane and the
// refined minimization that yields the Suita-type constant alpha with
//   alpha * pi * K >= c^2,   alpha = exp(-min F).

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "suita/simplex.hpp"
#include "suita/torus.hpp"

namespace suita {

struct Range {
  double lo;
  double hi;
};

// Endpoint-inclusive evenly spaced grid, the last node pinned to hi.
std::vector<double> linspace(double lo, double hi, int count);

// F sampled on re_grid x im_grid. Row-major: rows follow im, columns follow re.
struct FSurface {
  std::vector<double> re_grid;
  std::vector<double> im_grid;
  std::vector<double> values;

  std::size_t rows() const noexcept { return im_grid.size(); }
  std::size_t cols() const noexcept { return re_grid.size(); }
  double at(std::size_t row, std::size_t col) const { return values.at(row * cols() + col); }
};

struct SweepOptions {
  SeriesConfig cfg{};
  // Worker threads for the node evaluations; the result does not depend on it.
  unsigned threads = 1;
};

// F on an explicit mesh. Grids must be non-empty and ascending; every im node
// must be at least kImFloor.
FSurface sweep_grid(std::vector<double> re_grid, std::vector<double> im_grid,
                    const SweepOptions& opts = {});

// F on linspace(re, cols) x linspace(im, rows). Requires re.lo < re.hi,
// kImFloor <= im.lo < im.hi, rows >= 2, cols >= 2.
FSurface sweep(Range re, Range im, int rows, int cols, const SweepOptions& opts = {});

struct GridPoint {
  double re;
  double im;
  double value;
  std::size_t row;
  std::size_t col;
};

// Smallest node; ties go to the smaller Im, then the smaller Re.
GridPoint grid_min(const FSurface& surface);

struct MinimizeOptions {
  Range re{-1.0, 1.0};
  Range im{0.05, 4.0};
  int rows = 100;
  int cols = 100;
  bool refine = true;
  SeriesConfig cfg{};
  unsigned threads = 1;
  SimplexOptions simplex{};
};

struct MinimizeResult {
  Tau tau_star;
  double f_min;
  double exp_f_min;
  double alpha;  // 1 / exp_f_min
  GridPoint grid;
  bool refined;
  long evaluations;  // every F evaluation, sweep included
  // F is nearly constant in Re tau near the optimum. This is the half-width
  // in Re over which a quadratic model of F stays within spread_tol of f_min;
  // Re(tau_star) is only meaningful up to it.
  double re_flat_halfwidth;
};

class MinimizeNonConvergence : public NonConvergenceError {
 public:
  MinimizeNonConvergence(const std::string& msg, MinimizeResult best)
      : NonConvergenceError(msg), best_(best) {}
  const MinimizeResult& best() const noexcept { return best_; }

 private:
  MinimizeResult best_;
};

// Coarse sweep, grid minimum, then (optionally) Nelder-Mead from the grid
// minimizer constrained to Im tau >= kImFloor.
MinimizeResult minimize(const MinimizeOptions& opts = {});

// Emulation of the reference MATLAB script (myplot/test):
//   X = linspace(-x, x, M), Y = linspace(0, y, N), F(i, j) = test(X(j), Y(i), K)
// where test sums exactly K terms of log|1 - q^{2k}|. The Y = 0 row is raised
// to kImFloor. The minimum is located with MATLAB's column-major first-index
// rule: first minimal column, and within it the first minimal row.
struct ParityResult {
  double f;
  double a;  // Re tau at the minimum
  double b;  // Im tau at the minimum
  std::size_t row;
  std::size_t col;
  bool clamped;  // some Y node was raised to kImFloor
  std::vector<double> x_nodes;
  std::vector<double> y_nodes;  // after clamping
};

// Position (row, col) of MATLAB's [F1, i] = min(F); [f, j] = min(F1) on a
// row-major matrix: the first column holding the overall minimum, and the first
// row within that column. NaN entries are ignored.
std::pair<std::size_t, std::size_t> column_major_first_min(std::span<const double> values, std::size_t rows,
                                                           std::size_t cols);

// The MATLAB `test` function: F at x + iy using exactly k_terms q-terms.
double fixed_term_f(double x, double y, int k_terms);

ParityResult matlab_myplot(double x, double y, int k_terms, int m = 100, int n = 100);

}  // namespace suita
