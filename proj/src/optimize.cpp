#include "suita/optimize.hpp"

#include <cmath>
#include <exception>
#include <limits>
#include <sstream>
#include <string>
#include <thread>

namespace suita {

namespace {

template <class E>
[[noreturn]] void rethrow_at_node(const E& e, double re, double im) {
  std::ostringstream os;
  os.precision(17);
  os << e.what() << " (at node tau = " << re << " + " << im << "i)";
  throw E(os.str());
}

double node_value(double re, double im, const SeriesConfig& cfg) {
  try {
    return f_ratio(Tau(re, im), cfg).f;
  } catch (const DomainError& e) {
    rethrow_at_node(e, re, im);
  } catch (const NonConvergenceError& e) {
    rethrow_at_node(e, re, im);
  }
}

void require_ascending(const std::vector<double>& g, const char* name) {
  if (g.empty()) throw PreconditionError(std::string(name) + " grid is empty");
  for (std::size_t k = 0; k < g.size(); ++k) {
    if (!std::isfinite(g[k])) throw PreconditionError(std::string(name) + " grid has a non-finite node");
    if (k > 0 && !(g[k] > g[k - 1])) {
      throw PreconditionError(std::string(name) + " grid is not strictly ascending");
    }
  }
}

}  // namespace

std::vector<double> linspace(double lo, double hi, int count) {
  if (count < 1) throw PreconditionError("linspace: count must be positive");
  std::vector<double> out(static_cast<std::size_t>(count));
  if (count == 1) {
    out[0] = hi;
    return out;
  }
  const double step = (hi - lo) / (count - 1);
  for (int k = 0; k < count - 1; ++k) out[static_cast<std::size_t>(k)] = lo + k * step;
  out.back() = hi;
  return out;
}

FSurface sweep_grid(std::vector<double> re_grid, std::vector<double> im_grid,
                    const SweepOptions& opts) {
  opts.cfg.validate();
  require_ascending(re_grid, "re");
  require_ascending(im_grid, "im");
  if (im_grid.front() < kImFloor) {
    throw PreconditionError("im grid starts below the evaluation floor");
  }

  FSurface s{std::move(re_grid), std::move(im_grid), {}};
  const std::size_t rows = s.rows();
  const std::size_t cols = s.cols();
  s.values.assign(rows * cols, 0.0);

  const unsigned workers = std::max(1u, std::min<unsigned>(opts.threads, static_cast<unsigned>(rows)));
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::size_t> error_node(workers, std::numeric_limits<std::size_t>::max());

  auto work = [&](unsigned wid) {
    for (std::size_t r = wid; r < rows; r += workers) {
      for (std::size_t c = 0; c < cols; ++c) {
        try {
          s.values[r * cols + c] = node_value(s.re_grid[c], s.im_grid[r], opts.cfg);
        } catch (...) {
          errors[wid] = std::current_exception();
          error_node[wid] = r * cols + c;
          return;
        }
      }
    }
  };

  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }

  // Report the first failing node in row-major order, independent of scheduling.
  std::size_t first = std::numeric_limits<std::size_t>::max();
  std::exception_ptr err;
  for (unsigned w = 0; w < workers; ++w) {
    if (errors[w] && error_node[w] < first) {
      first = error_node[w];
      err = errors[w];
    }
  }
  if (err) std::rethrow_exception(err);
  return s;
}

FSurface sweep(Range re, Range im, int rows, int cols, const SweepOptions& opts) {
  if (!(re.lo < re.hi)) throw PreconditionError("sweep: re range must satisfy lo < hi");
  if (!(im.lo < im.hi)) throw PreconditionError("sweep: im range must satisfy lo < hi");
  if (im.lo < kImFloor) throw PreconditionError("sweep: im range starts below the evaluation floor");
  if (rows < 2 || cols < 2) throw PreconditionError("sweep: rows and cols must be at least 2");
  return sweep_grid(linspace(re.lo, re.hi, cols), linspace(im.lo, im.hi, rows), opts);
}

GridPoint grid_min(const FSurface& surface) {
  if (surface.values.empty()) throw PreconditionError("grid_min: empty surface");
  std::size_t best = 0;
  for (std::size_t k = 1; k < surface.values.size(); ++k) {
    if (surface.values[k] < surface.values[best]) best = k;
  }
  const std::size_t r = best / surface.cols();
  const std::size_t c = best % surface.cols();
  return {surface.re_grid[c], surface.im_grid[r], surface.values[best], r, c};
}

MinimizeResult minimize(const MinimizeOptions& opts) {
  const FSurface surface = sweep(opts.re, opts.im, opts.rows, opts.cols, {opts.cfg, opts.threads});
  const GridPoint g = grid_min(surface);

  long evaluations = static_cast<long>(surface.values.size());
  auto objective = [&](const Point2& p) {
    if (p[1] < kImFloor) return std::numeric_limits<double>::infinity();
    return f_ratio(Tau(p[0], p[1]), opts.cfg).f;
  };

  auto finish = [&](double re, double im, double f, bool refined) {
    // Curvature of F along Re tau by a central difference.
    const double h = 1e-3;
    const double fp = objective({re + h, im});
    const double fm = objective({re - h, im});
    evaluations += 2;
    const double curv = (fp + fm - 2.0 * f) / (h * h);
    const double halfwidth = curv > 0.0 ? std::min(0.5, std::sqrt(2.0 * opts.simplex.spread_tol / curv)) : 0.5;
    const double e = std::exp(f);
    return MinimizeResult{Tau(re, im), f, e, 1.0 / e, g, refined, evaluations, halfwidth};
  };

  if (!opts.refine) return finish(g.re, g.im, g.value, false);

  const Point2 step{(opts.re.hi - opts.re.lo) / (opts.cols - 1) / 2.0,
                    (opts.im.hi - opts.im.lo) / (opts.rows - 1) / 2.0};
  try {
    const SimplexResult sr = nelder_mead(objective, {g.re, g.im}, step, opts.simplex);
    evaluations += sr.evaluations;
    if (sr.f > g.value) return finish(g.re, g.im, g.value, true);
    return finish(sr.x[0], sr.x[1], sr.f, true);
  } catch (const SimplexNonConvergence& e) {
    evaluations += e.best().evaluations;
    const auto& b = e.best();
    MinimizeResult best = b.f < g.value ? finish(b.x[0], b.x[1], b.f, true) : finish(g.re, g.im, g.value, true);
    throw MinimizeNonConvergence(e.what(), best);
  }
}

std::pair<std::size_t, std::size_t> column_major_first_min(std::span<const double> values, std::size_t rows,
                                                           std::size_t cols) {
  if (rows == 0 || cols == 0 || values.size() != rows * cols) {
    throw PreconditionError("column_major_first_min: shape mismatch");
  }
  // [F1, i] = min(F); [f, j] = min(F1); NaN entries are skipped as MATLAB does.
  bool found = false;
  std::size_t best_r = 0, best_c = 0;
  for (std::size_t c = 0; c < cols; ++c) {
    bool col_found = false;
    std::size_t col_best = 0;
    for (std::size_t r = 0; r < rows; ++r) {
      const double v = values[r * cols + c];
      if (std::isnan(v)) continue;
      if (!col_found || v < values[col_best * cols + c]) {
        col_best = r;
        col_found = true;
      }
    }
    if (!col_found) continue;
    if (!found || values[col_best * cols + c] < values[best_r * cols + best_c]) {
      best_r = col_best;
      best_c = c;
      found = true;
    }
  }
  if (!found) throw DomainError("every mesh value is NaN");
  return {best_r, best_c};
}

double fixed_term_f(double x, double y, int k_terms) {
  const Complex q = std::exp(kPi * Complex(-y, x));
  double s = 0.0;
  for (int k = 1; k <= k_terms; ++k) {
    s += std::log(std::abs(1.0 - std::pow(q, 2 * k)));
  }
  return -2.0 * std::log(y) - std::log(4.0 * kPi) + kPi * y / 3.0 - 4.0 * s;
}

ParityResult matlab_myplot(double x, double y, int k_terms, int m, int n) {
  if (!(x > 0.0) || !std::isfinite(x)) throw PreconditionError("parity: x must be positive");
  if (!(y > kImFloor) || !std::isfinite(y)) throw PreconditionError("parity: y must exceed the evaluation floor");
  if (k_terms < 1) throw PreconditionError("parity: K must be at least 1");
  if (m < 2 || n < 2) throw PreconditionError("parity: M and N must be at least 2");

  ParityResult out{};
  out.x_nodes = linspace(-x, x, m);
  out.y_nodes = linspace(0.0, y, n);
  for (double& v : out.y_nodes) {
    if (v < kImFloor) {
      v = kImFloor;
      out.clamped = true;
    }
  }

  // F(i, j): i indexes Y (rows), j indexes X (columns).
  const auto rows = static_cast<std::size_t>(n);
  const auto cols = static_cast<std::size_t>(m);
  std::vector<double> f(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      f[i * cols + j] = fixed_term_f(out.x_nodes[j], out.y_nodes[i], k_terms);
    }
  }

  const auto [row, col] = column_major_first_min(f, rows, cols);
  out.row = row;
  out.col = col;
  out.f = f[row * cols + col];
  out.a = out.x_nodes[out.col];
  out.b = out.y_nodes[out.row];
  return out;
}

}  // namespace suita
