#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "suita/optimize.hpp"
#include "suita/verify.hpp"

namespace py = pybind11;
using namespace suita;

namespace {

SeriesConfig make_cfg(double tol, int max_terms) {
  SeriesConfig cfg{tol, max_terms};
  cfg.validate();
  return cfg;
}

py::dict minimize_dict(const MinimizeResult& r) {
  py::dict d;
  d["f_min"] = r.f_min;
  d["exp_f_min"] = r.exp_f_min;
  d["alpha"] = r.alpha;
  d["tau"] = r.tau_star.value();
  d["grid_f_min"] = r.grid.value;
  d["grid_tau"] = Complex(r.grid.re, r.grid.im);
  d["refined"] = r.refined;
  d["evaluations"] = r.evaluations;
  d["tau_re_flat_halfwidth"] = r.re_flat_halfwidth;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Green's function, capacity and Bergman kernel on complex tori";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<NonConvergenceError>(m, "NonConvergenceError", PyExc_RuntimeError);

  m.attr("IM_FLOOR") = kImFloor;

  const auto tol = py::arg("tol") = 1e-14;
  const auto max_terms = py::arg("max_terms") = 100000;

  m.def(
      "nome", [](Complex tau) { return nome(Tau(tau.real(), tau.imag())); }, py::arg("tau"));
  m.def(
      "theta_series",
      [](Complex z, Complex tau, double t, int n) {
        return theta_series(z, Tau(tau.real(), tau.imag()), make_cfg(t, n));
      },
      py::arg("z"), py::arg("tau"), tol, max_terms);
  m.def(
      "theta_product",
      [](Complex z, Complex tau, double t, int n) {
        return theta_product(z, Tau(tau.real(), tau.imag()), make_cfg(t, n));
      },
      py::arg("z"), py::arg("tau"), tol, max_terms);
  m.def(
      "eta", [](Complex tau, double t, int n) { return eta(Tau(tau.real(), tau.imag()), make_cfg(t, n)); },
      py::arg("tau"), tol, max_terms);
  m.def(
      "green_function",
      [](Complex z, Complex w, Complex tau, double t, int n) {
        const Tau tt(tau.real(), tau.imag());
        try {
          return green_function(TorusPoint(z, tt), TorusPoint(w, tt), make_cfg(t, n));
        } catch (const CoincidentPointsError& e) {
          throw DomainError(e.what());
        }
      },
      py::arg("z"), py::arg("w"), py::arg("tau"), tol, max_terms);
  m.def(
      "capacity", [](Complex tau, double t, int n) { return capacity(Tau(tau.real(), tau.imag()), make_cfg(t, n)); },
      py::arg("tau"), tol, max_terms);
  m.def(
      "bergman_density", [](Complex tau) { return bergman_density(Tau(tau.real(), tau.imag())); }, py::arg("tau"));
  m.def(
      "f_ratio",
      [](Complex tau, double t, int n) {
        const RatioComponents r = f_ratio(Tau(tau.real(), tau.imag()), make_cfg(t, n));
        py::dict d;
        d["f"] = r.f;
        d["log_im_term"] = r.log_im_term;
        d["const_term"] = r.const_term;
        d["linear_term"] = r.linear_term;
        d["qsum_term"] = r.qsum_term;
        return d;
      },
      py::arg("tau"), tol, max_terms);
  m.def(
      "sweep",
      [](std::pair<double, double> re, std::pair<double, double> im, int rows, int cols, double t, int n,
         unsigned threads) {
        FSurface s = sweep({re.first, re.second}, {im.first, im.second}, rows, cols, {make_cfg(t, n), threads});
        std::vector<std::vector<double>> values(s.rows(), std::vector<double>(s.cols()));
        for (std::size_t r = 0; r < s.rows(); ++r) {
          for (std::size_t c = 0; c < s.cols(); ++c) values[r][c] = s.at(r, c);
        }
        return py::make_tuple(s.re_grid, s.im_grid, values);
      },
      py::arg("re"), py::arg("im"), py::arg("rows"), py::arg("cols"), tol, max_terms, py::arg("threads") = 1,
      "Returns (re_grid, im_grid, values) with values[row][col], rows following Im tau.");
  m.def(
      "minimize",
      [](std::pair<double, double> re, std::pair<double, double> im, int rows, int cols, bool refine, double t,
         int n) {
        MinimizeOptions opts;
        opts.re = {re.first, re.second};
        opts.im = {im.first, im.second};
        opts.rows = rows;
        opts.cols = cols;
        opts.refine = refine;
        opts.cfg = make_cfg(t, n);
        return minimize_dict(minimize(opts));
      },
      py::arg("re") = std::pair{-1.0, 1.0}, py::arg("im") = std::pair{0.05, 4.0}, py::arg("rows") = 100,
      py::arg("cols") = 100, py::arg("refine") = true, tol, max_terms);
  m.def(
      "check_theta_identity",
      [](int samples, std::uint64_t seed) {
        const CheckReport r = check_theta_identity(samples, seed);
        return py::make_tuple(r.passed, r.observed, r.tolerance);
      },
      py::arg("samples") = 200, py::arg("seed") = 42);
}
