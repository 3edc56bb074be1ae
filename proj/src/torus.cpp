#include "suita/torus.hpp"

#include <cmath>
#include <limits>

namespace suita {

namespace {

struct LatticeCoords {
  double a;
  double b;
};

LatticeCoords coords(Complex z, const Tau& tau) {
  const double b = z.imag() / tau.im();
  return {z.real() - b * tau.re(), b};
}

double wrap_unit(double x) {
  double f = x - std::floor(x);
  return f >= 1.0 ? 0.0 : f;
}

double wrap_centered(double x) { return x - std::floor(x + 0.5); }

}  // namespace

Complex canonical_rep(Complex z, const Tau& tau) {
  const auto [a, b] = coords(z, tau);
  return wrap_unit(a) + wrap_unit(b) * tau.value();
}

Complex centered_rep(Complex z, const Tau& tau) {
  const auto [a, b] = coords(z, tau);
  return wrap_centered(a) + wrap_centered(b) * tau.value();
}

double dist_omega(const TorusPoint& p, const TorusPoint& q) {
  if (!(p.tau == q.tau)) {
    throw PreconditionError("dist_omega: points lie on different lattices");
  }
  const Complex d = centered_rep(p.z - q.z, p.tau);
  double best = std::numeric_limits<double>::infinity();
  for (int m = -2; m <= 2; ++m) {
    for (int n = -2; n <= 2; ++n) {
      best = std::min(best, std::abs(d + static_cast<double>(m) + static_cast<double>(n) * p.tau.value()));
    }
  }
  return best / std::sqrt(p.tau.im());
}

bool operator==(const TorusPoint& p, const TorusPoint& q) {
  return p.tau == q.tau && dist_omega(p, q) <= kCoincidenceTol;
}

double green_function(const TorusPoint& p, const TorusPoint& q, const SeriesConfig& cfg) {
  if (dist_omega(p, q) <= kCoincidenceTol) {
    throw CoincidentPointsError("green_function: coincident points (g(w, w) = -inf)");
  }
  const Tau& tau = p.tau;
  // The centered representative keeps Im of the theta argument in [0, Im tau).
  const Complex arg = centered_rep(p.z - q.z, tau) + (1.0 + tau.value()) / 2.0;
  return std::log(theta_norm(arg, tau, cfg) / eta_norm(tau, cfg));
}

double capacity(const Tau& tau, const SeriesConfig& cfg) {
  const double t = tau.im();
  const double s = sum_log_abs_one_minus_q2n(tau, cfg);
  return std::sqrt(t) * 2.0 * kPi * std::exp(-(kPi / 6.0) * t + 2.0 * s);
}

double bergman_density(const Tau& tau) { return 1.0 / tau.im(); }

RatioComponents f_ratio(const Tau& tau, const SeriesConfig& cfg) {
  RatioComponents r{};
  r.log_im_term = -2.0 * std::log(tau.im());
  r.const_term = -std::log(4.0 * kPi);
  r.linear_term = (kPi / 3.0) * tau.im();
  r.qsum_term = -4.0 * sum_log_abs_one_minus_q2n(tau, cfg);
  r.f = r.log_im_term + r.const_term + r.linear_term + r.qsum_term;
  return r;
}

}  // namespace suita
