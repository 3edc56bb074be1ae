#include "suita/specfun.hpp"

#include <cmath>
#include <string>

namespace suita {

namespace {

void require_series_domain(const Tau& tau) {
  if (tau.im() < kImFloor) {
    throw DomainError("Im tau = " + std::to_string(tau.im()) + " is below the evaluation floor " +
                      std::to_string(kImFloor));
  }
}

[[noreturn]] void fail_convergence(const char* what, int max_terms) {
  throw NonConvergenceError(std::string(what) + ": truncation bound not met within max_terms = " +
                            std::to_string(max_terms));
}

// exp(pi i k tau), with the phase reduced mod 2 pi before the trig call.
Complex q_power(const Tau& tau, double k) {
  const double phase = kPi * std::fmod(k * tau.re(), 2.0);
  return std::polar(std::exp(-kPi * k * tau.im()), phase);
}

double frac(double x) {
  double f = x - std::floor(x);
  return f >= 1.0 ? 0.0 : f;
}

}  // namespace

Tau::Tau(double re, double im) : re_(re), im_(im) {
  if (!std::isfinite(re) || !std::isfinite(im)) {
    throw DomainError("tau must be finite");
  }
  if (!(im > 0.0)) {
    throw DomainError("tau must satisfy Im tau > 0 (got Im tau = " + std::to_string(im) + ")");
  }
}

void SeriesConfig::validate() const {
  if (!(tol > 0.0) || !std::isfinite(tol)) {
    throw PreconditionError("series tolerance must be a positive finite number");
  }
  if (max_terms < 1) {
    throw PreconditionError("max_terms must be at least 1");
  }
}

Complex nome(const Tau& tau) { return q_power(tau, 1.0); }

Truncated<Complex> theta_series_detailed(Complex z, const Tau& tau, const SeriesConfig& cfg) {
  cfg.validate();
  require_series_domain(tau);

  const double t = tau.im();
  const double y = z.imag();
  const double ay = std::abs(y);
  const double log_tol = std::log(cfg.tol);

  // Tail of both sides for |n| > N is dominated by a geometric series with
  // ratio exp(-pi t (2N+3) + 2 pi |y|) started at the n = N+1 term.
  int n_cut = -1;
  for (int n = 0; n <= cfg.max_terms; ++n) {
    const double log_ratio = -kPi * t * (2.0 * n + 3.0) + 2.0 * kPi * ay;
    if (log_ratio >= 0.0) continue;
    const double m = n + 1.0;
    const double log_first = -kPi * t * m * m + 2.0 * kPi * ay * m;
    const double log_bound = std::log(2.0) + log_first - std::log1p(-std::exp(log_ratio));
    if (log_bound < log_tol) {
      n_cut = n;
      break;
    }
  }
  if (n_cut < 0) fail_convergence("theta_series", cfg.max_terms);

  const double x = frac(z.real());
  Complex sum = 1.0;
  for (int n = 1; n <= n_cut; ++n) {
    const double nn = static_cast<double>(n);
    const double quad = std::fmod(nn * nn * tau.re(), 2.0);
    const double lin = std::fmod(nn * x, 1.0);
    const double base = -kPi * t * nn * nn;
    sum += std::polar(std::exp(base - 2.0 * kPi * nn * y), kPi * (quad + 2.0 * lin));
    sum += std::polar(std::exp(base + 2.0 * kPi * nn * y), kPi * (quad - 2.0 * lin));
  }
  return {sum, n_cut};
}

Complex theta_series(Complex z, const Tau& tau, const SeriesConfig& cfg) {
  return theta_series_detailed(z, tau, cfg).value;
}

Truncated<Complex> theta_product_detailed(Complex z, const Tau& tau, const SeriesConfig& cfg) {
  cfg.validate();
  require_series_domain(tau);

  const Complex i(0.0, 1.0);
  const Complex w = z - (1.0 + tau.value()) / 2.0;

  // The shift prefactor exp(-pi i tau / 4) and the q^{1/4} of the triple
  // product cancel; only the w-dependent part remains.
  const Complex prefix = -2.0 * std::exp(-kPi * i * (w + 0.5)) * std::sin(kPi * w);
  const Complex cos2w = std::cos(2.0 * kPi * w);

  const double e = std::exp(2.0 * kPi * std::abs(w.imag()));
  const double r2 = std::exp(-2.0 * kPi * tau.im());
  const double tail_scale = (4.0 * e + 3.0) / (-std::expm1(-2.0 * kPi * tau.im()));

  Complex prod = 1.0;
  double r2n = r2;  // |q|^{2(N+1)}
  for (int n = 0;; ++n) {
    const double tail = tail_scale * r2n;
    if (std::abs(prefix * prod) * std::expm1(tail) < cfg.tol) {
      return {prefix * prod, n};
    }
    if (n >= cfg.max_terms) fail_convergence("theta_product", cfg.max_terms);
    const Complex q2n = q_power(tau, 2.0 * (n + 1));
    const Complex q4n = q_power(tau, 4.0 * (n + 1));
    prod *= (1.0 - q2n) * (1.0 - 2.0 * cos2w * q2n + q4n);
    r2n *= r2;
  }
}

Complex theta_product(Complex z, const Tau& tau, const SeriesConfig& cfg) {
  return theta_product_detailed(z, tau, cfg).value;
}

Truncated<Complex> eta_detailed(const Tau& tau, const SeriesConfig& cfg) {
  cfg.validate();
  require_series_domain(tau);

  const double r2 = std::exp(-2.0 * kPi * tau.im());
  const double denom = -std::expm1(-2.0 * kPi * tau.im());
  Complex prod = 1.0;
  double r2n = r2;
  for (int n = 0;; ++n) {
    if (r2n / denom < cfg.tol) {
      return {q_power(tau, 1.0 / 12.0) * prod, n};
    }
    if (n >= cfg.max_terms) fail_convergence("eta", cfg.max_terms);
    prod *= 1.0 - q_power(tau, 2.0 * (n + 1));
    r2n *= r2;
  }
}

Complex eta(const Tau& tau, const SeriesConfig& cfg) { return eta_detailed(tau, cfg).value; }

Truncated<double> sum_log_abs_one_minus_q2n_detailed(const Tau& tau, const SeriesConfig& cfg) {
  cfg.validate();
  require_series_domain(tau);

  const double r2 = std::exp(-2.0 * kPi * tau.im());
  const double denom = -std::expm1(-2.0 * kPi * tau.im());
  double sum = 0.0;
  double r2n = r2;
  for (int n = 0;; ++n) {
    if (2.0 * r2n / denom < cfg.tol) {
      return {sum, n};
    }
    if (n >= cfg.max_terms) fail_convergence("sum_log_abs_one_minus_q2n", cfg.max_terms);
    const Complex x = q_power(tau, 2.0 * (n + 1));
    // |1 - x|^2 - 1 = -2 Re x + |x|^2
    const double d = -2.0 * x.real() + std::norm(x);
    if (!(d > -1.0) || !std::isfinite(d)) {
      throw DomainError("factor 1 - q^{2n} vanishes at n = " + std::to_string(n + 1));
    }
    sum += 0.5 * std::log1p(d);
    r2n *= r2;
  }
}

double sum_log_abs_one_minus_q2n(const Tau& tau, const SeriesConfig& cfg) {
  return sum_log_abs_one_minus_q2n_detailed(tau, cfg).value;
}

double theta_norm(Complex z, const Tau& tau, const SeriesConfig& cfg) {
  const double t = tau.im();
  const double y = z.imag();
  return std::pow(t, 0.25) * std::exp(-kPi * y * y / t) * std::abs(theta_series(z, tau, cfg));
}

double eta_norm(const Tau& tau, const SeriesConfig& cfg) {
  return std::pow(tau.im(), 0.25) * std::abs(eta(tau, cfg));
}

}  // namespace suita
