#include "suita/verify.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <random>
#include <sstream>

namespace suita {

namespace {

std::string fmt_tau(const Tau& tau) {
  std::ostringstream os;
  os << tau.re() << (tau.im() < 0 ? "-" : "+") << tau.im() << "i";
  return os.str();
}

std::string fmt_complex(Complex z) {
  std::ostringstream os;
  os << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
  return os.str();
}

}  // namespace

CheckReport make_report(std::string name, double observed, double expected, double tolerance,
                        std::string detail) {
  const bool passed = std::abs(observed - expected) <= tolerance;
  return {std::move(name), passed, observed, expected, tolerance, std::move(detail)};
}

std::vector<CheckReport> check_laplacian(const Tau& tau, std::span<const Complex> offsets, double h,
                                         const SeriesConfig& cfg) {
  if (!(h > 0.0) || h > 1e-2) throw PreconditionError("check_laplacian: stencil size must be in (0, 1e-2]");
  const TorusPoint origin(0.0, tau);
  std::vector<CheckReport> out;
  out.reserve(offsets.size());
  for (const Complex z : offsets) {
    if (dist_omega(TorusPoint(z, tau), origin) < 0.1) {
      throw PreconditionError("check_laplacian: offset " + fmt_complex(z) +
                              " is closer than 0.1 to the singularity");
    }
    auto g = [&](Complex p) { return green_function(TorusPoint(p, tau), origin, cfg); };
    const Complex ih(0.0, h);
    const double lap = (g(z + h) + g(z - h) + g(z + ih) + g(z - ih) - 4.0 * g(z)) / (h * h);
    out.push_back(make_report("laplacian", lap, -2.0 * kPi / tau.im(), 1e-4,
                              "tau=" + fmt_tau(tau) + " offset=" + fmt_complex(z)));
  }
  return out;
}

CheckReport check_capacity_limit(const Tau& tau, std::span<const double> radii, const SeriesConfig& cfg,
                                 Complex direction, Complex base) {
  if (radii.empty()) throw PreconditionError("check_capacity_limit: radii list is empty");
  for (std::size_t k = 0; k < radii.size(); ++k) {
    if (!(radii[k] > 0.0)) throw PreconditionError("check_capacity_limit: radii must be positive");
    if (k > 0 && !(radii[k] < radii[k - 1])) {
      throw PreconditionError("check_capacity_limit: radii must be strictly descending");
    }
  }
  if (radii.front() > 0.05) throw PreconditionError("check_capacity_limit: largest radius exceeds 0.05");
  if (std::abs(direction) == 0.0) throw PreconditionError("check_capacity_limit: zero direction");

  const Complex unit = direction / std::abs(direction);
  const TorusPoint w(base, tau);
  std::vector<double> x, v;
  for (const double r : radii) {
    const TorusPoint z(base + r * unit, tau);
    const double g = green_function(z, w, cfg);
    x.push_back(r * r);
    v.push_back(std::exp(g - std::log(dist_omega(z, w))));
  }

  // Neville's scheme evaluated at r^2 = 0.
  for (std::size_t level = 1; level < v.size(); ++level) {
    for (std::size_t k = v.size() - 1; k >= level; --k) {
      v[k] = (x[k - level] * v[k] - x[k] * v[k - 1]) / (x[k - level] - x[k]);
    }
  }
  return make_report("capacity_limit", v.back(), capacity(tau, cfg), 1e-6,
                     "tau=" + fmt_tau(tau) + " radii=" + std::to_string(radii.size()));
}

CheckReport check_theta_identity(std::span<const ThetaSample> samples, const SeriesConfig& cfg,
                                 double tolerance) {
  if (samples.empty()) throw PreconditionError("check_theta_identity: no samples");
  double worst = 0.0;
  std::string where;
  for (const auto& s : samples) {
    const double y = s.z.imag();
    const double gauss = std::exp(-kPi * y * y / s.tau.im());
    const double gap = gauss * std::abs(theta_series(s.z, s.tau, cfg) - theta_product(s.z, s.tau, cfg));
    if (gap >= worst || where.empty()) {
      worst = std::max(worst, gap);
      where = "z=" + fmt_complex(s.z) + " tau=" + fmt_tau(s.tau);
    }
  }
  return make_report("theta_identity", worst, 0.0, tolerance,
                     std::to_string(samples.size()) + " samples, worst at " + where);
}

std::vector<ThetaSample> theta_samples(int sample_count, std::uint64_t seed) {
  if (sample_count < 1) throw PreconditionError("check_theta_identity: sample_count must be >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<ThetaSample> out;
  out.reserve(static_cast<std::size_t>(sample_count));
  for (int k = 0; k < sample_count; ++k) {
    const double re = unit(rng) - 0.5;
    const double im = 0.25 + 4.75 * unit(rng);
    const Tau tau(re, im);
    const double a = unit(rng);
    const double b = unit(rng);
    out.push_back({a + b * tau.value(), tau});
  }
  return out;
}

CheckReport check_theta_identity(int sample_count, std::uint64_t seed, const SeriesConfig& cfg) {
  const auto samples = theta_samples(sample_count, seed);
  return check_theta_identity(samples, cfg);
}

double cell_average_log_abs(const Tau& tau) {
  const double tr = tau.re();
  const double ti = tau.im();
  // Closed form of the a-integral of log|u + i v| at fixed b.
  auto antideriv = [](double u, double v) {
    const double r2 = u * u + v * v;
    const double lg = r2 > 0.0 ? u * std::log(r2) : 0.0;
    const double at = v != 0.0 ? 2.0 * v * std::atan(u / v) : 0.0;
    return 0.5 * (lg - 2.0 * u + at);
  };
  auto inner = [&](double b) {
    const double v = b * ti;
    return antideriv(0.5 + b * tr, v) - antideriv(-0.5 + b * tr, v);
  };
  using boost::math::quadrature::gauss_kronrod;
  return gauss_kronrod<double, 61>::integrate(inner, -0.5, 0.0, 15, 1e-14) +
         gauss_kronrod<double, 61>::integrate(inner, 0.0, 0.5, 15, 1e-14);
}

CheckReport check_mean_zero(const Tau& tau, int quad_points, const SeriesConfig& cfg) {
  if (quad_points < 64) throw PreconditionError("check_mean_zero: need at least 64 points per axis");
  const int n = quad_points;
  const double h = 1.0 / n;
  const TorusPoint origin(0.0, tau);

  // Singular cell: average of log dist_omega over the cell plus the finite
  // part g - log dist_omega -> log c at the centre.
  const double singular =
      std::log(capacity(tau, cfg)) + std::log(h) + cell_average_log_abs(tau) - 0.5 * std::log(tau.im());

  double total = 0.0;
  for (int j = 0; j < n; ++j) {
    double row = 0.0;
    for (int i = 0; i < n; ++i) {
      if (i == 0 && j == 0) {
        row += singular;
        continue;
      }
      const Complex z = i * h + (j * h) * tau.value();
      row += green_function(TorusPoint(z, tau), origin, cfg);
    }
    total += row;
  }
  const double integral = total * h * h;
  return make_report("mean_zero", integral, 0.0, 1e-3,
                     "tau=" + fmt_tau(tau) + " points=" + std::to_string(n) + "^2");
}

std::vector<Complex> default_offsets(const Tau& tau) {
  // Cell interior: the stencil's own error near the pole is about h^2 / r^4.
  std::vector<Complex> out;
  for (const double b : {0.4, 0.5, 0.6}) {
    for (const double a : {0.4, 0.5, 0.6}) out.push_back(a + b * tau.value());
  }
  for (const auto& [a, b] : {std::pair{0.5, 0.3}, std::pair{0.5, 0.7}, std::pair{0.3, 0.5}, std::pair{0.7, 0.5}}) {
    out.push_back(a + b * tau.value());
  }
  return out;
}

std::vector<BatteryEntry> run_battery(Suite suite, std::uint64_t seed, const SeriesConfig& cfg) {
  std::vector<BatteryEntry> out;
  const bool all = suite == Suite::all;
  if (all || suite == Suite::theta) {
    out.push_back({check_theta_identity(200, seed, cfg), true});
  }
  if (all || suite == Suite::laplacian) {
    for (const Tau& tau : {Tau(0.0, 1.0), Tau(0.0, 2.0), Tau(0.5, 1.91)}) {
      const auto offsets = default_offsets(tau);
      for (auto& r : check_laplacian(tau, offsets, 1e-3, cfg)) out.push_back({std::move(r), true});
    }
  }
  if (all || suite == Suite::capacity) {
    const double radii[] = {1e-2, 1e-3, 1e-4};
    for (const Tau& tau : {Tau(0.0, 2.0), Tau(0.5, 1.91)}) {
      out.push_back({check_capacity_limit(tau, radii, cfg), true});
    }
  }
  if (all || suite == Suite::meanzero) {
    for (const Tau& tau : {Tau(0.0, 1.0), Tau(0.0, 2.0)}) {
      out.push_back({check_mean_zero(tau, 256, cfg), false});
    }
  }
  return out;
}

}  // namespace suita
