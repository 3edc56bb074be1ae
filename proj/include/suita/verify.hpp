#pragma once

// Numerical checks tying the implementation to the defining properties of
// the Green's function and capacity on the torus. Each check returns a
// self-auditing CheckReport: passed == (|observed - expected| <= tolerance).

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "suita/torus.hpp"

namespace suita {

struct CheckReport {
  std::string name;
  bool passed;
  double observed;
  double expected;
  double tolerance;
  std::string detail;
};

CheckReport make_report(std::string name, double observed, double expected, double tolerance,
                        std::string detail = {});

// Five-point Euclidean Laplacian of g(. , 0) at each offset against
// -2 pi / Im tau, tolerance 1e-4. Offsets need dist_omega >= 0.1 from 0;
// 0 < h <= 1e-2. The stencil applied to the log|z| part of g is off by about
// -h^2 cos(4 arg z) / |z|^4, so at h = 1e-3 the tolerance is met only for
// Euclidean distances beyond roughly 0.32 from the lattice.
std::vector<CheckReport> check_laplacian(const Tau& tau, std::span<const Complex> offsets, double h = 1e-3,
                                         const SeriesConfig& cfg = {});

// exp(g(w + r d, w) - log dist_omega) extrapolated to r -> 0 (polynomial in
// r^2 through all radii) against capacity(tau). Radii must be strictly
// descending, positive, with the largest at most 0.05.
CheckReport check_capacity_limit(const Tau& tau, std::span<const double> radii, const SeriesConfig& cfg = {},
                                 Complex direction = 1.0, Complex base = 0.0);

struct ThetaSample {
  Complex z;
  Tau tau;
};

// Largest Gaussian-normalized gap exp(-pi (Im z)^2 / Im tau) |series - product|
// over the samples. The normalization makes the gap comparable across the
// cell, where |theta| itself grows like exp(pi (Im z)^2 / Im tau).
CheckReport check_theta_identity(std::span<const ThetaSample> samples, const SeriesConfig& cfg = {},
                                 double tolerance = 1e-10);

// Seeded samples: Re tau in [-1/2, 1/2), Im tau in [0.25, 5], z = a + b tau
// with a, b in [0, 1).
std::vector<ThetaSample> theta_samples(int sample_count, std::uint64_t seed);
CheckReport check_theta_identity(int sample_count, std::uint64_t seed, const SeriesConfig& cfg = {});

// Average of log|a + b tau| over the square a, b in [-1/2, 1/2].
double cell_average_log_abs(const Tau& tau);

// Node-centred midpoint rule for the integral of g(., 0) over X against the
// unit-area measure; the node on the singularity is replaced by the cell
// average of log dist_omega plus log capacity. Requires quad_points >= 64.
CheckReport check_mean_zero(const Tau& tau, int quad_points = 256, const SeriesConfig& cfg = {});

enum class Suite { all, theta, laplacian, capacity, meanzero };

struct BatteryEntry {
  CheckReport report;
  bool hard;  // false: reported as a warning only
};

std::vector<BatteryEntry> run_battery(Suite suite, std::uint64_t seed = 42, const SeriesConfig& cfg = {});

// Thirteen Laplacian offsets a + b tau around the cell centre.
std::vector<Complex> default_offsets(const Tau& tau);

}  // namespace suita
