#pragma once

// Geometry and potential theory on the complex torus X = C / (Z + tau Z)
// with the flat unit-area metric omega = (1 / Im tau) dz (x) dzbar.

#include <complex>

#include "suita/specfun.hpp"

namespace suita {

// Distances at or below this are treated as the same torus point.
inline constexpr double kCoincidenceTol = 1e-12;

// Representative of z in the fundamental cell {a + b tau : a, b in [0, 1)}.
Complex canonical_rep(Complex z, const Tau& tau);

// Representative of z with lattice coordinates a, b in [-1/2, 1/2).
Complex centered_rep(Complex z, const Tau& tau);

struct TorusPoint {
  Complex z;
  Tau tau;

  TorusPoint(Complex z_, Tau tau_) : z(z_), tau(tau_) {}

  Complex canonical() const { return canonical_rep(z, tau); }
};

// Flat geodesic distance in the unit-area metric. Throws PreconditionError if
// the points live on different lattices.
double dist_omega(const TorusPoint& p, const TorusPoint& q);

// Equality as points of X (difference reduces to zero in the cell).
bool operator==(const TorusPoint& p, const TorusPoint& q);

// Arakelov-Green's function
//   g(z, w) = log( ||theta||(z - w + (1 + tau)/2; tau) / ||eta||(tau) ).
// Throws CoincidentPointsError when p == q.
double green_function(const TorusPoint& p, const TorusPoint& q, const SeriesConfig& cfg = {});

// Modified logarithmic capacity
//   c(tau) = sqrt(Im tau) 2 pi exp(-(pi/6) Im tau + 2 S(tau)).
// The torus is homogeneous, so c does not depend on the base point.
double capacity(const Tau& tau, const SeriesConfig& cfg = {});

// Coefficient of the Bergman (1,1)-form (1 / Im tau) dz ^ dzbar.
double bergman_density(const Tau& tau);

// The four summands of F(tau) = log(pi K / c^2).
struct RatioComponents {
  double f;
  double log_im_term;  // -2 log Im tau
  double const_term;   // -log 4 pi
  double linear_term;  // (pi / 3) Im tau
  double qsum_term;    // -4 S(tau)
};

RatioComponents f_ratio(const Tau& tau, const SeriesConfig& cfg = {});

}  // namespace suita
