#pragma once

// Jacobi theta and Dedekind eta evaluation on the upper half-plane.
//
// Conventions:
//   q          = exp(pi i tau)                       (the nome)
//   theta(z;t) = sum_n exp(pi i n^2 tau + 2 pi i n z)
//   eta(tau)   = exp(pi i tau / 12) prod_{n>=1} (1 - q^{2n})
//
// Fractional powers of q are always taken as exp(pi i tau * exponent), never
// as a principal-branch power of the complex number q.
//
// Every series is truncated with an explicit tail bound against
// SeriesConfig::tol; if the bound cannot be met within max_terms the call
// throws NonConvergenceError.

#include <complex>

#include "suita/error.hpp"

namespace suita {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

// Series evaluations refuse Im tau below this value.
inline constexpr double kImFloor = 1e-3;

// A point of the upper half-plane.
class Tau {
 public:
  // Throws DomainError unless im > 0 and both parts are finite.
  Tau(double re, double im);

  double re() const noexcept { return re_; }
  double im() const noexcept { return im_; }
  Complex value() const noexcept { return {re_, im_}; }

  // tau + k for integer k; same lattice.
  Tau shifted(double dre) const { return Tau(re_ + dre, im_); }
  // -conj(tau), the mirror image in the imaginary axis.
  Tau reflected() const { return Tau(-re_, im_); }

  friend bool operator==(const Tau&, const Tau&) = default;

 private:
  double re_;
  double im_;
};

struct SeriesConfig {
  double tol = 1e-14;
  int max_terms = 100000;

  // Throws PreconditionError on tol <= 0 or max_terms < 1.
  void validate() const;
};

// A truncated series value together with the index it was cut at.
template <class T>
struct Truncated {
  T value;
  int terms;
};

Complex nome(const Tau& tau);

// Symmetric partial sum over n in [-N, N].
Truncated<Complex> theta_series_detailed(Complex z, const Tau& tau, const SeriesConfig& cfg = {});
Complex theta_series(Complex z, const Tau& tau, const SeriesConfig& cfg = {});

// Triple-product route through the half-period shift w = z - (1 + tau)/2:
//   theta(z) = -exp(-pi i tau/4 - pi i (w + 1/2)) * 2 exp(pi i tau/4) sin(pi w)
//              * prod_n (1 - q^{2n}) (1 - 2 cos(2 pi w) q^{2n} + q^{4n}).
Truncated<Complex> theta_product_detailed(Complex z, const Tau& tau, const SeriesConfig& cfg = {});
Complex theta_product(Complex z, const Tau& tau, const SeriesConfig& cfg = {});

Truncated<Complex> eta_detailed(const Tau& tau, const SeriesConfig& cfg = {});
Complex eta(const Tau& tau, const SeriesConfig& cfg = {});

// S(tau) = sum_{n>=1} log |1 - q^{2n}|.
Truncated<double> sum_log_abs_one_minus_q2n_detailed(const Tau& tau, const SeriesConfig& cfg = {});
double sum_log_abs_one_minus_q2n(const Tau& tau, const SeriesConfig& cfg = {});

// (Im tau)^{1/4} exp(-pi (Im z)^2 / Im tau) |theta(z; tau)|.
double theta_norm(Complex z, const Tau& tau, const SeriesConfig& cfg = {});

// (Im tau)^{1/4} |eta(tau)|.
double eta_norm(const Tau& tau, const SeriesConfig& cfg = {});

}  // namespace suita
