#include <gtest/gtest.h>

#include <cmath>

#include "suita/verify.hpp"

namespace suita {
namespace {

bool self_consistent(const CheckReport& r) {
  return r.passed == (std::abs(r.observed - r.expected) <= r.tolerance);
}

TEST(Report, PassedFlagRecomputable) {
  EXPECT_TRUE(make_report("x", 1.0, 1.0 + 1e-9, 1e-8).passed);
  EXPECT_FALSE(make_report("x", 1.0, 1.1, 1e-8).passed);
  EXPECT_FALSE(make_report("x", NAN, 0.0, 1.0).passed);
}

TEST(Laplacian, Examples) {
  const Complex off1[] = {Complex(0.3, 0.4)};
  const auto r1 = check_laplacian(Tau(0, 2), off1);
  ASSERT_EQ(r1.size(), 1u);
  EXPECT_TRUE(r1[0].passed) << r1[0].observed;
  EXPECT_NEAR(r1[0].observed, -kPi, 1e-4);

  const Complex off2[] = {Complex(0.5, 0.0)};
  const auto r2 = check_laplacian(Tau(0, 1), off2);
  EXPECT_NEAR(r2[0].observed, -2 * kPi, 1e-4);
  EXPECT_TRUE(self_consistent(r2[0]));
}

TEST(Laplacian, Preconditions) {
  const Complex close[] = {Complex(1e-3, 0)};
  EXPECT_THROW(check_laplacian(Tau(0, 2), close), PreconditionError);
  const Complex ok[] = {Complex(0.5, 0.5)};
  EXPECT_THROW(check_laplacian(Tau(0, 2), ok, 0.1), PreconditionError);
  EXPECT_THROW(check_laplacian(Tau(0, 2), ok, 0.0), PreconditionError);
}

// Near the exclusion radius the stencil's discretization error of log|z|,
// -h^2 cos(4 arg z) / |z|^4, dominates and the check honestly fails.
TEST(Laplacian, StencilErrorNearPole) {
  const double h = 1e-3;
  const Complex z(0.2, 0.0);  // dist_omega = 0.1414 on tau = 2i
  const Complex off[] = {z};
  const auto r = check_laplacian(Tau(0, 2), off, h);
  const double predicted = -h * h * std::cos(4 * std::arg(z)) / std::pow(std::abs(z), 4);
  EXPECT_FALSE(r[0].passed);
  EXPECT_NEAR(r[0].observed - r[0].expected, predicted, 3e-5);
}

TEST(Laplacian, DefaultOffsetsAllPass) {
  for (const Tau& tau : {Tau(0, 1), Tau(0, 2), Tau(0.5, 1.91)}) {
    const auto offsets = default_offsets(tau);
    EXPECT_GE(offsets.size(), 10u);
    for (const auto& r : check_laplacian(tau, offsets)) {
      EXPECT_TRUE(r.passed) << r.detail << " observed " << r.observed;
    }
  }
}

TEST(CapacityLimit, Examples) {
  const double radii[] = {1e-2, 1e-3, 1e-4};
  const auto a = check_capacity_limit(Tau(0, 2), radii);
  EXPECT_TRUE(a.passed) << a.observed - a.expected;
  EXPECT_NEAR(a.expected, 3.1181694995108225, 1e-12);
  const auto b = check_capacity_limit(Tau(0.5, 1.91), radii);
  EXPECT_TRUE(b.passed) << b.observed - b.expected;
}

TEST(CapacityLimit, OtherDirectionAndBasePoint) {
  const double radii[] = {1e-2, 1e-3, 1e-4};
  const Tau tau(0.5, 1.91);
  const auto r = check_capacity_limit(tau, radii, {}, Complex(0, 1), 0.3 + 0.2 * tau.value());
  EXPECT_NEAR(r.observed, r.expected, 1e-5);
}

TEST(CapacityLimit, Preconditions) {
  const Tau tau(0, 2);
  EXPECT_THROW(check_capacity_limit(tau, std::span<const double>{}), PreconditionError);
  const double ascending[] = {1e-4, 1e-3};
  EXPECT_THROW(check_capacity_limit(tau, ascending), PreconditionError);
  const double big[] = {0.1, 1e-3};
  EXPECT_THROW(check_capacity_limit(tau, big), PreconditionError);
}

TEST(ThetaIdentity, SeededBattery) {
  const auto r = check_theta_identity(200, 42);
  EXPECT_TRUE(r.passed) << r.observed;
  EXPECT_LE(r.observed, 1e-10);
  EXPECT_EQ(r.tolerance, 1e-10);
}

TEST(ThetaIdentity, SinglePoint) {
  const ThetaSample s[] = {{0.0, Tau(0, 1)}};
  const auto r = check_theta_identity(s);
  EXPECT_LE(r.observed, 1e-12);
}

TEST(ThetaIdentity, Preconditions) {
  EXPECT_THROW(check_theta_identity(0, 42), PreconditionError);
}

TEST(ThetaIdentity, SamplesAreSeeded) {
  const auto a = theta_samples(20, 9), b = theta_samples(20, 9), c = theta_samples(20, 10);
  for (std::size_t k = 0; k < a.size(); ++k) {
    EXPECT_EQ(a[k].z, b[k].z);
    EXPECT_EQ(a[k].tau, b[k].tau);
    EXPECT_GE(a[k].tau.im(), 0.25);
    EXPECT_LE(a[k].tau.im(), 5.0);
  }
  EXPECT_NE(a[0].z, c[0].z);
}

// Cell average of log|a + b tau| against brute-force midpoint sums.
TEST(MeanZero, CellAverageOfLog) {
  for (const Tau& tau : {Tau(0, 1), Tau(0.5, 1.91)}) {
    const int n = 2000;  // even: no node at the origin
    double s = 0;
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) {
        const double a = -0.5 + (i + 0.5) / n, b = -0.5 + (j + 0.5) / n;
        s += std::log(std::abs(a + b * tau.value()));
      }
    EXPECT_NEAR(cell_average_log_abs(tau), s / (double(n) * n), 1e-5);
  }
}

TEST(MeanZero, Examples) {
  for (const Tau& tau : {Tau(0, 2), Tau(0, 1)}) {
    const auto r = check_mean_zero(tau, 256);
    EXPECT_TRUE(r.passed) << r.observed;
    EXPECT_LE(std::abs(r.observed), 1e-3);
  }
  EXPECT_THROW(check_mean_zero(Tau(0, 1), 8), PreconditionError);
}

TEST(Battery, DeterministicAndSelfAuditing) {
  const auto a = run_battery(Suite::theta, 5);
  const auto b = run_battery(Suite::theta, 5);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    EXPECT_EQ(a[k].report.observed, b[k].report.observed);
    EXPECT_TRUE(self_consistent(a[k].report));
  }
  const auto mz = run_battery(Suite::meanzero);
  ASSERT_EQ(mz.size(), 2u);
  for (const auto& e : mz) EXPECT_FALSE(e.hard);
  const auto cap = run_battery(Suite::capacity);
  ASSERT_EQ(cap.size(), 2u);
  for (const auto& e : cap) EXPECT_TRUE(e.hard && e.report.passed);
}

}  // namespace
}  // namespace suita
