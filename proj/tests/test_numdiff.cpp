#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "fueterkit/contour.hpp"
#include "fueterkit/error.hpp"
#include "fueterkit/kernels.hpp"
#include "fueterkit/numdiff.hpp"
#include "fueterkit/qpoly.hpp"

using namespace fueterkit;

namespace {

std::vector<Quaternion> samples(std::uint64_t seed, int n, double scale) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> d(-scale, scale);
  std::vector<Quaternion> out;
  for (int i = 0; i < n; ++i) out.emplace_back(d(rng), d(rng), d(rng), d(rng));
  return out;
}

const QFunction identity = [](const Quaternion& q) { return q; };
const QFunction square = [](const Quaternion& q) { return q * q; };

}  // namespace

TEST(FdApply, DbarOfIdentity) {
  for (const Quaternion& q : samples(1, 10, 2.0)) {
    EXPECT_LE((fd_apply(FDOperator::Dbar, identity, q) - Quaternion(4.0)).norm(), 1e-8);
    EXPECT_LE((fd_apply(FDOperator::Dbar, identity, q, Side::Right) - Quaternion(4.0)).norm(), 1e-8);
    EXPECT_LE((fd_apply(FDOperator::D, identity, q) - Quaternion(-2.0)).norm(), 1e-8);
  }
}

TEST(FdApply, LaplacianOfSquare) {
  for (const Quaternion& q : samples(2, 10, 2.0)) {
    EXPECT_LE((fd_apply(FDOperator::Delta, square, q) - Quaternion(-4.0)).norm(), 1e-6);
  }
}

TEST(FdApply, AppellPolynomialIsMonogenic) {
  const QFunction q2 = [](const Quaternion& q) { return appell_value(2, q); };
  for (const Quaternion& q : samples(3, 10, 1.5)) {
    EXPECT_LE(fd_apply(FDOperator::D, q2, q).norm(), 1e-6 * (1.0 + q.norm2()));
  }
}

TEST(FdApply, MatchesSymbolicDbar) {
  for (int n = 1; n <= 5; ++n) {
    const QFunction f = [n](const Quaternion& q) { return pow(q, n); };
    for (const Quaternion& q : samples(10 + n, 5, 1.0)) {
      const Quaternion expected = dbar_monomial(n).evaluate(q);
      EXPECT_LE(relative_error(fd_apply(FDOperator::Dbar, f, q), expected, 1.0), 1e-8) << n;
    }
  }
}

TEST(FdApply, DSquaredKillsDbarMonomial) {
  const QFunction f = [](const Quaternion& q) { return dbar_monomial(3).evaluate(q); };
  for (const Quaternion& q : samples(4, 5, 1.0)) {
    EXPECT_LE(fd_apply(FDOperator::D2, f, q).norm(), 1e-5);
  }
}

TEST(FdPartial, Linear) {
  const QFunction f = [](const Quaternion& q) { return Quaternion(3.0 * q.y, 0, 0, -q.w); };
  EXPECT_LE((fd_partial(f, Quaternion(), 2, 1e-3) - Quaternion(3.0)).norm(), 1e-12);
  EXPECT_LE((fd_partial(f, Quaternion(), 0, 1e-3) - Quaternion(0, 0, 0, -1)).norm(), 1e-12);
}

TEST(AxialParts, Recombine) {
  const ImaginaryUnit w = ImaginaryUnit::from_vector(1, 2, 2);
  const auto [A, B] = axial_parts(square, w);
  const double q0 = 0.7, r = 1.3;
  EXPECT_LE((A(q0, r) + w.value() * B(q0, r) - square(Quaternion(q0) + r * w.value())).norm(), 1e-14);
  EXPECT_LE((A(q0, r) - Quaternion(q0 * q0 - r * r)).norm(), 1e-14);
  EXPECT_LE((B(q0, r) - Quaternion(2 * q0 * r)).norm(), 1e-14);
}

TEST(Vekua, Examples) {
  const AxialFunction A = [](double q0, double) { return Quaternion(8.0 * q0); };
  const AxialFunction B = [](double, double r) { return Quaternion(4.0 * r); };
  const auto [r1, r2] = vekua2_residual(A, B, 0.4, 1.1);
  EXPECT_LE(r1.norm(), 1e-8);
  EXPECT_LE(r2.norm(), 1e-8);

  const AxialFunction c = [](double, double) { return Quaternion(2.5); };
  const AxialFunction zero = [](double, double) { return Quaternion(); };
  const auto [c1, c2] = vekua2_residual(c, zero, -0.3, 0.6);
  EXPECT_LE(c1.norm(), 1e-10);
  EXPECT_LE(c2.norm(), 1e-10);
}

TEST(Vekua, PolyanalyticIntegralOfCube) {
  const SliceFunction f = tf_extend(stem_power(3));
  const SliceContour c = SliceContour::disk(0.0, 4.0, ImaginaryUnit::e1(), 128);
  const QFunction g = [&](const Quaternion& q) { return polyanalytic_integral_eval(f, q, c); };
  const auto [A, B] = axial_parts(g, ImaginaryUnit::e2());
  for (double q0 : {-0.5, 0.5}) {
    for (double r : {0.5, 1.0, 2.0}) {
      const auto [r1, r2] = vekua2_residual(A, B, q0, r);
      const double scale = 1.0 + g(Quaternion(q0, 0, r, 0)).norm();
      EXPECT_LE(r1.norm(), 1e-4 * scale);
      EXPECT_LE(r2.norm(), 1e-4 * scale);
    }
  }
}

TEST(Vekua, NonPositiveRadius) {
  const AxialFunction z = [](double, double) { return Quaternion(); };
  for (double r : {0.0, -1.0}) {
    try {
      vekua2_residual(z, z, 0.0, r);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::NonPositiveRadius);
    }
  }
}

TEST(Vekua, DetectsNonPolyanalyticInput) {
  const AxialFunction A = [](double q0, double) { return Quaternion(q0 * q0 * q0); };
  const AxialFunction zero = [](double, double) { return Quaternion(); };
  const auto [r1, r2] = vekua2_residual(A, zero, 1.0, 1.0);
  EXPECT_GT(r1.norm() + r2.norm(), 1.0);
}

TEST(ResidualSuite, FKernelIsMonogenic) {
  const Quaternion s(2.5, 0.5, 0, 0);
  const QFunction f = [&](const Quaternion& q) { return kernel_eval(KernelKind::FL, s, q); };
  const ResidualReport rep = residual_suite(f, ResidualKind::Monogenic, samples(5, 20, 0.8));
  EXPECT_LE(rep.max_residual, 1e-6);
  EXPECT_EQ(rep.samples, 20u);
  const QFunction fr = [&](const Quaternion& q) { return kernel_eval(KernelKind::FR, s, q); };
  EXPECT_LE(residual_suite(fr, ResidualKind::Monogenic, samples(6, 20, 0.8), Side::Right).max_residual, 1e-6);
}

TEST(ResidualSuite, P2KernelIsPolyanalytic) {
  const Quaternion s(2.5, 0, 0.5, 0);
  const QFunction f = [&](const Quaternion& q) { return kernel_eval(KernelKind::P2L, s, q); };
  EXPECT_LE(residual_suite(f, ResidualKind::Polyanalytic2, samples(7, 20, 0.8)).max_residual, 1e-4);
}

TEST(ResidualSuite, IdentityFailsMonogenicCheck) {
  const ResidualReport rep = residual_suite(identity, ResidualKind::Monogenic, {Quaternion()});
  EXPECT_NEAR(rep.max_residual, 2.0, 1e-8);
  EXPECT_EQ(to_string(rep.kind), "monogenic");
}

TEST(ResidualSuite, HarmonicFunctions) {
  const QFunction h = [](const Quaternion& q) { return Quaternion(q.w * q.x - q.y * q.z); };
  EXPECT_LE(residual_suite(h, ResidualKind::Harmonic, samples(8, 10, 1.0)).max_residual, 1e-6);
}
