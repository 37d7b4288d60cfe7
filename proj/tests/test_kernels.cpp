#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "fueterkit/error.hpp"
#include "fueterkit/kernels.hpp"

using namespace fueterkit;

namespace {

const Quaternion e1 = Quaternion::e1();
const Quaternion e2 = Quaternion::e2();

Quaternion random_q(std::mt19937_64& rng, double scale) {
  std::uniform_real_distribution<double> d(-scale, scale);
  return {d(rng), d(rng), d(rng), d(rng)};
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::InvalidArgument;
}

// Random s with |q| / |s| = rho.
Quaternion scaled_s(std::mt19937_64& rng, const Quaternion& q, double rho) {
  const Quaternion dir = random_q(rng, 1.0);
  return (q.norm() / rho / dir.norm()) * dir;
}

}  // namespace

TEST(Qcs, Examples) {
  EXPECT_EQ(qcs(Quaternion(2.0), e1), Quaternion(5.0));
  EXPECT_EQ(qcs(Quaternion(1.5), Quaternion(1.5)), Quaternion(0.0));
  EXPECT_LE(qcs(e2, e1).norm(), 1e-15);
  EXPECT_LE(qcs(Quaternion(1, 0, 2, 0), Quaternion(1, 2, 0, 0)).norm(), 1e-15);
}

TEST(KernelEval, Examples) {
  const Quaternion s(2.0);
  EXPECT_LE(relative_error(kernel_eval(KernelKind::SL, s, e1), Quaternion(0.4, 0.2, 0, 0)), 1e-15);
  EXPECT_LE(relative_error(kernel_eval(KernelKind::FL, s, e1), Quaternion(-0.32, -0.16, 0, 0)), 1e-15);
  EXPECT_LE(relative_error(kernel_eval(KernelKind::P2L, s, e1), Quaternion(0.64, 0.32, 0, 0)), 1e-15);
  EXPECT_LE(relative_error(kernel_eval(KernelKind::P2R, s, e1), Quaternion(0.64, 0.32, 0, 0)), 1e-15);
}

TEST(KernelEval, RealPointGivesResolvent) {
  const Quaternion s(0.5, 1.0, -2.0, 0.3);
  const double q0 = 0.7;
  const Quaternion expected = (s - Quaternion(q0)).inverse();
  EXPECT_LE(relative_error(kernel_eval(KernelKind::SL, s, Quaternion(q0)), expected), 1e-15);
  EXPECT_LE(relative_error(kernel_eval(KernelKind::SR, s, Quaternion(q0)), expected), 1e-15);
}

TEST(KernelEval, OnSpectrumSphereThrows) {
  for (KernelKind k : {KernelKind::SL, KernelKind::SR, KernelKind::FL, KernelKind::FR,
                       KernelKind::P2L, KernelKind::P2R}) {
    EXPECT_EQ(code_of([&] { kernel_eval(k, e2, e1); }), ErrorCode::OnSpectrumSphere);
    EXPECT_EQ(code_of([&] { kernel_eval(k, Quaternion(3.0), Quaternion(3.0)); }),
              ErrorCode::OnSpectrumSphere);
  }
}

TEST(KernelEval, NoncommutingSlicesMatchCauchyKernelInverse) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 50; ++i) {
    const Quaternion q = random_q(rng, 1.0);
    const Quaternion s = random_q(rng, 1.0);
    if (same_sphere(q, s, 1e-3)) continue;
    // S_L^{-1}(s, q) = -(q^2 - 2 q Re(s) + |s|^2)^{-1} (q - sbar)
    const Quaternion sl = kernel_eval(KernelKind::SL, s, q);
    const Quaternion alt = -((q * q - 2.0 * s.real() * q + Quaternion(s.norm2())).inverse() * (q - s.conj()));
    EXPECT_LE(relative_error(sl, alt), 1e-12);
  }
}

TEST(KernelEval, FKernelIdentity) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 100; ++i) {
    const Quaternion q = random_q(rng, 1.0), s = random_q(rng, 2.0);
    if (same_sphere(q, s, 1e-2)) continue;
    const Quaternion fl = kernel_eval(KernelKind::FL, s, q);
    const Quaternion fr = kernel_eval(KernelKind::FR, s, q);
    const Quaternion rhs = -4.0 * qcs(s, q).inverse();
    EXPECT_LE(relative_error(fl * s - q * fl, rhs), 1e-11);
    EXPECT_LE(relative_error(s * fr - fr * q, rhs), 1e-11);
  }
}

TEST(KernelKind, ParseAndSide) {
  EXPECT_EQ(parse_kernel_kind("P2R"), KernelKind::P2R);
  EXPECT_EQ(to_string(KernelKind::FL), "FL");
  EXPECT_EQ(kernel_side(KernelKind::SR), Side::Right);
  EXPECT_EQ(kernel_side(KernelKind::P2L), Side::Left);
  EXPECT_EQ(code_of([] { parse_kernel_kind("P3L"); }), ErrorCode::InvalidArgument);
}

TEST(DbarSeries, Examples) {
  const SeriesValue v = dbar_kernel_series(Side::Left, Quaternion(2.0), e1, 1e-9);
  EXPECT_LE((v.value - Quaternion(0.64, 0.32, 0, 0)).norm(), 1e-9);
  EXPECT_LE(v.tail_bound, 1e-9);

  const SeriesValue z = dbar_kernel_series(Side::Left, Quaternion(10.0), Quaternion(), 1e-12);
  EXPECT_NEAR(z.value.w, 0.04, 1e-15);
  EXPECT_LE(relative_error(z.value, kernel_eval(KernelKind::P2L, Quaternion(10.0), Quaternion())), 1e-14);
}

TEST(DbarSeries, NearBoundaryOfDisk) {
  const Quaternion s(2.0), q(0, 1.9, 0, 0);
  const double tol = 1e-9;
  const SeriesValue v = dbar_kernel_series(Side::Left, s, q, tol);
  EXPECT_LE((v.value - kernel_eval(KernelKind::P2L, s, q)).norm(), tol);
  EXPECT_GT(v.terms, static_cast<int>(std::log(tol) / std::log(0.95)));
}

TEST(DbarSeries, NotInDisk) {
  EXPECT_EQ(code_of([] { dbar_kernel_series(Side::Left, Quaternion(1.0), Quaternion(0, 1, 0, 0), 1e-9); }),
            ErrorCode::NotInDisk);
  EXPECT_EQ(code_of([] { appell_kernel_series(Side::Right, Quaternion(1.0), Quaternion(2.0), 1e-9); }),
            ErrorCode::NotInDisk);
  EXPECT_EQ(code_of([] { cauchy_kernel_series(Side::Left, Quaternion(1.0), Quaternion(1.0), 1e-9); }),
            ErrorCode::NotInDisk);
  EXPECT_EQ(code_of([] { dbar_series_terms_for(0.5, 1.0, 0.0); }), ErrorCode::InvalidArgument);
}

TEST(DbarSeries, BothSidesWithinTailBound) {
  std::mt19937_64 rng(31);
  for (double rho : {0.25, 0.5, 0.9}) {
    for (int i = 0; i < 10; ++i) {
      const Quaternion q = random_q(rng, 1.0);
      const Quaternion s = scaled_s(rng, q, rho);
      for (Side side : {Side::Left, Side::Right}) {
        const KernelKind k = side == Side::Left ? KernelKind::P2L : KernelKind::P2R;
        const SeriesValue v = dbar_kernel_series(side, s, q, 1e-10);
        EXPECT_LE((v.value - kernel_eval(k, s, q)).norm(), v.tail_bound + 1e-13);
        const SeriesValue a = appell_kernel_series(side, s, q, 1e-10);
        EXPECT_LE((a.value - kernel_eval(k, s, q)).norm(), a.tail_bound + 1e-13);
      }
    }
  }
}

TEST(DbarSeries, TailBoundIsMonotone) {
  double prev = dbar_series_tail_bound(0.5, 1.0, 1);
  for (int n = 2; n < 50; ++n) {
    const double b = dbar_series_tail_bound(0.5, 1.0, n);
    EXPECT_LT(b, prev);
    prev = b;
  }
  EXPECT_TRUE(std::isinf(dbar_series_tail_bound(1.0, 1.0, 10)));
  const int n = dbar_series_terms_for(0.5, 1.0, 1e-8);
  EXPECT_LE(dbar_series_tail_bound(0.5, 1.0, n), 1e-8);
  EXPECT_GT(dbar_series_tail_bound(0.5, 1.0, n - 1), 1e-8);
}

TEST(AppellSeries, Examples) {
  const SeriesValue v = appell_kernel_series(Side::Left, Quaternion(2.0), e1, 1e-9);
  EXPECT_LE((v.value - Quaternion(0.64, 0.32, 0, 0)).norm(), 1e-9);

  const Quaternion s(10.0);
  EXPECT_LE((appell_kernel_series(Side::Left, s, Quaternion(), 1e-12).value -
             dbar_kernel_series(Side::Left, s, Quaternion(), 1e-12).value).norm(), 1e-15);

  const Quaternion s3(3.0), q(1, 0, 1, 0);
  EXPECT_LE((appell_kernel_series(Side::Left, s3, q, 1e-10).value -
             dbar_kernel_series(Side::Left, s3, q, 1e-10).value).norm(), 2e-10);
}

TEST(AppellSeries, FixedTermsMatchTermByTerm) {
  const Quaternion s(0.4, 1.5, -0.8, 1.0), q(0.3, 0.2, -0.5, 0.1);
  for (int n = 1; n <= 12; ++n) {
    for (Side side : {Side::Left, Side::Right}) {
      EXPECT_LE(relative_error(appell_kernel_series_fixed(side, s, q, n).value,
                               dbar_kernel_series_fixed(side, s, q, n).value), 1e-13);
    }
  }
}

TEST(AppellValue, LowOrders) {
  const Quaternion q(0.5, -0.2, 0.8, 0.1);
  EXPECT_EQ(appell_value(0, q), Quaternion(1.0));
  EXPECT_LE(relative_error(appell_value(1, q), (2.0 * q + q.conj()) / 3.0), 1e-15);
  EXPECT_LE(relative_error(appell_value(2, q), (3.0 * q * q + 2.0 * q * q.conj() + q.conj() * q.conj()) / 6.0),
            1e-15);
  EXPECT_EQ(code_of([&] { appell_value(-1, q); }), ErrorCode::BadDegree);
}

TEST(CauchySeries, MatchesSliceCauchyKernel) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 20; ++i) {
    const Quaternion q = random_q(rng, 1.0);
    const Quaternion s = scaled_s(rng, q, 0.6);
    const SeriesValue l = cauchy_kernel_series(Side::Left, s, q, 1e-12);
    const SeriesValue r = cauchy_kernel_series(Side::Right, s, q, 1e-12);
    EXPECT_LE((l.value - kernel_eval(KernelKind::SL, s, q)).norm(), l.tail_bound + 1e-14);
    EXPECT_LE((r.value - kernel_eval(KernelKind::SR, s, q)).norm(), r.tail_bound + 1e-14);
  }
}
