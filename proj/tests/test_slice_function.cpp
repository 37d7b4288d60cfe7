#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "fueterkit/error.hpp"
#include "fueterkit/slice_function.hpp"

using namespace fueterkit;

namespace {

Quaternion random_q(std::mt19937_64& rng, double scale = 1.5) {
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

}  // namespace

TEST(TfExtend, IdentityStem) {
  const SliceFunction f = tf_extend(stem_power(1));
  const Quaternion q(0.2, -1.0, 0.4, 2.0);
  EXPECT_LE(relative_error(f(q), q), 1e-15);
}

TEST(TfExtend, SquareMatchesQuaternionPower) {
  const SliceFunction f = tf_extend(stem_power(2));
  std::mt19937_64 rng(21);
  for (int i = 0; i < 20; ++i) {
    const Quaternion q = random_q(rng);
    EXPECT_LE(relative_error(f(q), q * q, 1.0), 1e-14);
  }
  EXPECT_LE(relative_error(slice_eval(f, Quaternion(1, 1, 0, 0)), Quaternion(0, 2, 0, 0)), 1e-15);
}

TEST(TfExtend, ExponentialClosedForm) {
  const SliceFunction f = tf_extend(stem_exp());
  const Quaternion q(0.3, 0.4, -1.2, 0.3);
  const double r = q.imag_norm();
  const Quaternion expected =
      std::exp(q.w) * (Quaternion(std::cos(r)) + (std::sin(r) / r) * q.imag());
  EXPECT_LE(relative_error(f(q), expected), 1e-15);
  EXPECT_NEAR(f(Quaternion(1.0)).w, std::exp(1.0), 1e-15);
}

TEST(TfExtend, PolynomialAndRational) {
  const SliceFunction p = tf_extend(stem_polynomial({1.0, 0.0, -2.0, 0.5}));
  const SliceFunction r = tf_extend(stem_rational({1.0}, {1.0, 0.0, 1.0}));
  std::mt19937_64 rng(2);
  for (int i = 0; i < 20; ++i) {
    const Quaternion q = random_q(rng, 0.6);
    const Quaternion q2 = q * q;
    EXPECT_LE(relative_error(p(q), Quaternion(1.0) - 2.0 * q2 + 0.5 * q2 * q, 1.0), 1e-14);
    EXPECT_LE(relative_error(r(q), (Quaternion(1.0) + q2).inverse(), 1.0), 1e-13);
  }
  ASSERT_EQ(r.singularities().size(), 2u);
}

TEST(TfExtend, RationalPoleIsOutsideDomain) {
  const SliceFunction r = tf_extend(stem_rational({1.0}, {1.0, 0.0, 1.0}));
  EXPECT_EQ(code_of([&] { r(Quaternion::e2()); }), ErrorCode::OutsideDomain);
  EXPECT_EQ(code_of([] { stem_rational({1.0}, {0.0}); }), ErrorCode::DivisionByZero);
}

TEST(TfExtend, StemNotRealOnAxis) {
  StemFunction bad;
  bad.name = "shifted";
  bad.evaluate = [](Complex z) { return z + Complex(0.0, 1.0); };
  const SliceFunction f = tf_extend(bad);
  EXPECT_EQ(code_of([&] { f(Quaternion(2.0)); }), ErrorCode::StemNotReal);
}

TEST(TfExtend, RejectsAsymmetricStem) {
  StemFunction s = stem_exp();
  s.conjugation_symmetric = false;
  EXPECT_EQ(code_of([&] { tf_extend(s); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([] { stem_power(-1); }), ErrorCode::BadDegree);
}

TEST(SliceEval, LeftSeriesMultipliesOnTheRight) {
  const SliceFunction f = SliceFunction::left_series({Quaternion(), Quaternion::e1()});
  EXPECT_EQ(f(Quaternion(1, 0, 1, 0)), Quaternion(0, 1, 0, -1));
  const SliceFunction g = SliceFunction::right_series({Quaternion(), Quaternion::e1()});
  EXPECT_EQ(g(Quaternion(1, 0, 1, 0)), Quaternion(0, 1, 0, 1));
}

TEST(SliceEval, ConstantSeries) {
  const SliceFunction f = SliceFunction::left_series({Quaternion(1.0)});
  EXPECT_EQ(f(Quaternion(0.3, 2.0, -1.0, 0.1)), Quaternion(1.0));
}

TEST(SliceEval, GeometricSeriesInsideAndOutsideRadius) {
  std::vector<Quaternion> coeffs(200, Quaternion(1.0));
  const SliceFunction f = SliceFunction::left_series(coeffs, 1.0);
  const Quaternion q(0.1, 0.2, 0.0, -0.1);
  EXPECT_LE(relative_error(f(q), (Quaternion(1.0) - q).inverse()), 1e-14);
  EXPECT_EQ(code_of([&] { f(Quaternion(0.8, 0.8, 0, 0)); }), ErrorCode::DivergentSeries);
}

TEST(SliceFunction, Chirality) {
  const SliceFunction f = tf_extend(stem_exp());
  EXPECT_EQ(f.chirality(), Side::Left);
  EXPECT_EQ(f.with_chirality(Side::Right).chirality(), Side::Right);
  const SliceFunction s = SliceFunction::left_series({Quaternion(1.0)});
  EXPECT_EQ(code_of([&] { s.with_chirality(Side::Right); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(SliceFunction::right_series({Quaternion(1.0)}).chirality(), Side::Right);
}

TEST(SliceFunction, IntrinsicIsLeftAndRightSeries) {
  std::vector<Quaternion> coeffs;
  double fact = 1.0;
  for (int n = 0; n < 30; ++n) {
    if (n) fact *= n;
    coeffs.emplace_back(1.0 / fact);
  }
  const SliceFunction left = SliceFunction::left_series(coeffs);
  const SliceFunction right = SliceFunction::right_series(coeffs);
  const SliceFunction e = tf_extend(stem_exp());
  const Quaternion q(0.2, -0.5, 0.1, 0.7);
  EXPECT_LE(relative_error(left(q), e(q)), 1e-14);
  EXPECT_LE(relative_error(right(q), e(q)), 1e-14);
}
