#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "fueterkit/error.hpp"
#include "fueterkit/operator_calculus.hpp"
#include "fueterkit/verify.hpp"

using namespace fueterkit;
using Eigen::MatrixXd;

namespace {

CommutingOperator scalar_op(const Quaternion& q) { return CommutingOperator::diagonal_lift({q}); }

CommutingOperator real_diag(const std::vector<double>& t) {
  const int d = static_cast<int>(t.size());
  MatrixXd t0 = MatrixXd::Zero(d, d);
  for (int i = 0; i < d; ++i) t0(i, i) = t[static_cast<std::size_t>(i)];
  return CommutingOperator({t0, MatrixXd::Zero(d, d), MatrixXd::Zero(d, d), MatrixXd::Zero(d, d)});
}

void expect_scalar(const QuaternionMatrix& m, const Quaternion& q, double tol) {
  ASSERT_EQ(m.dim(), 1);
  EXPECT_LE((m.at(0, 0) - q).norm(), tol) << m.at(0, 0);
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

SliceFunction fn_pow(int n) { return tf_extend(stem_power(n)); }

const Quaternion e1 = Quaternion::e1();

}  // namespace

TEST(QuaternionMatrix, HamiltonProduct) {
  const QuaternionMatrix a = QuaternionMatrix::scalar(e1, 2);
  const QuaternionMatrix b = QuaternionMatrix::scalar(Quaternion::e2(), 2);
  const QuaternionMatrix ab = a * b;
  EXPECT_EQ(ab.at(0, 0), Quaternion::e3());
  EXPECT_EQ(ab.at(1, 0), Quaternion());
  EXPECT_EQ((b * a).at(1, 1), -Quaternion::e3());
  EXPECT_EQ((Quaternion::e2() * a).at(0, 0), -Quaternion::e3());
  EXPECT_EQ((a * Quaternion::e2()).at(0, 0), Quaternion::e3());
}

TEST(QuaternionMatrix, ProductAgreesWithEntrywise) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> d(-1, 1);
  const int n = 3;
  QuaternionMatrix a(n), b(n);
  for (int c = 0; c < 4; ++c) {
    a.component(c) = MatrixXd::NullaryExpr(n, n, [&] { return d(rng); });
    b.component(c) = MatrixXd::NullaryExpr(n, n, [&] { return d(rng); });
  }
  const QuaternionMatrix ab = a * b;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Quaternion acc;
      for (int k = 0; k < n; ++k) acc += a.at(i, k) * b.at(k, j);
      EXPECT_LE((ab.at(i, j) - acc).norm(), 1e-14);
    }
  }
  const MatrixXd la = a.left_representation(), lb = b.left_representation();
  EXPECT_LE((la * lb - ab.left_representation()).norm(), 1e-13);
}

TEST(QuaternionMatrix, SizeMismatch) {
  EXPECT_EQ(code_of([] { QuaternionMatrix(2) + QuaternionMatrix(3); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([] { QuaternionMatrix(MatrixXd::Zero(2, 2), MatrixXd::Zero(2, 2), MatrixXd::Zero(3, 3),
                                          MatrixXd::Zero(2, 2)); }),
            ErrorCode::InvalidArgument);
}

TEST(CommutingOperator, Validation) {
  MatrixXd a(2, 2), b(2, 2);
  a << 0, 1, 0, 0;
  b << 0, 0, 1, 0;
  const MatrixXd z = MatrixXd::Zero(2, 2);
  EXPECT_EQ(code_of([&] { CommutingOperator({z, a, b, z}); }), ErrorCode::NonCommuting);
  EXPECT_EQ(code_of([&] { CommutingOperator({z, a, MatrixXd::Zero(3, 3), z}); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([] { CommutingOperator::diagonal_lift({}); }), ErrorCode::InvalidArgument);
  const CommutingOperator T({a, a, z, z});
  EXPECT_EQ(T.dim(), 2);
}

TEST(CommutingOperator, TTbarAndNormBound) {
  const CommutingOperator T = CommutingOperator::diagonal_lift({Quaternion(1, 2, 2, 0), Quaternion(0, 0, 0, 1)});
  EXPECT_LE((T.t_tbar() - MatrixXd(Eigen::Vector2d(9, 1).asDiagonal())).norm(), 1e-15);
  EXPECT_NEAR(T.norm_bound(), 3.0, 1e-10);
  EXPECT_GE(T.norm_bound(), 3.0);
  const QuaternionMatrix prod = T.as_matrix() * T.conj_matrix();
  EXPECT_LE((prod - QuaternionMatrix::from_real(T.t_tbar())).norm(), 1e-14);
}

TEST(QcsOp, Examples) {
  expect_scalar(qcs_op_inverse(Quaternion(2.0), scalar_op(e1)), Quaternion(0.2), 1e-15);

  const CommutingOperator D = real_diag({0.5, -1.0, 2.0});
  const QuaternionMatrix inv = qcs_op_inverse(Quaternion(3.0), D);
  for (int i = 0; i < 3; ++i) {
    const double t = D.component(0)(i, i);
    EXPECT_NEAR(inv.at(i, i).w, 1.0 / ((3.0 - t) * (3.0 - t)), 1e-15);
  }

  const CommutingOperator P = scalar_op(Quaternion(1, 0, 2, 0));
  EXPECT_EQ(code_of([&] { qcs_op_inverse(Quaternion(1, 2, 0, 0), P); }), ErrorCode::SingularPencil);
}

TEST(QcsOp, InverseResidual) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> d(-2, 2);
  for (int dim : {1, 3, 5}) {
    const CommutingOperator T = random_commuting_operator(rng, dim, 1.0);
    const Quaternion s(d(rng), d(rng), d(rng), d(rng));
    if (s.norm() < 1.5) continue;
    const QuaternionMatrix r = qcs_op(s, T) * qcs_op_inverse(s, T);
    EXPECT_LE((r - QuaternionMatrix::identity(dim)).norm(), 1e-12);
  }
}

TEST(SSpectrum, Examples) {
  const SSpectrum a = s_spectrum(scalar_op(e1));
  ASSERT_EQ(a.size(), 1u);
  EXPECT_NEAR(a[0].u, 0.0, 1e-14);
  EXPECT_NEAR(a[0].v, 1.0, 1e-14);
  EXPECT_DOUBLE_EQ(a[0].multiplicity, 1.0);

  const SSpectrum b = s_spectrum(real_diag({1.0, 2.0}));
  ASSERT_EQ(b.size(), 2u);
  EXPECT_NEAR(b[0].u, 1.0, 1e-14);
  EXPECT_NEAR(b[0].v, 0.0, 1e-14);
  EXPECT_NEAR(b[1].u, 2.0, 1e-14);
  EXPECT_DOUBLE_EQ(b[1].multiplicity, 1.0);

  const SSpectrum c = s_spectrum(scalar_op(Quaternion(1, 0, 2, 0)));
  ASSERT_EQ(c.size(), 1u);
  EXPECT_NEAR(c[0].u, 1.0, 1e-14);
  EXPECT_NEAR(c[0].v, 2.0, 1e-14);
}

TEST(SSpectrum, DiagonalLiftWithRepeatedSpheres) {
  const CommutingOperator T = CommutingOperator::diagonal_lift(
      {Quaternion(0.5, 1, 0, 0), Quaternion(0.5, 0, 0, -1), Quaternion(-1, 0, 0.3, 0.4), Quaternion(2.0)});
  const SSpectrum sp = s_spectrum(T);
  ASSERT_EQ(sp.size(), 3u);
  EXPECT_NEAR(sp[0].u, -1.0, 1e-10);
  EXPECT_NEAR(sp[0].v, 0.5, 1e-10);
  EXPECT_NEAR(sp[1].u, 0.5, 1e-10);
  EXPECT_NEAR(sp[1].v, 1.0, 1e-10);
  EXPECT_DOUBLE_EQ(sp[1].multiplicity, 2.0);
  EXPECT_NEAR(sp[2].u, 2.0, 1e-10);
  double total = 0.0;
  for (const SpectralSphere& s : sp) total += s.multiplicity;
  EXPECT_DOUBLE_EQ(total, 4.0);
}

TEST(SSpectrum, NonDiagonalizableComponents) {
  MatrixXd n(2, 2);
  n << 0, 1, 0, 0;
  const MatrixXd t0 = MatrixXd::Identity(2, 2) + n;
  const MatrixXd t1 = 2.0 * MatrixXd::Identity(2, 2) + 0.5 * n;
  const MatrixXd z = MatrixXd::Zero(2, 2);
  const SSpectrum sp = s_spectrum(CommutingOperator({t0, t1, z, z}));
  ASSERT_EQ(sp.size(), 1u);
  EXPECT_NEAR(sp[0].u, 1.0, 1e-6);
  EXPECT_NEAR(sp[0].v, 2.0, 1e-6);
  EXPECT_DOUBLE_EQ(sp[0].multiplicity, 2.0);
}

TEST(SSpectrum, PencilEigenvaluesSolveQuadratic) {
  const auto z = pencil_eigenvalues(scalar_op(Quaternion(1, 0, 2, 0)));
  ASSERT_EQ(z.size(), 2u);
  for (const Complex& r : z) EXPECT_LE(std::abs(r * r - 2.0 * r + 5.0), 1e-12);
}

TEST(ResolventEval, Examples) {
  expect_scalar(resolvent_eval(KernelKind::SL, Quaternion(2.0), scalar_op(e1)), Quaternion(0.4, 0.2, 0, 0), 1e-15);
  expect_scalar(resolvent_eval(KernelKind::P2L, Quaternion(2.0), scalar_op(e1)), Quaternion(0.64, 0.32, 0, 0), 1e-15);
  const CommutingOperator D = real_diag({0.5, -1.0});
  const QuaternionMatrix f = resolvent_eval(KernelKind::FL, Quaternion(2.0), D);
  EXPECT_NEAR(f.at(0, 0).w, -4.0 / std::pow(1.5, 3), 1e-14);
  EXPECT_NEAR(f.at(1, 1).w, -4.0 / 27.0, 1e-14);
  EXPECT_EQ(f.at(0, 1), Quaternion());
}

TEST(ResolventEval, DiagonalLiftMatchesScalarKernels) {
  const std::vector<Quaternion> pts{Quaternion(0.3, 0.5, -0.2, 0.1), Quaternion(-0.4, 0, 0.7, 0.2)};
  const CommutingOperator T = CommutingOperator::diagonal_lift(pts);
  const Quaternion s(1.2, 0.4, 1.0, -0.3);
  for (KernelKind k : {KernelKind::SL, KernelKind::SR, KernelKind::FL, KernelKind::FR,
                       KernelKind::P2L, KernelKind::P2R}) {
    const QuaternionMatrix r = resolvent_eval(k, s, T);
    for (int i = 0; i < 2; ++i) {
      EXPECT_LE(relative_error(r.at(i, i), kernel_eval(k, s, pts[static_cast<std::size_t>(i)])), 1e-13);
    }
  }
}

TEST(CalculusApply, Examples) {
  const CommutingOperator T = scalar_op(e1);
  expect_scalar(calculus_apply(Calculus::S, fn_pow(2), T), Quaternion(-1.0), 1e-10);
  expect_scalar(calculus_apply(Calculus::F, fn_pow(3), T), -4.0 * e1, 1e-9);
  expect_scalar(calculus_apply(Calculus::P2, fn_pow(2), T), 4.0 * e1, 1e-9);
}

TEST(CalculusApply, MonomialOracles) {
  std::mt19937_64 rng(77);
  for (int dim : {2, 4}) {
    const CommutingOperator T = random_commuting_operator(rng, dim, 1.0);
    for (int n = 0; n <= 6; ++n) {
      for (Calculus c : {Calculus::S, Calculus::F, Calculus::P2}) {
        const QuaternionMatrix got = calculus_apply(c, fn_pow(n), T);
        EXPECT_LE(relative_error(got, monomial_oracle(c, n, T), 1.0), 1e-8) << to_string(c) << n;
        const QuaternionMatrix right = calculus_apply(c, fn_pow(n).with_chirality(Side::Right), T);
        EXPECT_LE(relative_error(right, got, 1.0), 1e-8);
      }
    }
  }
}

TEST(CalculusApply, IndependentOfImaginaryUnitAndRadius) {
  std::mt19937_64 rng(8);
  const CommutingOperator T = random_commuting_operator(rng, 3, 1.0);
  const SliceFunction f = tf_extend(stem_exp());
  for (Calculus c : {Calculus::S, Calculus::F, Calculus::P2}) {
    const QuaternionMatrix ref = calculus_apply(c, f, T, SliceContour::disk(0.0, 2.0, ImaginaryUnit::e1()));
    const QuaternionMatrix other =
        calculus_apply(c, f, T, SliceContour::disk(0.2, 3.0, ImaginaryUnit::from_vector(0, 1, 1)));
    EXPECT_LE(relative_error(other, ref, 1.0), 1e-8) << to_string(c);
  }
}

TEST(CalculusApply, Errors) {
  const CommutingOperator T = scalar_op(Quaternion(0, 0, 2, 0));
  EXPECT_EQ(code_of([&] { calculus_apply(Calculus::S, fn_pow(2), T, SliceContour::disk(0.0, 1.0, ImaginaryUnit::e1())); }),
            ErrorCode::SpectrumNotEnclosed);
  EXPECT_EQ(code_of([&] { calculus_apply(Calculus::S, fn_pow(2), T, SliceContour::disk(0.0, 2.0, ImaginaryUnit::e1())); }),
            ErrorCode::SphereHitsBoundary);
  const SliceFunction pole = tf_extend(stem_rational({1.0}, {-2.5, 1.0}));
  EXPECT_EQ(code_of([&] { calculus_apply(Calculus::S, pole, T, SliceContour::disk(0.0, 3.0, ImaginaryUnit::e1())); }),
            ErrorCode::OutsideDomain);
  EXPECT_EQ(code_of([] { parse_calculus("G"); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(parse_calculus("P2"), Calculus::P2);
  EXPECT_EQ(code_of([&] { monomial_oracle(Calculus::S, -1, T); }), ErrorCode::BadDegree);
}

TEST(CalculusApply, DefaultContourEnclosesSpectrum) {
  const CommutingOperator T = CommutingOperator::diagonal_lift({Quaternion(1, 2, 0, 0), Quaternion(-3.0)});
  const SliceContour c = default_calculus_contour(T);
  ASSERT_EQ(c.circles().size(), 1u);
  EXPECT_NEAR(c.circles()[0].radius, 1.5 * 3.0 + 0.5, 1e-12);
  EXPECT_NO_THROW(validate_spectrum_enclosed(c, s_spectrum(T)));
}

TEST(SeriesOracle, Examples) {
  const OperatorSeriesValue v = series_oracle(OperatorSeries::DbarKernel, Side::Left, Quaternion(2.0), scalar_op(e1), 1e-9);
  expect_scalar(v.value, Quaternion(0.64, 0.32, 0, 0), 1e-9);

  const CommutingOperator zero = real_diag({0.0, 0.0});
  const Quaternion s(0.5, 1.0, 0, 0);
  const OperatorSeriesValue z = series_oracle(OperatorSeries::DbarKernel, Side::Left, s, zero, 1e-12);
  const Quaternion expected = 4.0 * (s * s).inverse();
  EXPECT_LE((z.value.at(0, 0) - expected).norm(), 1e-14);
  EXPECT_LE((z.value.at(1, 1) - expected).norm(), 1e-14);

  const Quaternion s3(3.0);
  const OperatorSeriesValue f = series_oracle(OperatorSeries::FResolvent, Side::Left, s3, scalar_op(e1), 1e-12);
  EXPECT_LE((f.value - resolvent_eval(KernelKind::FL, s3, scalar_op(e1))).norm(), 1e-12);
}

TEST(SeriesOracle, AgreesWithResolventsBothSides) {
  std::mt19937_64 rng(19);
  const CommutingOperator T = random_commuting_operator(rng, 3, 1.0);
  const Quaternion s = 2.0 * Quaternion(0.6, 0.0, 0.8, 0.0);
  for (Side side : {Side::Left, Side::Right}) {
    const bool left = side == Side::Left;
    const QuaternionMatrix p2 = resolvent_eval(left ? KernelKind::P2L : KernelKind::P2R, s, T);
    const QuaternionMatrix fr = resolvent_eval(left ? KernelKind::FL : KernelKind::FR, s, T);
    EXPECT_LE(relative_error(series_oracle(OperatorSeries::DbarKernel, side, s, T, 1e-12).value, p2, 1.0), 1e-8);
    EXPECT_LE(relative_error(appell_operator_series(side, s, T, 1e-12).value, p2, 1.0), 1e-8);
    EXPECT_LE(relative_error(series_oracle(OperatorSeries::FResolvent, side, s, T, 1e-12).value, fr, 1.0), 1e-8);
  }
}

TEST(SeriesOracle, NormTooLarge) {
  EXPECT_EQ(code_of([] { series_oracle(OperatorSeries::DbarKernel, Side::Left, Quaternion(0.9), scalar_op(e1), 1e-9); }),
            ErrorCode::NormTooLarge);
  EXPECT_EQ(code_of([] { appell_operator_series(Side::Right, Quaternion(1.0), scalar_op(e1), 1e-9); }),
            ErrorCode::NormTooLarge);
}

TEST(AppellOperatorSeries, Examples) {
  expect_scalar(appell_operator_series(Side::Left, Quaternion(2.0), scalar_op(e1), 1e-9).value,
                Quaternion(0.64, 0.32, 0, 0), 1e-9);
  const CommutingOperator zero = real_diag({0.0});
  const Quaternion s(-1.0, 0.5, 0.5, 0.0);
  EXPECT_LE((appell_operator_series(Side::Left, s, zero, 1e-12).value -
             series_oracle(OperatorSeries::DbarKernel, Side::Left, s, zero, 1e-12).value).norm(), 1e-14);
}

TEST(DiagonalLiftCheck, Examples) {
  const LiftReport a = diagonal_lift_check(fn_pow(2), {e1});
  EXPECT_LE(a.s_deviation, 1e-10);
  const LiftReport b = diagonal_lift_check(fn_pow(2), {Quaternion(1, 1, 0, 0)});
  EXPECT_LE(b.p2_deviation, 1e-5);
  const LiftReport c = diagonal_lift_check(tf_extend(stem_polynomial({1.0})), {e1, Quaternion(0.5, 0, 1, 1)});
  EXPECT_LE(c.s_deviation, 1e-10);
  EXPECT_LE(c.f_deviation, 1e-5);
  EXPECT_LE(c.p2_deviation, 1e-5);
}

TEST(DiagonalLiftCheck, ExponentialSeveralPoints) {
  const LiftReport r = diagonal_lift_check(
      tf_extend(stem_exp()), {Quaternion(0.2, 0.3, 0, 0), Quaternion(-0.5, 0, 0.4, 0.6), Quaternion(0.1)});
  EXPECT_LE(r.s_deviation, 1e-10);
  EXPECT_LE(r.f_deviation, 1e-5);
  EXPECT_LE(r.p2_deviation, 1e-5);
}
