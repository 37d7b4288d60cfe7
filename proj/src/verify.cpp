#include "fueterkit/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <sstream>

#include "fueterkit/contour.hpp"
#include "fueterkit/error.hpp"
#include "fueterkit/io.hpp"
#include "fueterkit/kernels.hpp"
#include "fueterkit/numdiff.hpp"
#include "fueterkit/qpoly.hpp"
#include "fueterkit/slice_function.hpp"

namespace fueterkit {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Running maximum that keeps NaN once seen.
struct Max {
  double value = 0.0;
  void operator()(double x) {
    if (!(x <= value)) value = x;
  }
};

class Recorder {
 public:
  void run(const std::string& name, double tolerance, const std::function<double()>& body) {
    double residual = kInf;
    try {
      residual = body();
    } catch (const std::exception&) {
      residual = kInf;
    }
    out_.push_back({name, residual, tolerance, residual <= tolerance});
  }

  std::vector<CheckResult> take() { return std::move(out_); }

 private:
  std::vector<CheckResult> out_;
};

double uniform(std::mt19937_64& rng, double a, double b) {
  return std::uniform_real_distribution<double>(a, b)(rng);
}

int uniform_int(std::mt19937_64& rng, int a, int b) {
  return std::uniform_int_distribution<int>(a, b)(rng);
}

Quaternion random_in_ball(std::mt19937_64& rng, double radius) {
  Quaternion q;
  do {
    q = random_quaternion(rng, 1.0);
  } while (q.norm() > 1.0 || q.norm() < 1e-3);
  return radius * q;
}

Quaternion random_with_norm(std::mt19937_64& rng, double norm) {
  const Quaternion q = random_in_ball(rng, 1.0);
  return (norm / q.norm()) * q;
}

Quaternion random_nonreal(std::mt19937_64& rng, double radius, double min_v) {
  Quaternion q;
  do {
    q = random_in_ball(rng, radius);
  } while (q.imag_norm() < min_v);
  return q;
}

ImaginaryUnit random_unit(std::mt19937_64& rng) {
  Quaternion q;
  do {
    q = random_quaternion(rng, 1.0).imag();
  } while (q.norm() < 0.1);
  return ImaginaryUnit::from_quaternion(q);
}

std::vector<double> random_real_coeffs(std::mt19937_64& rng, int degree) {
  std::vector<double> c(static_cast<std::size_t>(degree) + 1);
  for (double& x : c) x = uniform(rng, -1.0, 1.0);
  return c;
}

QQbarPoly qq_polynomial(const std::vector<double>& c) {
  QQbarPoly p;
  for (std::size_t k = 0; k < c.size(); ++k) {
    p += QQbarPoly::monomial(static_cast<int>(k), 0, Rational(c[k]));
  }
  return p;
}

// Exact Dbar / Delta of sum q^k a_k (left) or sum a_k q^k (right): the
// images of q^k are intrinsic, so a_k stays on its side.
Quaternion image_of_series(const std::vector<Quaternion>& a, Side side, const Quaternion& q,
                           FueterOperator op) {
  Quaternion acc;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const int n = static_cast<int>(k);
    Quaternion m;
    if (op == FueterOperator::Dbar) {
      if (n >= 1) m = dbar_monomial(n).evaluate(q);
    } else if (n >= 2) {
      m = laplacian_monomial(n, LaplacianForm::Direct).evaluate(q);
    }
    acc += side == Side::Left ? m * a[k] : a[k] * m;
  }
  return acc;
}

std::vector<Quaternion> random_quat_coeffs(std::mt19937_64& rng, int degree) {
  std::vector<Quaternion> c(static_cast<std::size_t>(degree) + 1);
  for (Quaternion& x : c) x = random_quaternion(rng, 1.0);
  return c;
}

QFunction as_qfunction(const SliceFunction& f) {
  return [f](const Quaternion& q) { return f(q); };
}

double rel(const Quaternion& a, const Quaternion& b) { return relative_error(a, b, 1.0); }

// ---------------------------------------------------------------- symbolic

void suite_symbolic(Recorder& rec, std::mt19937_64& rng) {
  rec.run("hcore.associativity_and_norm", 1e-14, [&] {
    Max m;
    for (int i = 0; i < 200; ++i) {
      const Quaternion a = random_quaternion(rng, 2.0);
      const Quaternion b = random_quaternion(rng, 2.0);
      const Quaternion c = random_quaternion(rng, 2.0);
      m(relative_error(a * (b * c), (a * b) * c));
      m(std::abs((a * b).norm() - a.norm() * b.norm()) / (a.norm() * b.norm()));
    }
    return m.value;
  });
  rec.run("hcore.conj_anti_automorphism", 0.0, [&] {
    Max m;
    for (int i = 0; i < 200; ++i) {
      auto small = [&] {
        return Quaternion(uniform_int(rng, -20, 20), uniform_int(rng, -20, 20),
                          uniform_int(rng, -20, 20), uniform_int(rng, -20, 20));
      };
      const Quaternion a = small();
      const Quaternion b = small();
      m(((a * b).conj() - b.conj() * a.conj()).norm());
    }
    return m.value;
  });
  rec.run("hcore.slice_roundtrip", 1e-15, [&] {
    Max m;
    for (int i = 0; i < 200; ++i) {
      const Quaternion q = random_nonreal(rng, 3.0, 1e-3);
      m(relative_error(slice_decompose(q).compose(), q));
    }
    return m.value;
  });
  rec.run("hcore.unit_squares_to_minus_one", 1e-14, [&] {
    Max m;
    for (int i = 0; i < 200; ++i) {
      const Quaternion q = random_nonreal(rng, 3.0, 1e-6);
      const Quaternion J = slice_decompose(q).J->value();
      m((J * J + Quaternion(1.0)).norm());
    }
    return m.value;
  });

  rec.run("qpoly.dbar_monomial_exact", 0.0, [] {
    int bad = 0;
    QQbarPoly qn = QQbarPoly::constant(1);
    for (int n = 1; n <= 20; ++n) {
      qn = qn * QQbarPoly::q();
      const QQbarPoly d = apply_operator_sym(FueterOperator::Dbar, qn);
      bad += !(d == dbar_monomial(n));
      if (n >= 2) bad += !(d == dbar_monomial_appell(n));
    }
    return static_cast<double>(bad);
  });
  rec.run("qpoly.laplacian_factorizations_exact", 0.0, [] {
    int bad = 0;
    QQbarPoly qn = QQbarPoly::constant(1);
    for (int n = 1; n <= 20; ++n) {
      qn = qn * QQbarPoly::q();
      const QQbarPoly ddbar = apply_operator_sym(FueterOperator::D,
                                                 apply_operator_sym(FueterOperator::Dbar, qn));
      const QQbarPoly dbard = apply_operator_sym(FueterOperator::Dbar,
                                                 apply_operator_sym(FueterOperator::D, qn));
      const QQbarPoly lap = apply_operator_sym(FueterOperator::Delta, qn);
      bad += !(ddbar == dbard) + !(ddbar == lap);
      if (n >= 2) {
        bad += !(lap == laplacian_monomial(n, LaplacianForm::Direct));
        bad += !(lap == laplacian_monomial(n, LaplacianForm::Appell));
      } else {
        bad += !lap.is_zero();
      }
    }
    return static_cast<double>(bad);
  });
  rec.run("qpoly.appell_monogenic_exact", 0.0, [] {
    int bad = 0;
    for (int l = 0; l <= 20; ++l) bad += !apply_operator_sym(FueterOperator::D, appell(l)).is_zero();
    return static_cast<double>(bad);
  });
  rec.run("qpoly.dbar_monomial_in_ker_d2_exact", 0.0, [] {
    int bad = 0;
    for (int n = 1; n <= 20; ++n) {
      const QQbarPoly d = apply_operator_sym(FueterOperator::D, dbar_monomial(n));
      bad += !apply_operator_sym(FueterOperator::D, d).is_zero();
    }
    return static_cast<double>(bad);
  });
  rec.run("qpoly.worked_instances_exact", 0.0, [] {
    const QQbarPoly q = QQbarPoly::q();
    const QQbarPoly qb = QQbarPoly::qbar();
    int bad = 0;
    bad += !(dbar_monomial(2) == q * Rational(6) + qb * Rational(2));
    bad += !(dbar_monomial_appell(3) ==
             q * q * Rational(8) + q * qb * Rational(2) + qb * qb * Rational(2));
    bad += !(apply_operator_sym(FueterOperator::Delta, q * q) == QQbarPoly::constant(-4));
    bad += !(apply_operator_sym(FueterOperator::Delta, q * q * q) ==
             q * Rational(-8) + qb * Rational(-4));
    return static_cast<double>(bad);
  });
  rec.run("qpoly.axial_roundtrip_exact", 0.0, [&] {
    int bad = 0;
    for (int i = 0; i < 20; ++i) {
      QQbarPoly p;
      for (int t = 0; t < 4; ++t) {
        p += QQbarPoly::monomial(uniform_int(rng, 0, 4), uniform_int(rng, 0, 4),
                                 Rational(uniform_int(rng, -9, 9), uniform_int(rng, 1, 5)));
      }
      bad += !(from_axial(to_axial(p)) == p);
    }
    return static_cast<double>(bad);
  });
  rec.run("qpoly.right_action_matches_left", 1e-6, [&] {
    Max m;
    for (int n = 1; n <= 8; ++n) {
      const QQbarPoly p = QQbarPoly::q().power(n);
      const QFunction f = [&p](const Quaternion& x) { return p.evaluate(x); };
      for (int i = 0; i < 5; ++i) {
        const Quaternion q = random_in_ball(rng, 1.5);
        const Quaternion exact = apply_operator_sym(FueterOperator::Dbar, p).evaluate(q);
        m(rel(fd_apply(FDOperator::Dbar, f, q, Side::Right), exact));
      }
    }
    return m.value;
  });
}

// ---------------------------------------------------------------- kernel

void suite_kernel(Recorder& rec, std::mt19937_64& rng) {
  const std::vector<SliceFunction> intrinsic = {
      SliceFunction::intrinsic(stem_exp()), SliceFunction::intrinsic(stem_power(5)),
      SliceFunction::intrinsic(stem_rational({1.0, 1.0}, {5.0, -4.0, 1.0}))};

  rec.run("sfun.representation_consistency", 1e-13, [&] {
    Max m;
    for (const SliceFunction& f : intrinsic) {
      for (int i = 0; i < 20; ++i) {
        const double u = uniform(rng, -1.0, 1.0);
        const double v = uniform(rng, 0.1, 1.5);
        double a0 = 0.0;
        double b0 = 0.0;
        for (int k = 0; k < 4; ++k) {
          const ImaginaryUnit J = k == 0   ? ImaginaryUnit::e1()
                                  : k == 1 ? ImaginaryUnit::e2()
                                  : k == 2 ? ImaginaryUnit::e3()
                                           : random_unit(rng);
          const Quaternion val = f(slice_compose(u, v, J));
          const Quaternion& j = J.value();
          const double alpha = val.w;
          const double beta = val.x * j.x + val.y * j.y + val.z * j.z;
          const double perp = (val.imag() - beta * j).norm();
          const double scale = 1.0 + val.norm();
          if (k == 0) {
            a0 = alpha;
            b0 = beta;
          }
          m((std::abs(alpha - a0) + std::abs(beta - b0) + perp) / scale);
        }
      }
    }
    return m.value;
  });
  rec.run("sfun.stem_cauchy_riemann", 1e-6, [&] {
    Max m;
    for (const SliceFunction& f : intrinsic) {
      const StemFunction& stem = *f.stem();
      for (int i = 0; i < 20; ++i) {
        const double u = uniform(rng, -1.0, 1.0);
        const double v = uniform(rng, 0.1, 1.5);
        const double h = 1e-5 * (1.0 + std::hypot(u, v));
        const auto [ap, bp] = stem.components(u + h, v);
        const auto [am, bm] = stem.components(u - h, v);
        const auto [aq, bq] = stem.components(u, v + h);
        const auto [an, bn] = stem.components(u, v - h);
        const auto [a, b] = stem.components(u, v);
        const double au = (ap - am) / (2 * h);
        const double bu = (bp - bm) / (2 * h);
        const double av = (aq - an) / (2 * h);
        const double bv = (bq - bn) / (2 * h);
        const double scale = 1.0 + std::hypot(a, b) + std::hypot(u, v);
        m(std::hypot(au - bv, av + bu) / scale);
      }
    }
    return m.value;
  });
  rec.run("sfun.tf_extend_power", 1e-12, [&] {
    Max m;
    for (int n = 0; n <= 10; ++n) {
      const SliceFunction f = tf_extend(stem_power(n));
      for (int i = 0; i < 10; ++i) {
        const Quaternion q = random_in_ball(rng, 1.5);
        m(relative_error(f(q), pow(q, n)));
      }
    }
    return m.value;
  });

  auto valid_pair = [&](double min_qcs) {
    for (;;) {
      const Quaternion s = random_in_ball(rng, 2.0);
      const Quaternion q = random_in_ball(rng, 2.0);
      if (qcs(s, q).norm() >= min_qcs) return std::pair{s, q};
    }
  };

  rec.run("kern.f_kernel_identity", 1e-11, [&] {
    Max m;
    for (int i = 0; i < 100; ++i) {
      const auto [s, q] = valid_pair(0.1);
      const Quaternion fl = kernel_eval(KernelKind::FL, s, q);
      m(relative_error(fl * s - q * fl, -4.0 * qcs(s, q).inverse()));
    }
    return m.value;
  });
  rec.run("kern.p2_kernel_is_dbar_of_s_kernel", 1e-6, [&] {
    Max m;
    for (int i = 0; i < 50; ++i) {
      const auto [s, q] = valid_pair(0.5);
      const QFunction sl = [s = s](const Quaternion& x) { return kernel_eval(KernelKind::SL, s, x); };
      const QFunction sr = [s = s](const Quaternion& x) { return kernel_eval(KernelKind::SR, s, x); };
      m(relative_error(fd_apply(FDOperator::Dbar, sl, q, Side::Left), kernel_eval(KernelKind::P2L, s, q)));
      m(relative_error(fd_apply(FDOperator::Dbar, sr, q, Side::Right), kernel_eval(KernelKind::P2R, s, q)));
    }
    return m.value;
  });
  rec.run("kern.p2_kernel_polyanalytic_residual", 1e-4, [&] {
    Max m;
    for (int i = 0; i < 5; ++i) {
      const Quaternion s = random_with_norm(rng, 2.5);
      std::vector<Quaternion> samples;
      while (samples.size() < 5) {
        const Quaternion q = random_in_ball(rng, 1.5);
        if (qcs(s, q).norm() >= 0.5) samples.push_back(q);
      }
      const QFunction p2l = [s](const Quaternion& x) { return kernel_eval(KernelKind::P2L, s, x); };
      const QFunction p2r = [s](const Quaternion& x) { return kernel_eval(KernelKind::P2R, s, x); };
      m(residual_suite(p2l, ResidualKind::Polyanalytic2, samples, Side::Left).max_residual);
      m(residual_suite(p2r, ResidualKind::Polyanalytic2, samples, Side::Right).max_residual);
    }
    return m.value;
  });
  rec.run("kern.p2_kernel_right_slice_in_s", 1e-6, [&] {
    Max m;
    for (int i = 0; i < 20; ++i) {
      const Quaternion q = random_in_ball(rng, 1.0);
      const ImaginaryUnit J = random_unit(rng);
      const double u = uniform(rng, -2.0, 2.0);
      const double v = uniform(rng, 1.5, 2.5);
      const double h = 1e-6 * (1.0 + std::hypot(u, v));
      auto f = [&](double a, double b) { return kernel_eval(KernelKind::P2L, slice_compose(a, b, J), q); };
      const Quaternion du = (f(u + h, v) - f(u - h, v)) / (2 * h);
      const Quaternion dv = (f(u, v + h) - f(u, v - h)) / (2 * h);
      m((du + dv * J.value()).norm() / (1.0 + f(u, v).norm()));
    }
    return m.value;
  });
  rec.run("kern.cauchy_series_within_tail_bound", 1.0, [&] {
    Max m;
    for (double rho : {0.25, 0.5, 0.9}) {
      for (int i = 0; i < 10; ++i) {
        const Quaternion s = random_with_norm(rng, 1.5);
        const Quaternion q = random_with_norm(rng, 1.5 * rho);
        for (Side side : {Side::Left, Side::Right}) {
          const SeriesValue sv = cauchy_kernel_series(side, s, q, 1e-10);
          const Quaternion exact = kernel_eval(side == Side::Left ? KernelKind::SL : KernelKind::SR, s, q);
          m((sv.value - exact).norm() / (sv.tail_bound + 1e-14 * (1.0 + exact.norm())));
        }
      }
    }
    return m.value;
  });
}

// ---------------------------------------------------------------- series

void suite_series(Recorder& rec, std::mt19937_64& rng) {
  rec.run("kern.dbar_series_within_tail_bound", 1.0, [&] {
    Max m;
    for (double rho : {0.25, 0.5, 0.9}) {
      for (int i = 0; i < 5; ++i) {
        const Quaternion s = random_with_norm(rng, 1.3);
        const Quaternion q = random_with_norm(rng, 1.3 * rho);
        for (Side side : {Side::Left, Side::Right}) {
          const Quaternion exact = kernel_eval(side == Side::Left ? KernelKind::P2L : KernelKind::P2R, s, q);
          for (int n : {1, 5, 10, 20, 40, 80}) {
            const SeriesValue a = dbar_kernel_series_fixed(side, s, q, n);
            const SeriesValue b = appell_kernel_series_fixed(side, s, q, n);
            const double slack = 1e-13 * (1.0 + exact.norm()) * n;
            m((a.value - exact).norm() / (a.tail_bound + slack));
            m((b.value - exact).norm() / (b.tail_bound + slack));
          }
        }
      }
    }
    return m.value;
  });
  rec.run("kern.dbar_series_geometric_decay", 0.2, [&] {
    Max m;
    const std::map<double, std::pair<int, int>> window = {
        {0.25, {8, 16}}, {0.5, {15, 30}}, {0.9, {60, 120}}};
    for (const auto& [rho, nn] : window) {
      for (int i = 0; i < 5; ++i) {
        const Quaternion s = random_with_norm(rng, 1.0);
        const Quaternion q = random_with_norm(rng, rho);
        for (Side side : {Side::Left, Side::Right}) {
          const Quaternion exact = kernel_eval(side == Side::Left ? KernelKind::P2L : KernelKind::P2R, s, q);
          const double e1 = (dbar_kernel_series_fixed(side, s, q, nn.first).value - exact).norm();
          const double e2 = (dbar_kernel_series_fixed(side, s, q, nn.second).value - exact).norm();
          const double ratio = std::pow(e2 / e1, 1.0 / (nn.second - nn.first));
          m(std::abs(ratio - rho) / rho);
        }
      }
    }
    return m.value;
  });
  rec.run("opcalc.p2_resolvent_equals_dbar_series", 1e-8, [&] {
    Max m;
    for (int i = 0; i < 50; ++i) {
      const CommutingOperator T = random_commuting_operator(rng, 1 + i % 6, uniform(rng, 0.5, 2.0));
      const Quaternion s = random_with_norm(rng, 2.0 * T.norm_bound());
      for (Side side : {Side::Left, Side::Right}) {
        const auto series = series_oracle(OperatorSeries::DbarKernel, side, s, T, 1e-13);
        const auto exact = resolvent_eval(side == Side::Left ? KernelKind::P2L : KernelKind::P2R, s, T);
        m(relative_error(series.value, exact, 1.0));
      }
    }
    return m.value;
  });
  rec.run("opcalc.appell_series_equals_dbar_series", 1e-8, [&] {
    Max m;
    for (int i = 0; i < 20; ++i) {
      const CommutingOperator T = random_commuting_operator(rng, 1 + i % 6, uniform(rng, 0.5, 2.0));
      const Quaternion s = random_with_norm(rng, 2.0 * T.norm_bound());
      for (Side side : {Side::Left, Side::Right}) {
        const auto a = appell_operator_series(side, s, T, 1e-13);
        const auto b = series_oracle(OperatorSeries::DbarKernel, side, s, T, 1e-13);
        m(relative_error(a.value, b.value, 1.0));
      }
    }
    return m.value;
  });
  rec.run("opcalc.f_resolvent_series", 1e-8, [&] {
    Max m;
    for (int i = 0; i < 20; ++i) {
      const CommutingOperator T = random_commuting_operator(rng, 1 + i % 6, uniform(rng, 0.5, 2.0));
      const Quaternion s = random_with_norm(rng, 2.0 * T.norm_bound());
      for (Side side : {Side::Left, Side::Right}) {
        const auto series = series_oracle(OperatorSeries::FResolvent, side, s, T, 1e-13);
        const auto exact = resolvent_eval(side == Side::Left ? KernelKind::FL : KernelKind::FR, s, T);
        m(relative_error(series.value, exact, 1.0));
      }
    }
    return m.value;
  });
}

// ---------------------------------------------------------------- contour

void suite_contour(Recorder& rec, std::mt19937_64& rng) {
  const SliceContour disk3 = SliceContour::disk(0.0, 3.0, ImaginaryUnit::e1());
  const SliceFunction exp_f = SliceFunction::intrinsic(stem_exp());

  rec.run("contour.cauchy_reproduces_polynomials", 1e-10, [&] {
    Max m;
    for (int deg = 0; deg <= 8; ++deg) {
      const auto c = random_real_coeffs(rng, deg);
      const auto a = random_quat_coeffs(rng, deg);
      const SliceFunction fi = SliceFunction::intrinsic(stem_polynomial(c));
      const SliceFunction fl = SliceFunction::left_series(a);
      const SliceFunction fr = SliceFunction::right_series(a);
      for (int i = 0; i < 3; ++i) {
        const Quaternion q = random_in_ball(rng, 2.5);
        m(rel(cauchy_eval(fi, q, disk3), fi(q)));
        m(rel(cauchy_eval(fi.with_chirality(Side::Right), q, disk3), fi(q)));
        m(rel(cauchy_eval(fl, q, disk3), fl(q)));
        m(rel(cauchy_eval(fr, q, disk3), fr(q)));
      }
    }
    return m.value;
  });
  rec.run("contour.cauchy_reproduces_exp", 1e-10, [&] {
    Max m;
    for (int i = 0; i < 10; ++i) {
      const Quaternion q = random_in_ball(rng, 2.5);
      m(rel(cauchy_eval(exp_f, q, disk3), exp_f(q)));
    }
    return m.value;
  });
  rec.run("contour.fueter_integral_matches_symbolic", 1e-8, [&] {
    Max m;
    for (int deg = 2; deg <= 8; ++deg) {
      const auto c = random_real_coeffs(rng, deg);
      const auto a = random_quat_coeffs(rng, deg);
      const QQbarPoly lap = apply_operator_sym(FueterOperator::Delta, qq_polynomial(c));
      const SliceFunction fi = SliceFunction::intrinsic(stem_polynomial(c));
      for (int i = 0; i < 3; ++i) {
        const Quaternion q = random_in_ball(rng, 2.5);
        m(rel(fueter_integral_eval(fi, q, disk3), lap.evaluate(q)));
        m(rel(fueter_integral_eval(SliceFunction::left_series(a), q, disk3),
              image_of_series(a, Side::Left, q, FueterOperator::Delta)));
        m(rel(fueter_integral_eval(SliceFunction::right_series(a), q, disk3),
              image_of_series(a, Side::Right, q, FueterOperator::Delta)));
      }
    }
    return m.value;
  });
  rec.run("contour.polyanalytic_integral_matches_symbolic", 1e-8, [&] {
    Max m;
    for (int deg = 1; deg <= 8; ++deg) {
      const auto c = random_real_coeffs(rng, deg);
      const auto a = random_quat_coeffs(rng, deg);
      const QQbarPoly dbar = apply_operator_sym(FueterOperator::Dbar, qq_polynomial(c));
      const SliceFunction fi = SliceFunction::intrinsic(stem_polynomial(c));
      for (int i = 0; i < 3; ++i) {
        const Quaternion q = random_in_ball(rng, 2.5);
        m(rel(polyanalytic_integral_eval(fi, q, disk3), dbar.evaluate(q)));
        m(rel(polyanalytic_integral_eval(fi.with_chirality(Side::Right), q, disk3), dbar.evaluate(q)));
        m(rel(polyanalytic_integral_eval(SliceFunction::left_series(a), q, disk3),
              image_of_series(a, Side::Left, q, FueterOperator::Dbar)));
        m(rel(polyanalytic_integral_eval(SliceFunction::right_series(a), q, disk3),
              image_of_series(a, Side::Right, q, FueterOperator::Dbar)));
      }
    }
    return m.value;
  });
  rec.run("contour.independence_radii_and_units", 1e-9, [&] {
    std::vector<SliceContour> contours;
    const ImaginaryUnit units[] = {ImaginaryUnit::e1(), ImaginaryUnit::e2(),
                                   ImaginaryUnit::from_vector(1, 1, 1)};
    for (double r : {1.5, 2.25, 3.0}) {
      for (const ImaginaryUnit& J : units) contours.push_back(SliceContour::disk(0.0, r, J));
    }
    contours.push_back(SliceContour::annulus(0.0, 0.2, 2.5, ImaginaryUnit::e3()));
    const Quaternion q(0.3, 0.4, 0.2, -0.1);
    const SliceFunction poly = SliceFunction::intrinsic(stem_polynomial(random_real_coeffs(rng, 5)));
    const SliceFunction series = SliceFunction::left_series(random_quat_coeffs(rng, 5));
    Max m;
    for (const SliceFunction& f : {poly, exp_f, series}) {
      m(contour_independence_check([&](const SliceContour& c) { return cauchy_eval(f, q, c); }, contours)
            .max_deviation);
      m(contour_independence_check([&](const SliceContour& c) { return fueter_integral_eval(f, q, c); },
                                   contours)
            .max_deviation);
      m(contour_independence_check(
            [&](const SliceContour& c) { return polyanalytic_integral_eval(f, q, c); }, contours)
            .max_deviation);
    }
    return m.value;
  });
  rec.run("contour.node_doubling", 1e-10, [&] {
    Max m;
    const SliceContour c128 = disk3.with_nodes(128);
    for (int deg = 0; deg <= 8; ++deg) {
      const SliceFunction f = SliceFunction::intrinsic(stem_polynomial(random_real_coeffs(rng, deg)));
      const Quaternion q = random_in_ball(rng, 2.0);
      m(rel(cauchy_eval(f, q, c128), cauchy_eval(f, q, disk3)));
      m(rel(fueter_integral_eval(f, q, c128), fueter_integral_eval(f, q, disk3)));
      m(rel(polyanalytic_integral_eval(f, q, c128), polyanalytic_integral_eval(f, q, disk3)));
    }
    return m.value;
  });
  rec.run("contour.unit_independence_intrinsic", 1e-10, [&] {
    Max m;
    const SliceFunction poly = SliceFunction::intrinsic(stem_polynomial(random_real_coeffs(rng, 6)));
    for (const SliceFunction& f : {poly, exp_f}) {
      for (int i = 0; i < 3; ++i) {
        const Quaternion q = random_in_ball(rng, 2.0);
        const SliceContour other = disk3.with_J(random_unit(rng));
        m(rel(cauchy_eval(f, q, other), cauchy_eval(f, q, disk3)));
        m(rel(fueter_integral_eval(f, q, other), fueter_integral_eval(f, q, disk3)));
        m(rel(polyanalytic_integral_eval(f, q, other), polyanalytic_integral_eval(f, q, disk3)));
      }
    }
    return m.value;
  });

  const SliceContour disk5 = SliceContour::disk(0.0, 5.0, ImaginaryUnit::e1());
  const QFunction dbar_exp = [&](const Quaternion& q) { return polyanalytic_integral_eval(exp_f, q, disk5); };
  rec.run("contour.polyanalytic_output_in_ker_d2", 1e-4, [&] {
    std::vector<Quaternion> samples;
    for (int i = 0; i < 4; ++i) samples.push_back(random_nonreal(rng, 2.0, 0.3));
    return residual_suite(dbar_exp, ResidualKind::Polyanalytic2, samples).max_residual;
  });
  rec.run("contour.polyanalytic_output_vekua", 1e-4, [&] {
    Max m;
    const ImaginaryUnit w = random_unit(rng);
    const auto [A, B] = axial_parts(dbar_exp, w);
    for (double q0 : {-0.5, 0.5}) {
      for (double r : {0.5, 1.25, 2.0}) {
        const auto [r1, r2] = vekua2_residual(A, B, q0, r);
        const Quaternion q = slice_compose(q0, r, w);
        m(std::max(r1.norm(), r2.norm()) / (1.0 + dbar_exp(q).norm() + q.norm()));
      }
    }
    return m.value;
  });
}

// ---------------------------------------------------------------- operator

void suite_operator(Recorder& rec, std::mt19937_64& rng) {
  rec.run("opcalc.spectrum_of_diagonal_lift", 1e-10, [&] {
    Max m;
    for (int i = 0; i < 50; ++i) {
      const int d = 1 + i % 6;
      std::vector<Quaternion> pts;
      for (int k = 0; k < d; ++k) {
        const int kind = uniform_int(rng, 0, 5);
        if (kind == 0) {
          pts.push_back(Quaternion(uniform(rng, -2.0, 2.0)));
        } else if (kind == 1 && !pts.empty()) {
          pts.push_back(pts.back());
        } else {
          pts.push_back(random_in_ball(rng, 2.0));
        }
      }
      const SSpectrum spec = s_spectrum(CommutingOperator::diagonal_lift(pts));
      double total = 0.0;
      for (const SpectralSphere& sp : spec) total += sp.multiplicity;
      if (std::abs(total - d) > 1e-12) return kInf;
      for (const Quaternion& q : pts) {
        double best = kInf;
        for (const SpectralSphere& sp : spec) {
          best = std::min(best, std::max(std::abs(sp.u - q.real()), std::abs(sp.v - q.imag_norm())));
        }
        m(best);
      }
      // every reported sphere carries a point
      for (const SpectralSphere& sp : spec) {
        double best = kInf;
        for (const Quaternion& q : pts) {
          best = std::min(best, std::max(std::abs(sp.u - q.real()), std::abs(sp.v - q.imag_norm())));
        }
        m(best);
      }
    }
    return m.value;
  });
  rec.run("opcalc.qcs_inverse_residual", 1e-10, [&] {
    Max m;
    for (int i = 0; i < 30; ++i) {
      const CommutingOperator T = random_commuting_operator(rng, 1 + i % 6, 1.0);
      const Quaternion s = random_with_norm(rng, uniform(rng, 1.5, 3.0));
      const QuaternionMatrix prod = qcs_op(s, T) * qcs_op_inverse(s, T);
      m((prod - QuaternionMatrix::identity(T.dim())).norm());
    }
    return m.value;
  });

  std::vector<CommutingOperator> ops;
  for (int i = 0; i < 50; ++i) ops.push_back(random_commuting_operator(rng, 1 + i % 6, uniform(rng, 0.5, 1.5)));

  for (Calculus which : {Calculus::S, Calculus::F, Calculus::P2}) {
    rec.run("opcalc.monomial_consistency_" + std::string(to_string(which)), 1e-8, [&] {
      Max m;
      for (const CommutingOperator& T : ops) {
        const SliceContour c = default_calculus_contour(T);
        for (int n = 0; n <= 6; ++n) {
          const SliceFunction f = SliceFunction::intrinsic(stem_power(n));
          m(relative_error(calculus_apply(which, f, T, c), monomial_oracle(which, n, T), 1.0));
        }
      }
      return m.value;
    });
  }
  rec.run("opcalc.well_posedness_units_and_radii", 1e-8, [&] {
    Max m;
    const ImaginaryUnit units[] = {ImaginaryUnit::e1(), ImaginaryUnit::e2(),
                                   ImaginaryUnit::from_vector(1, 1, 1)};
    const SliceFunction fs[] = {SliceFunction::intrinsic(stem_power(3)), SliceFunction::intrinsic(stem_exp())};
    for (int i = 0; i < 4; ++i) {
      const CommutingOperator& T = ops[static_cast<std::size_t>(i * 7 % ops.size())];
      const double r0 = default_calculus_contour(T).circles().front().radius;
      for (const SliceFunction& f : fs) {
        for (Calculus which : {Calculus::S, Calculus::F, Calculus::P2}) {
          const QuaternionMatrix ref = calculus_apply(which, f, T, SliceContour::disk(0.0, r0, units[0]));
          for (double scale : {1.0, 2.0}) {
            for (const ImaginaryUnit& J : units) {
              m(relative_error(calculus_apply(which, f, T, SliceContour::disk(0.0, scale * r0, J)), ref, 1.0));
            }
          }
        }
      }
    }
    return m.value;
  });
  rec.run("opcalc.p2_resolvent_right_slice_in_s", 1e-6, [&] {
    Max m;
    for (int i = 0; i < 10; ++i) {
      const CommutingOperator& T = ops[static_cast<std::size_t>(i)];
      const ImaginaryUnit J = random_unit(rng);
      const double rad = default_calculus_contour(T).circles().front().radius;
      const double u = uniform(rng, -rad, rad);
      const double v = uniform(rng, 0.1, rad);
      const double h = 1e-6 * (1.0 + rad);
      auto f = [&](double a, double b) {
        return resolvent_eval(KernelKind::P2L, slice_compose(a, b, J), T);
      };
      try {
        const QuaternionMatrix du = (1.0 / (2 * h)) * (f(u + h, v) - f(u - h, v));
        const QuaternionMatrix dv = (1.0 / (2 * h)) * (f(u, v + h) - f(u, v - h));
        m((du + dv * J.value()).norm() / (1.0 + f(u, v).norm()));
      } catch (const Error& e) {
        if (e.code() != ErrorCode::SingularPencil) throw;
      }
    }
    return m.value;
  });
  rec.run("opcalc.diagonal_lift_pointwise_s", 1e-10, [&] {
    Max m;
    for (const char* name : {"pow2", "pow3", "exp", "one"}) {
      const SliceFunction f = io::parse_function(name);
      for (int i = 0; i < 3; ++i) {
        m(diagonal_lift_check(f, {random_in_ball(rng, 1.5), random_in_ball(rng, 1.5),
                                  Quaternion(uniform(rng, -1.0, 1.0))})
              .s_deviation);
      }
    }
    return m.value;
  });
  rec.run("opcalc.diagonal_lift_pointwise_f_p2", 1e-5, [&] {
    Max m;
    for (const char* name : {"pow2", "pow3", "exp", "one"}) {
      const SliceFunction f = io::parse_function(name);
      for (int i = 0; i < 3; ++i) {
        const LiftReport r = diagonal_lift_check(
            f, {random_in_ball(rng, 1.5), random_in_ball(rng, 1.5), Quaternion(uniform(rng, -1.0, 1.0))});
        m(r.f_deviation);
        m(r.p2_deviation);
      }
    }
    return m.value;
  });
  rec.run("cli.deterministic_outputs", 0.0, [&] {
    const CommutingOperator& T = ops[5];
    const SliceFunction f = SliceFunction::intrinsic(stem_exp());
    const QuaternionMatrix a = calculus_apply(Calculus::P2, f, T);
    const QuaternionMatrix b = calculus_apply(Calculus::P2, f, T);
    return (a - b).norm() + (io::matrix_json(a) == io::matrix_json(b) ? 0.0 : 1.0);
  });
}

// ---------------------------------------------------------------- pde

void suite_pde(Recorder& rec, std::mt19937_64& rng) {
  auto random_qq = [&] {
    QQbarPoly p;
    for (int t = 0; t < 4; ++t) {
      p += QQbarPoly::monomial(uniform_int(rng, 0, 4), uniform_int(rng, 0, 4),
                               Rational(uniform_int(rng, -9, 9), uniform_int(rng, 1, 4)));
    }
    return p;
  };
  rec.run("numdiff.dbar_matches_symbolic", 1e-6, [&] {
    Max m;
    for (int i = 0; i < 20; ++i) {
      const QQbarPoly p = random_qq();
      const QFunction f = [p](const Quaternion& q) { return p.evaluate(q); };
      const Quaternion q = random_in_ball(rng, 1.5);
      m(rel(fd_apply(FDOperator::Dbar, f, q), apply_operator_sym(FueterOperator::Dbar, p).evaluate(q)));
    }
    return m.value;
  });
  rec.run("numdiff.laplacian_factorizations", 1e-4, [&] {
    Max m;
    const FDConfig coarse{1e-3, 1e-3};
    for (int i = 0; i < 10; ++i) {
      const QQbarPoly p = random_qq();
      const QFunction f = [p](const Quaternion& q) { return p.evaluate(q); };
      const Quaternion q = random_in_ball(rng, 1.5);
      const Quaternion lap = fd_apply(FDOperator::Delta, f, q);
      const QFunction dbar_f = [&](const Quaternion& x) { return fd_apply(FDOperator::Dbar, f, x, coarse); };
      const QFunction d_f = [&](const Quaternion& x) { return fd_apply(FDOperator::D, f, x, coarse); };
      m(rel(fd_apply(FDOperator::D, dbar_f, q, coarse), lap));
      m(rel(fd_apply(FDOperator::Dbar, d_f, q, coarse), lap));
    }
    return m.value;
  });
  rec.run("numdiff.richardson_ratio", 0.5, [&] {
    Max m;
    const SliceFunction e = SliceFunction::intrinsic(stem_exp());
    const QFunction f = as_qfunction(e);
    for (int i = 0; i < 5; ++i) {
      const Quaternion q = random_in_ball(rng, 1.0);
      const Quaternion exact = e(q);  // d/dq0 exp = exp
      const double h = 2e-2;
      const double e1 = (fd_partial(f, q, 0, h) - exact).norm();
      const double e2 = (fd_partial(f, q, 0, h / 2) - exact).norm();
      m(std::abs(e1 / e2 - 4.0));
    }
    return m.value;
  });

  const SliceContour disk5 = SliceContour::disk(0.0, 5.0, ImaginaryUnit::e1());
  const SliceFunction exp_f = SliceFunction::intrinsic(stem_exp());
  const SliceFunction cube = SliceFunction::intrinsic(stem_power(3));
  const QQbarPoly dbar_q2 = dbar_monomial(2);
  const std::vector<std::pair<std::string, QFunction>> generated = {
      {"q2", [dbar_q2](const Quaternion& q) { return dbar_q2.evaluate(q); }},
      {"q3", [&](const Quaternion& q) { return polyanalytic_integral_eval(cube, q, disk5); }},
      {"exp", [&](const Quaternion& q) { return polyanalytic_integral_eval(exp_f, q, disk5); }}};
  for (const auto& [label, g] : generated) {
    rec.run("numdiff.vekua_system_" + label, 1e-4, [&] {
      Max m;
      const ImaginaryUnit w = random_unit(rng);
      const auto [A, B] = axial_parts(g, w);
      for (double q0 : {-1.0, 0.0, 1.0}) {
        for (double r : {0.5, 1.0, 1.5, 2.0}) {
          const auto [r1, r2] = vekua2_residual(A, B, q0, r);
          const Quaternion q = slice_compose(q0, r, w);
          m(std::max(r1.norm(), r2.norm()) / (1.0 + g(q).norm() + q.norm()));
        }
      }
      return m.value;
    });
  }
  rec.run("numdiff.f_kernel_monogenic", 1e-6, [&] {
    Max m;
    for (int i = 0; i < 5; ++i) {
      const Quaternion s = random_with_norm(rng, 2.5);
      std::vector<Quaternion> samples;
      while (samples.size() < 5) {
        const Quaternion q = random_in_ball(rng, 1.5);
        if (qcs(s, q).norm() >= 0.5) samples.push_back(q);
      }
      const QFunction fl = [s](const Quaternion& x) { return kernel_eval(KernelKind::FL, s, x); };
      const QFunction fr = [s](const Quaternion& x) { return kernel_eval(KernelKind::FR, s, x); };
      m(residual_suite(fl, ResidualKind::Monogenic, samples, Side::Left).max_residual);
      m(residual_suite(fr, ResidualKind::Monogenic, samples, Side::Right).max_residual);
    }
    return m.value;
  });
  rec.run("numdiff.fueter_integral_monogenic", 1e-6, [&] {
    std::vector<Quaternion> samples;
    for (int i = 0; i < 5; ++i) samples.push_back(random_in_ball(rng, 2.0));
    const QFunction g = [&](const Quaternion& q) { return fueter_integral_eval(exp_f, q, disk5); };
    return residual_suite(g, ResidualKind::Monogenic, samples).max_residual;
  });
}

using SuiteFn = void (*)(Recorder&, std::mt19937_64&);

const std::map<std::string, SuiteFn>& suite_table() {
  static const std::map<std::string, SuiteFn> table = {
      {"symbolic", &suite_symbolic}, {"kernel", &suite_kernel}, {"series", &suite_series},
      {"contour", &suite_contour},   {"operator", &suite_operator}, {"pde", &suite_pde}};
  return table;
}

}  // namespace

bool VerifyReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> names = {"symbolic", "kernel", "series",
                                                 "contour",  "operator", "pde"};
  return names;
}

VerifyReport run_verify(std::string_view suite, std::uint64_t seed) {
  std::vector<std::string> selected;
  if (suite == "all") {
    selected = verify_suites();
  } else if (suite_table().count(std::string(suite))) {
    selected.emplace_back(suite);
  } else {
    throw Error(ErrorCode::InvalidArgument, "unknown verify suite '" + std::string(suite) + "'");
  }
  VerifyReport report;
  report.suite = std::string(suite);
  report.seed = seed;
  for (const std::string& name : selected) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(std::hash<std::string>{}(name))};
    std::mt19937_64 rng(seq);
    Recorder rec;
    suite_table().at(name)(rec, rng);
    for (CheckResult& c : rec.take()) report.checks.push_back(std::move(c));
  }
  std::sort(report.checks.begin(), report.checks.end(),
            [](const CheckResult& a, const CheckResult& b) { return a.check < b.check; });
  return report;
}

std::string report_json(const VerifyReport& report) {
  auto num = [](double x) {
    if (std::isinf(x)) return std::string("\"inf\"");
    if (std::isnan(x)) return std::string("\"nan\"");
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return std::string(buf);
  };
  std::ostringstream os;
  os << "{\"suite\":\"" << report.suite << "\",\"seed\":" << report.seed
     << ",\"pass\":" << (report.pass() ? "true" : "false") << ",\"checks\":[";
  for (std::size_t i = 0; i < report.checks.size(); ++i) {
    const CheckResult& c = report.checks[i];
    if (i) os << ',';
    os << "\n  {\"check\":\"" << c.check << "\",\"max_residual\":" << num(c.max_residual)
       << ",\"tolerance\":" << num(c.tolerance) << ",\"pass\":" << (c.pass ? "true" : "false") << '}';
  }
  os << "\n]}";
  return os.str();
}

Quaternion random_quaternion(std::mt19937_64& rng, double scale) {
  return {uniform(rng, -scale, scale), uniform(rng, -scale, scale), uniform(rng, -scale, scale),
          uniform(rng, -scale, scale)};
}

CommutingOperator random_commuting_operator(std::mt19937_64& rng, int dim, double target_norm) {
  if (dim < 1) throw Error(ErrorCode::InvalidArgument, "dimension must be positive");
  Eigen::MatrixXd A(dim, dim);
  for (Eigen::Index i = 0; i < A.rows(); ++i) {
    for (Eigen::Index j = 0; j < A.cols(); ++j) A(i, j) = uniform(rng, -1.0, 1.0) / std::sqrt(dim);
  }
  const Eigen::MatrixXd A2 = A * A;
  const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(dim, dim);
  std::array<Eigen::MatrixXd, 4> c;
  for (auto& m : c) m = uniform(rng, -1.0, 1.0) * I + uniform(rng, -1.0, 1.0) * A + 0.5 * uniform(rng, -1.0, 1.0) * A2;
  const double bound = CommutingOperator(c).norm_bound();
  for (auto& m : c) m *= target_norm / bound;
  return CommutingOperator(std::move(c));
}

}  // namespace fueterkit
