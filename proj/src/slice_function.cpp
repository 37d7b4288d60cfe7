#include "fueterkit/slice_function.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

#include "fueterkit/error.hpp"

namespace fueterkit {

std::pair<double, double> StemFunction::components(double u, double v) const {
  if (v < 0.0 && conjugation_symmetric) {
    const Complex w = evaluate(Complex(u, -v));
    return {w.real(), -w.imag()};
  }
  const Complex w = evaluate(Complex(u, v));
  return {w.real(), w.imag()};
}

StemFunction stem_power(int n) {
  if (n < 0) throw Error(ErrorCode::BadDegree, "stem_power needs n >= 0");
  StemFunction f;
  f.name = "pow" + std::to_string(n);
  f.evaluate = [n](Complex z) {
    Complex r(1.0);
    for (int i = 0; i < n; ++i) r *= z;
    return r;
  };
  return f;
}

StemFunction stem_exp() {
  StemFunction f;
  f.name = "exp";
  f.evaluate = [](Complex z) { return std::exp(z); };
  return f;
}

namespace {

Complex horner(const std::vector<double>& c, Complex z) {
  Complex r(0.0);
  for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * z + *it;
  return r;
}

void trim_leading_zeros(std::vector<double>& c) {
  while (!c.empty() && c.back() == 0.0) c.pop_back();
}

std::vector<Complex> polynomial_roots(const std::vector<double>& c) {
  const int degree = static_cast<int>(c.size()) - 1;
  if (degree < 1) return {};
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(degree, degree);
  for (int i = 1; i < degree; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < degree; ++i) companion(i, degree - 1) = -c[i] / c[degree];
  Eigen::EigenSolver<Eigen::MatrixXd> es(companion, false);
  std::vector<Complex> roots;
  for (int i = 0; i < degree; ++i) roots.push_back(es.eigenvalues()(i));
  return roots;
}

}  // namespace

StemFunction stem_polynomial(std::vector<double> coeffs) {
  trim_leading_zeros(coeffs);
  StemFunction f;
  f.name = "polynomial";
  f.evaluate = [c = std::move(coeffs)](Complex z) { return horner(c, z); };
  return f;
}

StemFunction stem_rational(std::vector<double> numerator, std::vector<double> denominator) {
  trim_leading_zeros(numerator);
  trim_leading_zeros(denominator);
  if (denominator.empty()) throw Error(ErrorCode::DivisionByZero, "zero denominator polynomial");
  StemFunction f;
  f.name = "rational";
  f.singularities = polynomial_roots(denominator);
  f.evaluate = [num = std::move(numerator), den = std::move(denominator)](Complex z) {
    return horner(num, z) / horner(den, z);
  };
  return f;
}

SliceFunction SliceFunction::intrinsic(StemFunction stem) {
  if (!stem.evaluate) throw Error(ErrorCode::InvalidArgument, "stem function has no evaluator");
  if (!stem.conjugation_symmetric) {
    throw Error(ErrorCode::InvalidArgument,
                "intrinsic functions need a conjugation-symmetric stem");
  }
  SliceFunction f;
  f.kind_ = SliceKind::IntrinsicStem;
  f.name_ = stem.name;
  f.stem_ = std::make_shared<const StemFunction>(std::move(stem));
  return f;
}

SliceFunction SliceFunction::left_series(std::vector<Quaternion> coeffs, double radius) {
  SliceFunction f;
  f.kind_ = SliceKind::LeftSeries;
  f.chirality_ = Side::Left;
  f.name_ = "left-series";
  f.coeffs_ = std::move(coeffs);
  f.radius_ = radius;
  return f;
}

SliceFunction SliceFunction::right_series(std::vector<Quaternion> coeffs, double radius) {
  SliceFunction f;
  f.kind_ = SliceKind::RightSeries;
  f.chirality_ = Side::Right;
  f.name_ = "right-series";
  f.coeffs_ = std::move(coeffs);
  f.radius_ = radius;
  return f;
}

SliceFunction SliceFunction::with_chirality(Side side) const {
  if (!is_intrinsic() && side != chirality_) {
    throw Error(ErrorCode::InvalidArgument,
                "only intrinsic functions can be used with either chirality");
  }
  SliceFunction f = *this;
  f.chirality_ = side;
  return f;
}

std::vector<Complex> SliceFunction::singularities() const {
  return stem_ ? stem_->singularities : std::vector<Complex>{};
}

Quaternion SliceFunction::operator()(const Quaternion& q) const {
  if (kind_ != SliceKind::IntrinsicStem) {
    if (q.norm() >= radius_) {
      throw Error(ErrorCode::DivergentSeries, "point outside the series disk of convergence");
    }
    Quaternion acc;
    if (kind_ == SliceKind::LeftSeries) {
      for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = q * acc + *it;
    } else {
      for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + *it;
    }
    return acc;
  }

  const SlicePoint p = slice_decompose(q);
  for (const Complex& pole : stem_->singularities) {
    if (std::abs(Complex(p.u, p.v) - Complex(pole.real(), std::abs(pole.imag()))) <=
        1e-12 * (1.0 + std::abs(pole))) {
      throw Error(ErrorCode::OutsideDomain, "evaluation at a singularity of " + name_);
    }
  }
  const auto [alpha, beta] = stem_->components(p.u, p.v);
  if (!std::isfinite(alpha) || !std::isfinite(beta)) {
    throw Error(ErrorCode::OutsideDomain, "stem " + name_ + " is not finite here");
  }
  if (!p.J) {
    if (std::abs(beta) > kTolReal * (1.0 + std::abs(alpha))) {
      throw Error(ErrorCode::StemNotReal, "stem has nonzero imaginary part on the real axis");
    }
    return Quaternion(alpha);
  }
  return Quaternion(alpha) + beta * p.J->value();
}

SliceFunction tf_extend(StemFunction f0) { return SliceFunction::intrinsic(std::move(f0)); }

Quaternion slice_eval(const SliceFunction& f, const Quaternion& q) { return f(q); }

}  // namespace fueterkit
