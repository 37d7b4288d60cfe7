#pragma once

#include <complex>
#include <functional>
#include <limits>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "fueterkit/quaternion.hpp"

namespace fueterkit {

using Complex = std::complex<double>;

/// Holomorphic stem f0 = alpha + i beta on a conjugation-symmetric domain.
/// Only the closed upper half-plane is ever sampled; values below the real
/// axis follow by reflection when `conjugation_symmetric` holds.
struct StemFunction {
  std::string name;
  std::function<Complex(Complex)> evaluate;
  /// Isolated singularities (poles) of f0; contours must keep them outside.
  std::vector<Complex> singularities;
  bool conjugation_symmetric = true;

  /// (alpha(u, v), beta(u, v)) for any sign of v.
  std::pair<double, double> components(double u, double v) const;
};

StemFunction stem_power(int n);
StemFunction stem_exp();
/// Real polynomial sum c_k z^k (ascending coefficients).
StemFunction stem_polynomial(std::vector<double> coeffs);
/// p(z)/d(z) with real ascending coefficients; poles from the denominator roots.
StemFunction stem_rational(std::vector<double> numerator, std::vector<double> denominator);

enum class SliceKind { IntrinsicStem, LeftSeries, RightSeries };

/// Tolerance on |beta(u, 0)| for evaluation on the real axis.
inline constexpr double kTolReal = 1e-10;

/// Left or right slice hyperholomorphic function. Immutable and cheap to copy.
class SliceFunction {
 public:
  /// Intrinsic function induced by a stem (the Fueter slice operator).
  static SliceFunction intrinsic(StemFunction stem);
  /// sum q^n a_n; `radius` bounds the region of convergence.
  static SliceFunction left_series(std::vector<Quaternion> coeffs,
                                   double radius = std::numeric_limits<double>::infinity());
  /// sum a_n q^n.
  static SliceFunction right_series(std::vector<Quaternion> coeffs,
                                    double radius = std::numeric_limits<double>::infinity());

  SliceKind kind() const { return kind_; }
  bool is_intrinsic() const { return kind_ == SliceKind::IntrinsicStem; }
  /// Intrinsic functions are both left and right; this selects which integral
  /// formulas (kernel side and factor order) they are fed to.
  Side chirality() const { return chirality_; }
  SliceFunction with_chirality(Side side) const;

  const std::string& name() const { return name_; }
  double radius() const { return radius_; }
  const std::vector<Quaternion>& coefficients() const { return coeffs_; }
  const StemFunction* stem() const { return stem_.get(); }
  std::vector<Complex> singularities() const;

  Quaternion operator()(const Quaternion& q) const;

 private:
  SliceKind kind_ = SliceKind::IntrinsicStem;
  Side chirality_ = Side::Left;
  std::string name_;
  std::shared_ptr<const StemFunction> stem_;
  std::vector<Quaternion> coeffs_;
  double radius_ = std::numeric_limits<double>::infinity();
};

/// f(q) = alpha(q0, |Im q|) + (Im q / |Im q|) beta(q0, |Im q|).
SliceFunction tf_extend(StemFunction f0);

Quaternion slice_eval(const SliceFunction& f, const Quaternion& q);

}  // namespace fueterkit
