#pragma once

// Quadruples of commuting real matrices T = T0 + e1 T1 + e2 T2 + e3 T3 and
// their functional calculi by contour quadrature over the S-resolvent family.

#include <Eigen/Dense>

#include <array>
#include <string_view>
#include <vector>

#include "fueterkit/contour.hpp"
#include "fueterkit/kernels.hpp"
#include "fueterkit/quaternion.hpp"
#include "fueterkit/slice_function.hpp"

namespace fueterkit {

/// M0 + e1 M1 + e2 M2 + e3 M3 with real d x d components. The units e_i
/// commute with real matrices, so products follow the Hamilton table with
/// ordered matrix products.
class QuaternionMatrix {
 public:
  QuaternionMatrix() = default;
  explicit QuaternionMatrix(int dim);
  QuaternionMatrix(Eigen::MatrixXd m0, Eigen::MatrixXd m1, Eigen::MatrixXd m2,
                   Eigen::MatrixXd m3);

  static QuaternionMatrix identity(int dim);
  static QuaternionMatrix from_real(const Eigen::MatrixXd& m);
  /// q I_d.
  static QuaternionMatrix scalar(const Quaternion& q, int dim);

  int dim() const { return static_cast<int>(c_[0].rows()); }
  const Eigen::MatrixXd& component(int i) const { return c_.at(i); }
  Eigen::MatrixXd& component(int i) { return c_.at(i); }

  /// Entry (i, j) as a quaternion.
  Quaternion at(int i, int j) const;

  /// sqrt(sum_i ||M_i||_F^2).
  double norm() const;

  /// Real 4d x 4d matrix of left multiplication on H^d.
  Eigen::MatrixXd left_representation() const;

  QuaternionMatrix& operator+=(const QuaternionMatrix& o);
  QuaternionMatrix& operator-=(const QuaternionMatrix& o);
  QuaternionMatrix& operator*=(double s);

  friend QuaternionMatrix operator+(QuaternionMatrix a, const QuaternionMatrix& b) { return a += b; }
  friend QuaternionMatrix operator-(QuaternionMatrix a, const QuaternionMatrix& b) { return a -= b; }
  friend QuaternionMatrix operator-(QuaternionMatrix a) { return a *= -1.0; }
  friend QuaternionMatrix operator*(double s, QuaternionMatrix a) { return a *= s; }
  friend QuaternionMatrix operator*(const QuaternionMatrix& a, const QuaternionMatrix& b);
  friend QuaternionMatrix operator*(const Quaternion& q, const QuaternionMatrix& a);
  friend QuaternionMatrix operator*(const QuaternionMatrix& a, const Quaternion& q);

 private:
  std::array<Eigen::MatrixXd, 4> c_;
};

/// Relative error ||a - b|| / max(||b||, floor).
double relative_error(const QuaternionMatrix& a, const QuaternionMatrix& b, double floor = 0.0);

/// Default commutation tolerance: ||Ti Tj - Tj Ti|| <= eps ||Ti|| ||Tj||.
inline constexpr double kCommutationTolerance = 1e-10;

/// T = T0 + e1 T1 + e2 T2 + e3 T3 with pairwise commuting real components.
/// Immutable after construction.
class CommutingOperator {
 public:
  /// Throws InvalidArgument for mismatched shapes and NonCommuting when any
  /// pair fails the commutation test.
  explicit CommutingOperator(std::array<Eigen::MatrixXd, 4> components,
                             double eps_comm = kCommutationTolerance);

  /// Block-diagonal lift: T_i = diag(q^(k)_i).
  static CommutingOperator diagonal_lift(const std::vector<Quaternion>& points);

  int dim() const { return static_cast<int>(t_[0].rows()); }
  const Eigen::MatrixXd& component(int i) const { return t_.at(i); }

  QuaternionMatrix as_matrix() const;  // T
  QuaternionMatrix conj_matrix() const;  // Tbar = T0 - sum e_i T_i
  /// T Tbar = T0^2 + T1^2 + T2^2 + T3^2 (real).
  const Eigen::MatrixXd& t_tbar() const { return t_tbar_; }

  /// Certified upper bound for ||T|| and ||Tbar||: the induced 2-norm of the
  /// left-multiplication representation on H^d.
  double norm_bound() const { return norm_bound_; }

 private:
  std::array<Eigen::MatrixXd, 4> t_;
  Eigen::MatrixXd t_tbar_;
  double norm_bound_ = 0.0;
};

/// Sphere u + S v of the S-spectrum. Multiplicities count roots of the
/// quadratic pencil in the closed upper half-plane, real roots with weight
/// 1/2, so they add up to the dimension.
struct SpectralSphere {
  double u = 0.0;
  double v = 0.0;
  double multiplicity = 0.0;
};

using SSpectrum = std::vector<SpectralSphere>;

/// Spheres from the joint eigenvalues (t0, t1^2 + t2^2 + t3^2) of the commuting
/// components, read off one complex Schur basis. Falls back to the pencil
/// eigenvalues when that basis does not triangularize all components.
SSpectrum s_spectrum(const CommutingOperator& T);

/// Eigenvalues z of z^2 I - 2 z T0 + T Tbar via the companion linearization
/// [[0, I], [-T Tbar, 2 T0]].
std::vector<Complex> pencil_eigenvalues(const CommutingOperator& T);

/// Q_{c,s}(T) = s^2 - 2 s T0 + T Tbar.
QuaternionMatrix qcs_op(const Quaternion& s, const CommutingOperator& T);

/// Q_{c,s}(T)^{-1} = (P - J R)(P^2 + R^2)^{-1} where s = u + J v,
/// P = (u^2 - v^2) I - 2u T0 + T Tbar and R = 2v (u I - T0).
/// Throws SingularPencil when P^2 + R^2 is numerically singular.
QuaternionMatrix qcs_op_inverse(const Quaternion& s, const CommutingOperator& T);

/// S-, F- and P2-resolvents with the same factor order as the scalar kernels,
/// q0 replaced by T0 and qbar by Tbar.
QuaternionMatrix resolvent_eval(KernelKind kind, const Quaternion& s, const CommutingOperator& T);

enum class Calculus { S, F, P2 };

std::string_view to_string(Calculus which);
Calculus parse_calculus(std::string_view name);

/// Disk about 0 of radius 1.5 max|z| + 0.5 over the spectrum.
SliceContour default_calculus_contour(const CommutingOperator& T,
                                      ImaginaryUnit J = ImaginaryUnit::e1(),
                                      int nodes = kDefaultNodes);

/// Throws SpectrumNotEnclosed / SphereHitsBoundary unless every sphere lies
/// strictly inside the contour domain.
void validate_spectrum_enclosed(const SliceContour& contour, const SSpectrum& spectrum);

/// (1/2pi) \oint R(s, T) ds_J f(s) for left f, (1/2pi) \oint f(s) ds_J R(s, T)
/// for right f, with R the S-, F- or P2-resolvent of the matching side.
QuaternionMatrix calculus_apply(Calculus which, const SliceFunction& f, const CommutingOperator& T,
                                const SliceContour& contour);
QuaternionMatrix calculus_apply(Calculus which, const SliceFunction& f, const CommutingOperator& T);

enum class OperatorSeries { DbarKernel, FResolvent };

struct OperatorSeriesValue {
  QuaternionMatrix value;
  int terms = 0;
  double tail_bound = 0.0;  // in the component Frobenius norm
};

/// Dbar-kernel operator 2 sum_n (n T^{n-1} + sum_k T^{n-k} Tbar^{k-1}) s^{-1-n}
/// or F-resolvent series -4 sum_{n>=2} sum_k (n-k) T^{n-k-1} Tbar^{k-1} s^{-1-n};
/// powers of s on the right for Side::Left, on the left for Side::Right.
/// Throws NormTooLarge unless ||T|| < |s| for the certified norm bound.
OperatorSeriesValue series_oracle(OperatorSeries which, Side side, const Quaternion& s,
                                  const CommutingOperator& T, double tol);

/// Dbar-kernel operator through Clifford-Appell polynomials in (T, Tbar).
OperatorSeriesValue appell_operator_series(Side side, const Quaternion& s,
                                           const CommutingOperator& T, double tol);

/// Closed forms of each calculus applied to s^n:
/// S: T^n; F: -4 sum_{k=1}^{n-1} (n-k) T^{n-k-1} Tbar^{k-1};
/// P2: 2 (n T^{n-1} + sum_{k=1}^n T^{n-k} Tbar^{k-1}).
QuaternionMatrix monomial_oracle(Calculus which, int n, const CommutingOperator& T);

struct LiftReport {
  double s_deviation = 0.0;
  double f_deviation = 0.0;
  double p2_deviation = 0.0;
};

/// Applies the three calculi to the diagonal lift of `points` and compares each
/// diagonal block with f(q), Delta f(q) and Dbar f(q) (finite differences);
/// off-diagonal blocks are compared with zero. Deviations are relative with a
/// unit floor.
LiftReport diagonal_lift_check(const SliceFunction& f, const std::vector<Quaternion>& points);

}  // namespace fueterkit
