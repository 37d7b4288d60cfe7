#include "fueterkit/operator_calculus.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "fueterkit/error.hpp"
#include "fueterkit/numdiff.hpp"

namespace fueterkit {

namespace {

using Eigen::MatrixXcd;
using Eigen::MatrixXd;

constexpr int kMaxOperatorTerms = 100'000;
constexpr double kSpectrumClusterTol = 1e-8;
constexpr double kRealRootTol = 1e-8;
constexpr double kSchurMixing = 0.6180339887498949;

void require_same_dim(const QuaternionMatrix& a, const QuaternionMatrix& b) {
  if (a.dim() != b.dim()) throw Error(ErrorCode::InvalidArgument, "quaternion matrix size mismatch");
}

QuaternionMatrix hamilton(const std::array<const MatrixXd*, 4>& a,
                          const std::array<const MatrixXd*, 4>& b) {
  const MatrixXd& a0 = *a[0];
  const MatrixXd& a1 = *a[1];
  const MatrixXd& a2 = *a[2];
  const MatrixXd& a3 = *a[3];
  const MatrixXd& b0 = *b[0];
  const MatrixXd& b1 = *b[1];
  const MatrixXd& b2 = *b[2];
  const MatrixXd& b3 = *b[3];
  return QuaternionMatrix(a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
                          a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
                          a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
                          a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0);
}

// J for s = u + J v; any unit works on the real axis.
Quaternion slice_unit(const Quaternion& s) {
  const double v = s.imag_norm();
  if (v == 0.0) return Quaternion::e1();
  return Quaternion(0.0, s.x / v, s.y / v, s.z / v);
}

struct Root {
  double u;
  double v;
  double weight;
};

SSpectrum cluster_roots(std::vector<Root> roots) {
  std::sort(roots.begin(), roots.end(),
            [](const Root& a, const Root& b) { return a.u != b.u ? a.u < b.u : a.v < b.v; });
  struct Cluster {
    double su = 0.0;
    double sv = 0.0;
    int count = 0;
    double weight = 0.0;
    double u() const { return su / count; }
    double v() const { return sv / count; }
  };
  std::vector<Cluster> clusters;
  for (const Root& r : roots) {
    const double tol = kSpectrumClusterTol * (1.0 + std::hypot(r.u, r.v));
    auto it = std::find_if(clusters.begin(), clusters.end(), [&](const Cluster& c) {
      return std::abs(c.u() - r.u) <= tol && std::abs(c.v() - r.v) <= tol;
    });
    if (it == clusters.end()) {
      clusters.push_back({r.u, r.v, 1, r.weight});
    } else {
      it->su += r.u;
      it->sv += r.v;
      ++it->count;
      it->weight += r.weight;
    }
  }
  SSpectrum out;
  out.reserve(clusters.size());
  for (const Cluster& c : clusters) out.push_back({c.u(), c.v(), c.weight});
  std::sort(out.begin(), out.end(), [](const SpectralSphere& a, const SpectralSphere& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  return out;
}

Root make_root(const Complex& z) {
  const double tol = kRealRootTol * (1.0 + std::abs(z));
  double weight = 0.0;
  if (std::abs(z.imag()) <= tol) {
    weight = 0.5;
  } else if (z.imag() > 0.0) {
    weight = 1.0;
  }
  return {z.real(), std::abs(z.imag()), weight};
}

double strict_lower_norm(const MatrixXcd& m) {
  double acc = 0.0;
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (Eigen::Index i = j + 1; i < m.rows(); ++i) acc += std::norm(m(i, j));
  }
  return std::sqrt(acc);
}

// Powers and the Dbar-kernel coefficients 2 (n T^{n-1} + U_n), advanced in n.
class DbarCoefficients {
 public:
  explicit DbarCoefficients(const CommutingOperator& T)
      : t_(T.as_matrix()),
        tb_(T.conj_matrix()),
        t_pow_(QuaternionMatrix::identity(T.dim())),
        tb_pow_(QuaternionMatrix::identity(T.dim())),
        mixed_(QuaternionMatrix::identity(T.dim())) {}

  /// Coefficient of index n (starting at 1), then advances.
  QuaternionMatrix next() {
    QuaternionMatrix c = 2.0 * (static_cast<double>(n_) * t_pow_ + mixed_);
    t_pow_ = t_ * t_pow_;
    tb_pow_ = tb_ * tb_pow_;
    mixed_ = t_ * mixed_ + tb_pow_;
    ++n_;
    return c;
  }

 private:
  QuaternionMatrix t_;
  QuaternionMatrix tb_;
  QuaternionMatrix t_pow_;   // T^{n-1}
  QuaternionMatrix tb_pow_;  // Tbar^{n-1}
  QuaternionMatrix mixed_;   // U_n = sum_{k=1}^n T^{n-k} Tbar^{k-1}
  int n_ = 1;
};

// Coefficients -4 V_n of the F-resolvent series, n >= 2, with
// V_{n+1} = T V_n + U_n.
class FCoefficients {
 public:
  explicit FCoefficients(const CommutingOperator& T)
      : t_(T.as_matrix()),
        tb_(T.conj_matrix()),
        tb_pow_(T.conj_matrix()),
        u_(T.as_matrix() + T.conj_matrix()),
        v_(QuaternionMatrix::identity(T.dim())) {}

  QuaternionMatrix next() {
    QuaternionMatrix c = -4.0 * v_;
    v_ = t_ * v_ + u_;
    tb_pow_ = tb_ * tb_pow_;
    u_ = t_ * u_ + tb_pow_;
    return c;
  }

 private:
  QuaternionMatrix t_;
  QuaternionMatrix tb_;
  QuaternionMatrix tb_pow_;  // Tbar^{n}
  QuaternionMatrix u_;       // U_{n+1}... starts at U_2 = T + Tbar
  QuaternionMatrix v_;       // V_n, starts at V_2 = I
};

// Q_l(T, Tbar) through W_{l+1} = T W_l + X_{l+1}, X_{l+1} = T X_l + Tbar^{l+1}.
class AppellOperators {
 public:
  explicit AppellOperators(const CommutingOperator& T)
      : t_(T.as_matrix()),
        tb_(T.conj_matrix()),
        tb_pow_(QuaternionMatrix::identity(T.dim())),
        x_(QuaternionMatrix::identity(T.dim())),
        w_(QuaternionMatrix::identity(T.dim())) {}

  QuaternionMatrix next() {
    const double l = level_;
    QuaternionMatrix value = (2.0 / ((l + 1.0) * (l + 2.0))) * w_;
    tb_pow_ = tb_ * tb_pow_;
    x_ = t_ * x_ + tb_pow_;
    w_ = t_ * w_ + x_;
    ++level_;
    return value;
  }

 private:
  QuaternionMatrix t_;
  QuaternionMatrix tb_;
  QuaternionMatrix tb_pow_;
  QuaternionMatrix x_;
  QuaternionMatrix w_;
  int level_ = 0;
};

QuaternionMatrix times_scalar(Side side, const QuaternionMatrix& m, const Quaternion& s) {
  return side == Side::Left ? m * s : s * m;
}

// 4 sum_{n>N} n(n-1)/2 rho^{n-2} / |s|^3, summed until the terms are negligible.
double f_series_tail_bound(double nu, double s_abs, int terms) {
  const double rho = nu / s_abs;
  if (rho >= 1.0) return std::numeric_limits<double>::infinity();
  double sum = 0.0;
  for (int n = terms + 1; n < terms + 1 + kMaxOperatorTerms; ++n) {
    const double nn = n;
    const double term = 2.0 * nn * (nn - 1.0) * std::pow(rho, nn - 2.0);
    sum += term;
    if (nn * (1.0 - rho) > 2.0 && term <= 1e-17 * sum) break;
  }
  return sum / (s_abs * s_abs * s_abs);
}

int terms_for(double (*bound)(double, double, int), double nu, double s_abs, double tol) {
  for (int n = 1; n <= kMaxOperatorTerms; ++n) {
    if (bound(nu, s_abs, n) <= tol) return n;
  }
  throw Error(ErrorCode::DivergentSeries, "operator series needs too many terms for the tolerance");
}

void require_norm(const Quaternion& s, const CommutingOperator& T, double tol) {
  if (!(tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "series tolerance must be positive");
  if (!(T.norm_bound() < s.norm())) {
    throw Error(ErrorCode::NormTooLarge, "operator series needs ||T|| < |s|, bound " +
                                             std::to_string(T.norm_bound()) + " vs |s| " +
                                             std::to_string(s.norm()));
  }
}

}  // namespace

QuaternionMatrix::QuaternionMatrix(int dim) {
  if (dim < 0) throw Error(ErrorCode::InvalidArgument, "negative matrix dimension");
  for (auto& m : c_) m = MatrixXd::Zero(dim, dim);
}

QuaternionMatrix::QuaternionMatrix(MatrixXd m0, MatrixXd m1, MatrixXd m2, MatrixXd m3)
    : c_{std::move(m0), std::move(m1), std::move(m2), std::move(m3)} {
  for (const auto& m : c_) {
    if (m.rows() != c_[0].rows() || m.cols() != c_[0].rows()) {
      throw Error(ErrorCode::InvalidArgument, "quaternion matrix components must be square and equal size");
    }
  }
}

QuaternionMatrix QuaternionMatrix::identity(int dim) {
  QuaternionMatrix m(dim);
  m.c_[0].setIdentity();
  return m;
}

QuaternionMatrix QuaternionMatrix::from_real(const MatrixXd& m) {
  const auto n = m.rows();
  return QuaternionMatrix(m, MatrixXd::Zero(n, n), MatrixXd::Zero(n, n), MatrixXd::Zero(n, n));
}

QuaternionMatrix QuaternionMatrix::scalar(const Quaternion& q, int dim) {
  QuaternionMatrix m(dim);
  const auto c = q.components();
  for (int i = 0; i < 4; ++i) m.c_[i].diagonal().setConstant(c[i]);
  return m;
}

Quaternion QuaternionMatrix::at(int i, int j) const {
  return {c_[0](i, j), c_[1](i, j), c_[2](i, j), c_[3](i, j)};
}

double QuaternionMatrix::norm() const {
  double acc = 0.0;
  for (const auto& m : c_) acc += m.squaredNorm();
  return std::sqrt(acc);
}

MatrixXd QuaternionMatrix::left_representation() const {
  const int d = dim();
  MatrixXd L(4 * d, 4 * d);
  const MatrixXd& a0 = c_[0];
  const MatrixXd& a1 = c_[1];
  const MatrixXd& a2 = c_[2];
  const MatrixXd& a3 = c_[3];
  L << a0, -a1, -a2, -a3,
       a1, a0, -a3, a2,
       a2, a3, a0, -a1,
       a3, -a2, a1, a0;
  return L;
}

QuaternionMatrix& QuaternionMatrix::operator+=(const QuaternionMatrix& o) {
  require_same_dim(*this, o);
  for (int i = 0; i < 4; ++i) c_[i] += o.c_[i];
  return *this;
}

QuaternionMatrix& QuaternionMatrix::operator-=(const QuaternionMatrix& o) {
  require_same_dim(*this, o);
  for (int i = 0; i < 4; ++i) c_[i] -= o.c_[i];
  return *this;
}

QuaternionMatrix& QuaternionMatrix::operator*=(double s) {
  for (auto& m : c_) m *= s;
  return *this;
}

QuaternionMatrix operator*(const QuaternionMatrix& a, const QuaternionMatrix& b) {
  require_same_dim(a, b);
  return hamilton({&a.c_[0], &a.c_[1], &a.c_[2], &a.c_[3]},
                  {&b.c_[0], &b.c_[1], &b.c_[2], &b.c_[3]});
}

QuaternionMatrix operator*(const Quaternion& q, const QuaternionMatrix& a) {
  const auto& m = a.c_;
  return QuaternionMatrix(q.w * m[0] - q.x * m[1] - q.y * m[2] - q.z * m[3],
                          q.w * m[1] + q.x * m[0] + q.y * m[3] - q.z * m[2],
                          q.w * m[2] - q.x * m[3] + q.y * m[0] + q.z * m[1],
                          q.w * m[3] + q.x * m[2] - q.y * m[1] + q.z * m[0]);
}

QuaternionMatrix operator*(const QuaternionMatrix& a, const Quaternion& q) {
  const auto& m = a.c_;
  return QuaternionMatrix(m[0] * q.w - m[1] * q.x - m[2] * q.y - m[3] * q.z,
                          m[0] * q.x + m[1] * q.w + m[2] * q.z - m[3] * q.y,
                          m[0] * q.y - m[1] * q.z + m[2] * q.w + m[3] * q.x,
                          m[0] * q.z + m[1] * q.y - m[2] * q.x + m[3] * q.w);
}

double relative_error(const QuaternionMatrix& a, const QuaternionMatrix& b, double floor) {
  const double denom = std::max(b.norm(), floor);
  const double diff = (a - b).norm();
  if (denom == 0.0) return diff == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  return diff / denom;
}

CommutingOperator::CommutingOperator(std::array<MatrixXd, 4> components, double eps_comm)
    : t_(std::move(components)) {
  const auto d = t_[0].rows();
  for (const auto& m : t_) {
    if (m.rows() != d || m.cols() != d) {
      throw Error(ErrorCode::InvalidArgument, "operator components must be square and equal size");
    }
    if (!m.allFinite()) throw Error(ErrorCode::InvalidArgument, "operator components must be finite");
  }
  if (d == 0) throw Error(ErrorCode::InvalidArgument, "operator dimension must be positive");
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      const double defect = (t_[i] * t_[j] - t_[j] * t_[i]).norm();
      if (defect > eps_comm * t_[i].norm() * t_[j].norm()) {
        throw Error(ErrorCode::NonCommuting, "components T" + std::to_string(i) + " and T" +
                                                 std::to_string(j) + " do not commute");
      }
    }
  }
  t_tbar_ = t_[0] * t_[0] + t_[1] * t_[1] + t_[2] * t_[2] + t_[3] * t_[3];

  auto spectral_norm = [](const MatrixXd& L) {
    Eigen::SelfAdjointEigenSolver<MatrixXd> es(L.transpose() * L, Eigen::EigenvaluesOnly);
    return std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
  };
  const double n1 = spectral_norm(as_matrix().left_representation());
  const double n2 = spectral_norm(conj_matrix().left_representation());
  norm_bound_ = std::max(n1, n2) * (1.0 + 1e-12);
}

CommutingOperator CommutingOperator::diagonal_lift(const std::vector<Quaternion>& points) {
  if (points.empty()) throw Error(ErrorCode::InvalidArgument, "diagonal lift needs at least one point");
  const auto d = static_cast<Eigen::Index>(points.size());
  std::array<MatrixXd, 4> c;
  for (auto& m : c) m = MatrixXd::Zero(d, d);
  for (Eigen::Index k = 0; k < d; ++k) {
    const auto q = points[static_cast<std::size_t>(k)].components();
    for (int i = 0; i < 4; ++i) c[i](k, k) = q[i];
  }
  return CommutingOperator(std::move(c));
}

QuaternionMatrix CommutingOperator::as_matrix() const {
  return QuaternionMatrix(t_[0], t_[1], t_[2], t_[3]);
}

QuaternionMatrix CommutingOperator::conj_matrix() const {
  return QuaternionMatrix(t_[0], -t_[1], -t_[2], -t_[3]);
}

std::vector<Complex> pencil_eigenvalues(const CommutingOperator& T) {
  const int d = T.dim();
  MatrixXd C = MatrixXd::Zero(2 * d, 2 * d);
  C.topRightCorner(d, d).setIdentity();
  C.bottomLeftCorner(d, d) = -T.t_tbar();
  C.bottomRightCorner(d, d) = 2.0 * T.component(0);
  Eigen::EigenSolver<MatrixXd> es(C, false);
  if (es.info() != Eigen::Success) {
    throw Error(ErrorCode::SingularPencil, "pencil eigenvalue iteration did not converge");
  }
  const auto ev = es.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

SSpectrum s_spectrum(const CommutingOperator& T) {
  const MatrixXd& T0 = T.component(0);
  const MatrixXd N = T.component(1) * T.component(1) + T.component(2) * T.component(2) +
                     T.component(3) * T.component(3);
  const MatrixXcd G = (T0 + kSchurMixing * N).cast<Complex>();
  Eigen::ComplexSchur<MatrixXcd> schur(G);
  std::vector<Root> roots;

  bool triangular = schur.info() == Eigen::Success;
  if (triangular) {
    const MatrixXcd& U = schur.matrixU();
    const MatrixXcd A = U.adjoint() * T0.cast<Complex>() * U;
    const MatrixXcd B = U.adjoint() * N.cast<Complex>() * U;
    const double scale = 1.0 + T0.norm() + N.norm();
    triangular = strict_lower_norm(A) <= 1e-8 * scale && strict_lower_norm(B) <= 1e-8 * scale;
    if (triangular) {
      for (Eigen::Index k = 0; k < A.rows(); ++k) {
        const Complex t0 = A(k, k);
        const Complex root = std::sqrt(B(k, k));
        const Complex i(0.0, 1.0);
        roots.push_back(make_root(t0 + i * root));
        roots.push_back(make_root(t0 - i * root));
      }
    }
  }
  if (!triangular) {
    for (const Complex& z : pencil_eigenvalues(T)) roots.push_back(make_root(z));
  }
  return cluster_roots(std::move(roots));
}

QuaternionMatrix qcs_op(const Quaternion& s, const CommutingOperator& T) {
  const int d = T.dim();
  return QuaternionMatrix::scalar(s * s, d) - 2.0 * (s * QuaternionMatrix::from_real(T.component(0))) +
         QuaternionMatrix::from_real(T.t_tbar());
}

QuaternionMatrix qcs_op_inverse(const Quaternion& s, const CommutingOperator& T) {
  const int d = T.dim();
  const double u = s.real();
  const double v = s.imag_norm();
  const Quaternion J = slice_unit(s);
  const MatrixXd I = MatrixXd::Identity(d, d);
  const MatrixXd P = (u * u - v * v) * I - 2.0 * u * T.component(0) + T.t_tbar();
  const MatrixXd R = 2.0 * v * (u * I - T.component(0));
  const MatrixXd M = P * P + R * R;
  Eigen::PartialPivLU<MatrixXd> lu(M);
  const double rcond = M.allFinite() ? lu.rcond() : 0.0;
  if (!(rcond > 64.0 * std::numeric_limits<double>::epsilon())) {
    throw Error(ErrorCode::SingularPencil, "Q_{c,s}(T) is not invertible: s is on the S-spectrum");
  }
  const MatrixXd Minv = lu.inverse();
  // (P - J R) M^{-1}
  const MatrixXd PM = P * Minv;
  const MatrixXd RM = R * Minv;
  return QuaternionMatrix(PM - J.w * RM, -J.x * RM, -J.y * RM, -J.z * RM);
}

QuaternionMatrix resolvent_eval(KernelKind kind, const Quaternion& s, const CommutingOperator& T) {
  const int d = T.dim();
  const QuaternionMatrix qinv = qcs_op_inverse(s, T);
  const QuaternionMatrix diff = QuaternionMatrix::scalar(s, d) - T.conj_matrix();
  const QuaternionMatrix T0 = QuaternionMatrix::from_real(T.component(0));
  switch (kind) {
    case KernelKind::SL:
      return diff * qinv;
    case KernelKind::SR:
      return qinv * diff;
    case KernelKind::FL:
      return -4.0 * (diff * (qinv * qinv));
    case KernelKind::FR:
      return -4.0 * ((qinv * qinv) * diff);
    case KernelKind::P2L: {
      const QuaternionMatrix fl = -4.0 * (diff * (qinv * qinv));
      return T0 * fl - fl * s;
    }
    case KernelKind::P2R: {
      const QuaternionMatrix fr = -4.0 * ((qinv * qinv) * diff);
      return fr * T0 - s * fr;
    }
  }
  return QuaternionMatrix(d);
}

std::string_view to_string(Calculus which) {
  switch (which) {
    case Calculus::S: return "S";
    case Calculus::F: return "F";
    case Calculus::P2: return "P2";
  }
  return "?";
}

Calculus parse_calculus(std::string_view name) {
  for (Calculus c : {Calculus::S, Calculus::F, Calculus::P2}) {
    if (name == to_string(c)) return c;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown calculus '" + std::string(name) + "'");
}

SliceContour default_calculus_contour(const CommutingOperator& T, ImaginaryUnit J, int nodes) {
  double max_abs = 0.0;
  for (const SpectralSphere& sp : s_spectrum(T)) max_abs = std::max(max_abs, std::hypot(sp.u, sp.v));
  return SliceContour::disk(0.0, 1.5 * max_abs + 0.5, J, nodes);
}

void validate_spectrum_enclosed(const SliceContour& contour, const SSpectrum& spectrum) {
  for (const SpectralSphere& sp : spectrum) {
    const double tol = 1e-12 * (1.0 + std::hypot(sp.u, sp.v));
    if (contour.boundary_distance(sp.u, sp.v) <= tol) {
      throw Error(ErrorCode::SphereHitsBoundary, "a spectral sphere meets the contour");
    }
    if (!contour.contains(sp.u, sp.v)) {
      throw Error(ErrorCode::SpectrumNotEnclosed, "the contour does not enclose the S-spectrum");
    }
  }
}

QuaternionMatrix calculus_apply(Calculus which, const SliceFunction& f, const CommutingOperator& T,
                                const SliceContour& contour) {
  validate_spectrum_enclosed(contour, s_spectrum(T));
  validate_function(contour, f);
  const bool left = f.chirality() == Side::Left;
  KernelKind kind = KernelKind::SL;
  switch (which) {
    case Calculus::S: kind = left ? KernelKind::SL : KernelKind::SR; break;
    case Calculus::F: kind = left ? KernelKind::FL : KernelKind::FR; break;
    case Calculus::P2: kind = left ? KernelKind::P2L : KernelKind::P2R; break;
  }
  return quadrature(
      contour,
      [&](const BoundaryNode& n) {
        const QuaternionMatrix r = resolvent_eval(kind, n.s, T);
        const Quaternion fs = f(n.s);
        return left ? r * (n.weight * fs) : (fs * n.weight) * r;
      },
      QuaternionMatrix(T.dim()));
}

QuaternionMatrix calculus_apply(Calculus which, const SliceFunction& f, const CommutingOperator& T) {
  return calculus_apply(which, f, T, default_calculus_contour(T));
}

OperatorSeriesValue series_oracle(OperatorSeries which, Side side, const Quaternion& s,
                                  const CommutingOperator& T, double tol) {
  require_norm(s, T, tol);
  const double nu = T.norm_bound();
  const double sa = s.norm();
  // Component norm <= sqrt(d) times the induced norm of the representation.
  const double scale = std::sqrt(static_cast<double>(T.dim()));
  const Quaternion sinv = s.inverse();
  QuaternionMatrix sum(T.dim());
  OperatorSeriesValue out;

  if (which == OperatorSeries::DbarKernel) {
    const int terms = terms_for(&dbar_series_tail_bound, nu, sa, tol / scale);
    DbarCoefficients coeff(T);
    Quaternion s_pow = sinv * sinv;
    for (int n = 1; n <= terms; ++n) {
      sum += times_scalar(side, coeff.next(), s_pow);
      s_pow = s_pow * sinv;
    }
    out.terms = terms;
    out.tail_bound = scale * dbar_series_tail_bound(nu, sa, terms);
  } else {
    const int terms = std::max(2, terms_for(&f_series_tail_bound, nu, sa, tol / scale));
    FCoefficients coeff(T);
    Quaternion s_pow = sinv * sinv * sinv;
    for (int n = 2; n <= terms; ++n) {
      sum += times_scalar(side, coeff.next(), s_pow);
      s_pow = s_pow * sinv;
    }
    out.terms = terms;
    out.tail_bound = scale * f_series_tail_bound(nu, sa, terms);
  }
  out.value = std::move(sum);
  return out;
}

OperatorSeriesValue appell_operator_series(Side side, const Quaternion& s,
                                           const CommutingOperator& T, double tol) {
  require_norm(s, T, tol);
  const double nu = T.norm_bound();
  const double sa = s.norm();
  const double scale = std::sqrt(static_cast<double>(T.dim()));
  const int terms = terms_for(&dbar_series_tail_bound, nu, sa, tol / scale);
  const Quaternion sinv = s.inverse();
  const QuaternionMatrix T0 = QuaternionMatrix::from_real(T.component(0));

  AppellOperators appell(T);
  QuaternionMatrix prev(T.dim());       // Q_{n-2}
  QuaternionMatrix cur = appell.next();  // Q_{n-1}
  Quaternion s_pow = sinv * sinv;
  QuaternionMatrix sum(T.dim());
  for (int n = 1; n <= terms; ++n) {
    if (n > 1) {
      prev = cur;
      cur = appell.next();
      s_pow = s_pow * sinv;
    }
    const double nn = n;
    const QuaternionMatrix c = (2.0 * nn) * ((nn + 1.0) * cur - (nn - 1.0) * (T0 * prev));
    sum += times_scalar(side, c, s_pow);
  }
  return {std::move(sum), terms, scale * dbar_series_tail_bound(nu, sa, terms)};
}

QuaternionMatrix monomial_oracle(Calculus which, int n, const CommutingOperator& T) {
  if (n < 0) throw Error(ErrorCode::BadDegree, "monomial degree must be non-negative");
  const int d = T.dim();
  const QuaternionMatrix t = T.as_matrix();
  const QuaternionMatrix tb = T.conj_matrix();
  switch (which) {
    case Calculus::S: {
      QuaternionMatrix p = QuaternionMatrix::identity(d);
      for (int k = 0; k < n; ++k) p = t * p;
      return p;
    }
    case Calculus::F: {
      if (n < 2) return QuaternionMatrix(d);
      FCoefficients coeff(T);
      QuaternionMatrix c = coeff.next();
      for (int k = 2; k < n; ++k) c = coeff.next();
      return c;
    }
    case Calculus::P2: {
      if (n < 1) return QuaternionMatrix(d);
      DbarCoefficients coeff(T);
      QuaternionMatrix c = coeff.next();
      for (int k = 1; k < n; ++k) c = coeff.next();
      return c;
    }
  }
  return QuaternionMatrix(d);
}

LiftReport diagonal_lift_check(const SliceFunction& f, const std::vector<Quaternion>& points) {
  const CommutingOperator T = CommutingOperator::diagonal_lift(points);
  const Side side = f.chirality();
  const QFunction g = [&f](const Quaternion& q) { return f(q); };

  auto deviation = [&](const QuaternionMatrix& m, auto&& expected) {
    double worst = 0.0;
    const int d = m.dim();
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) {
        const Quaternion want = i == j ? expected(points[static_cast<std::size_t>(i)]) : Quaternion();
        worst = std::max(worst, relative_error(m.at(i, j), want, 1.0));
      }
    }
    return worst;
  };

  LiftReport report;
  report.s_deviation =
      deviation(calculus_apply(Calculus::S, f, T), [&](const Quaternion& q) { return f(q); });
  report.f_deviation = deviation(calculus_apply(Calculus::F, f, T), [&](const Quaternion& q) {
    return fd_apply(FDOperator::Delta, g, q, side);
  });
  report.p2_deviation = deviation(calculus_apply(Calculus::P2, f, T), [&](const Quaternion& q) {
    return fd_apply(FDOperator::Dbar, g, q, side);
  });
  return report;
}

}  // namespace fueterkit
