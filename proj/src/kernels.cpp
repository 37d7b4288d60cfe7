#include "fueterkit/kernels.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "fueterkit/error.hpp"

namespace fueterkit {

namespace {

constexpr int kMaxSeriesTerms = 1'000'000;

void require_disk(const Quaternion& s, const Quaternion& q) {
  if (!(q.norm() < s.norm())) {
    throw Error(ErrorCode::NotInDisk, "kernel series needs |q| < |s|");
  }
}

}  // namespace

std::string_view to_string(KernelKind kind) {
  switch (kind) {
    case KernelKind::SL: return "SL";
    case KernelKind::SR: return "SR";
    case KernelKind::FL: return "FL";
    case KernelKind::FR: return "FR";
    case KernelKind::P2L: return "P2L";
    case KernelKind::P2R: return "P2R";
  }
  return "?";
}

KernelKind parse_kernel_kind(std::string_view name) {
  for (KernelKind k : {KernelKind::SL, KernelKind::SR, KernelKind::FL, KernelKind::FR,
                       KernelKind::P2L, KernelKind::P2R}) {
    if (name == to_string(k)) return k;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown kernel kind '" + std::string(name) + "'");
}

Side kernel_side(KernelKind kind) {
  switch (kind) {
    case KernelKind::SL:
    case KernelKind::FL:
    case KernelKind::P2L:
      return Side::Left;
    default:
      return Side::Right;
  }
}

Quaternion qcs(const Quaternion& s, const Quaternion& q) {
  return s * s - 2.0 * q.real() * s + Quaternion(q.norm2());
}

Quaternion kernel_eval(KernelKind kind, const Quaternion& s, const Quaternion& q) {
  if (same_sphere(q, s)) {
    throw Error(ErrorCode::OnSpectrumSphere, "kernel singular: s lies on the sphere [q]");
  }
  const Quaternion qinv = qcs(s, q).inverse();
  const Quaternion diff = s - q.conj();
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
      const Quaternion fl = -4.0 * (diff * (qinv * qinv));
      return -(fl * s) + q.real() * fl;
    }
    case KernelKind::P2R: {
      const Quaternion fr = -4.0 * ((qinv * qinv) * diff);
      return -(s * fr) + q.real() * fr;
    }
  }
  return {};
}

double dbar_series_tail_bound(double q_abs, double s_abs, int terms) {
  const double rho = q_abs / s_abs;
  if (rho >= 1.0) return std::numeric_limits<double>::infinity();
  const double n = terms;
  // sum_{n>N} n rho^{n-1} = rho^N ((N+1) - N rho) / (1 - rho)^2
  return 4.0 * std::pow(rho, n) * ((n + 1.0) - n * rho) /
         ((1.0 - rho) * (1.0 - rho) * s_abs * s_abs);
}

int dbar_series_terms_for(double q_abs, double s_abs, double tol) {
  if (!(q_abs < s_abs)) throw Error(ErrorCode::NotInDisk, "kernel series needs |q| < |s|");
  if (!(tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "series tolerance must be positive");
  for (int n = 1; n <= kMaxSeriesTerms; ++n) {
    if (dbar_series_tail_bound(q_abs, s_abs, n) <= tol) return n;
  }
  throw Error(ErrorCode::DivergentSeries, "series needs too many terms for the tolerance");
}

SeriesValue dbar_kernel_series_fixed(Side side, const Quaternion& s, const Quaternion& q,
                                     int terms) {
  require_disk(s, q);
  const Quaternion sinv = s.inverse();
  const Quaternion qb = q.conj();
  Quaternion sum;
  Quaternion q_pow(1.0);         // q^{n-1}
  Quaternion qb_pow(1.0);        // qbar^{n-1}
  Quaternion mixed(1.0);         // sum_{k=1}^n q^{n-k} qbar^{k-1}
  Quaternion s_pow = sinv * sinv;  // s^{-1-n}
  for (int n = 1; n <= terms; ++n) {
    if (n > 1) {
      q_pow = q_pow * q;
      qb_pow = qb_pow * qb;
      mixed = q * mixed + qb_pow;
      s_pow = s_pow * sinv;
    }
    const Quaternion poly = 2.0 * (static_cast<double>(n) * q_pow + mixed);
    sum += side == Side::Left ? poly * s_pow : s_pow * poly;
  }
  return {sum, terms, dbar_series_tail_bound(q.norm(), s.norm(), terms)};
}

SeriesValue dbar_kernel_series(Side side, const Quaternion& s, const Quaternion& q, double tol) {
  return dbar_kernel_series_fixed(side, s, q, dbar_series_terms_for(q.norm(), s.norm(), tol));
}

namespace {

// Running Clifford-Appell values Q_{l} for consecutive l through the
// unnormalized sums W_l = sum_j (l-j+1) q^{l-j} qbar^j and
// X_l = sum_j q^{l-j} qbar^j, with W_{l+1} = q W_l + X_{l+1}, X_{l+1} = q X_l + qbar^{l+1}.
class AppellSequence {
 public:
  explicit AppellSequence(const Quaternion& q) : q_(q), qb_(q.conj()) {}

  /// Returns Q_l and advances to l + 1.
  Quaternion next() {
    const double l = level_;
    const Quaternion value = (2.0 / ((l + 1.0) * (l + 2.0))) * w_;
    qb_pow_ = qb_pow_ * qb_;
    x_ = q_ * x_ + qb_pow_;
    w_ = q_ * w_ + x_;
    ++level_;
    return value;
  }

 private:
  Quaternion q_;
  Quaternion qb_;
  Quaternion qb_pow_{1.0};
  Quaternion x_{1.0};
  Quaternion w_{1.0};
  int level_ = 0;
};

}  // namespace

Quaternion appell_value(int l, const Quaternion& q) {
  if (l < 0) throw Error(ErrorCode::BadDegree, "appell needs l >= 0");
  AppellSequence seq(q);
  Quaternion v;
  for (int i = 0; i <= l; ++i) v = seq.next();
  return v;
}

SeriesValue appell_kernel_series_fixed(Side side, const Quaternion& s, const Quaternion& q,
                                       int terms) {
  require_disk(s, q);
  const Quaternion sinv = s.inverse();
  const double q0 = q.real();
  AppellSequence seq(q);
  Quaternion prev;  // Q_{n-2}
  Quaternion cur = seq.next();  // Q_{n-1}
  Quaternion s_pow = sinv * sinv;
  Quaternion sum;
  for (int n = 1; n <= terms; ++n) {
    if (n > 1) {
      prev = cur;
      cur = seq.next();
      s_pow = s_pow * sinv;
    }
    const double nn = n;
    const Quaternion poly = 2.0 * nn * ((nn + 1.0) * cur - q0 * (nn - 1.0) * prev);
    sum += side == Side::Left ? poly * s_pow : s_pow * poly;
  }
  return {sum, terms, dbar_series_tail_bound(q.norm(), s.norm(), terms)};
}

SeriesValue appell_kernel_series(Side side, const Quaternion& s, const Quaternion& q, double tol) {
  return appell_kernel_series_fixed(side, s, q, dbar_series_terms_for(q.norm(), s.norm(), tol));
}

SeriesValue cauchy_kernel_series(Side side, const Quaternion& s, const Quaternion& q, double tol) {
  require_disk(s, q);
  const double rho = q.norm() / s.norm();
  const double sa = s.norm();
  // remainder after terms 0..N: rho^{N+1} / (|s| (1 - rho))
  int terms = 0;
  while (std::pow(rho, terms + 1) / (sa * (1.0 - rho)) > tol) {
    if (++terms > kMaxSeriesTerms) {
      throw Error(ErrorCode::DivergentSeries, "series needs too many terms for the tolerance");
    }
  }
  const Quaternion sinv = s.inverse();
  Quaternion q_pow(1.0);
  Quaternion s_pow = sinv;
  Quaternion sum;
  for (int n = 0; n <= terms; ++n) {
    sum += side == Side::Left ? q_pow * s_pow : s_pow * q_pow;
    q_pow = q_pow * q;
    s_pow = s_pow * sinv;
  }
  return {sum, terms, std::pow(rho, terms + 1) / (sa * (1.0 - rho))};
}

}  // namespace fueterkit
