#pragma once

#include <string_view>

#include "fueterkit/quaternion.hpp"

namespace fueterkit {

/// S-kernels (slice Cauchy), F-kernels (Laplacian of S) and P2-kernels
/// (Dbar of S), each in its left and right form.
enum class KernelKind { SL, SR, FL, FR, P2L, P2R };

std::string_view to_string(KernelKind kind);
/// Parses "SL", "SR", "FL", "FR", "P2L", "P2R".
KernelKind parse_kernel_kind(std::string_view name);
Side kernel_side(KernelKind kind);

/// Q_{c,s}(q) = s^2 - 2 Re(q) s + |q|^2; vanishes iff s is on the sphere [q].
Quaternion qcs(const Quaternion& s, const Quaternion& q);

/// Pointwise kernel with the factor order kept exactly:
///   SL  = (s - qbar) Q^{-1}          SR  = Q^{-1} (s - qbar)
///   FL  = -4 (s - qbar) Q^{-2}       FR  = -4 Q^{-2} (s - qbar)
///   P2L = -FL s + q0 FL              P2R = -s FR + q0 FR
/// Throws OnSpectrumSphere when s lies on [q].
Quaternion kernel_eval(KernelKind kind, const Quaternion& s, const Quaternion& q);

/// Truncated kernel series together with its truncation data.
struct SeriesValue {
  Quaternion value;
  int terms = 0;
  double tail_bound = 0.0;
};

/// Majorant of the Dbar-kernel series remainder after `terms` terms,
/// 4 sum_{n > N} n |q|^{n-1} |s|^{-1-n}, in closed form.
double dbar_series_tail_bound(double q_abs, double s_abs, int terms);

/// Smallest N whose remainder majorant is <= tol. Throws NotInDisk if |q| >= |s|.
int dbar_series_terms_for(double q_abs, double s_abs, double tol);

/// 2 sum_{n=1}^N (n q^{n-1} + sum_{k=1}^n q^{n-k} qbar^{k-1}) s^{-1-n}
/// (left), mirrored with s^{-1-n} in front (right).
SeriesValue dbar_kernel_series(Side side, const Quaternion& s, const Quaternion& q, double tol);
SeriesValue dbar_kernel_series_fixed(Side side, const Quaternion& s, const Quaternion& q, int terms);

/// Same kernel through Clifford-Appell polynomials:
/// 2 sum_n n [(n+1) Q_{n-1} - q0 (n-1) Q_{n-2}] s^{-1-n} with Q_{-1} = 0.
SeriesValue appell_kernel_series(Side side, const Quaternion& s, const Quaternion& q, double tol);
SeriesValue appell_kernel_series_fixed(Side side, const Quaternion& s, const Quaternion& q,
                                       int terms);

/// Slice Cauchy kernel expansion sum_{n=0}^N q^n s^{-1-n} (left) or
/// s^{-1-n} q^n (right), truncated by its geometric remainder.
SeriesValue cauchy_kernel_series(Side side, const Quaternion& s, const Quaternion& q, double tol);

/// Numeric Clifford-Appell polynomial Q_l(q, qbar).
Quaternion appell_value(int l, const Quaternion& q);

}  // namespace fueterkit
