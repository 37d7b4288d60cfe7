#pragma once

// Central finite differences for Fueter-type operators on black-box
// functions H -> H, with residual checks built on top.

#include <functional>
#include <string_view>
#include <utility>
#include <vector>

#include "fueterkit/quaternion.hpp"

namespace fueterkit {

using QFunction = std::function<Quaternion(const Quaternion&)>;
/// Function of the axial coordinates (q0, r).
using AxialFunction = std::function<Quaternion(double, double)>;

struct FDConfig {
  double h1 = 1e-5;  // first derivatives
  double h2 = 1e-3;  // second derivatives and nested stencils

  /// h1 = 1e-5 (1 + |q|), h2 = 1e-3 (1 + |q|).
  static FDConfig at(const Quaternion& q);
};

enum class FDOperator { D, Dbar, Delta, D2 };

/// Central difference d f / d q_axis with step h (axis 0..3).
Quaternion fd_partial(const QFunction& f, const Quaternion& q, int axis, double h);

/// Left action multiplies e_i from the left (D f = sum e_i d_i f), right
/// action from the right (f D = sum d_i f e_i).
Quaternion fd_apply(FDOperator op, const QFunction& f, const Quaternion& q, const FDConfig& cfg,
                    Side side = Side::Left);
Quaternion fd_apply(FDOperator op, const QFunction& f, const Quaternion& q,
                    Side side = Side::Left);

/// A(q0, r) = (f(q0 + w r) + f(q0 - w r)) / 2 and B = -w (f(q0 + w r) - f(q0 - w r)) / 2,
/// so that f(q0 + w r) = A + w B.
std::pair<AxialFunction, AxialFunction> axial_parts(const QFunction& f, const ImaginaryUnit& w);

/// Residuals of the second-order system satisfied by A + w B in ker D^2:
///   A_00 - 2 B_0r - (4/r) B_0 - A_rr - (2/r) A_r
///   B_00 + 2 A_0r - B_rr - 2 (r B_r - B) / r^2
/// Throws NonPositiveRadius for r <= 0.
std::pair<Quaternion, Quaternion> vekua2_residual(const AxialFunction& A, const AxialFunction& B,
                                                  double q0, double r, const FDConfig& cfg);
std::pair<Quaternion, Quaternion> vekua2_residual(const AxialFunction& A, const AxialFunction& B,
                                                  double q0, double r);

enum class ResidualKind { Monogenic, Polyanalytic2, Harmonic };

std::string_view to_string(ResidualKind kind);

struct ResidualReport {
  ResidualKind kind = ResidualKind::Monogenic;
  double max_residual = 0.0;  // normalized by 1 + |f(q)| + |q|
  Quaternion worst_point;
  std::size_t samples = 0;
};

/// Max over samples of |D f|, |D^2 f| or |Delta f| respectively.
ResidualReport residual_suite(const QFunction& f, ResidualKind kind,
                              const std::vector<Quaternion>& samples, Side side = Side::Left);

}  // namespace fueterkit
