#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "fueterkit/kernels.hpp"
#include "fueterkit/quaternion.hpp"
#include "fueterkit/slice_function.hpp"

namespace fueterkit {

inline constexpr int kDefaultNodes = 256;

enum class Orientation { CounterClockwise, Clockwise };

/// Circle in the slice plane C_J centred on the real axis.
struct Circle {
  double center = 0.0;
  double radius = 1.0;
  Orientation orientation = Orientation::CounterClockwise;
};

/// One trapezoid node s_k on the boundary together with the quadrature weight
/// that stands for ds_J / (2 pi). With s = c + R e^{J theta} on a ccw circle,
/// ds_J = ds (-J) = R e^{J theta} d theta, so the weight is +-(s_k - c) / N.
/// The weight lies in C_J and is placed between kernel and function by callers.
struct BoundaryNode {
  Quaternion s;
  Quaternion weight;
};

/// Boundary of an axially symmetric slice Cauchy domain (disk or annulus
/// centred on the real axis) in the plane C_J.
class SliceContour {
 public:
  SliceContour(ImaginaryUnit J, std::vector<Circle> circles, int nodes = kDefaultNodes);

  static SliceContour disk(double center, double radius, ImaginaryUnit J,
                           int nodes = kDefaultNodes);
  /// Outer boundary ccw, inner boundary cw.
  static SliceContour annulus(double center, double inner_radius, double outer_radius,
                              ImaginaryUnit J, int nodes = kDefaultNodes);

  const ImaginaryUnit& J() const { return J_; }
  const std::vector<Circle>& circles() const { return circles_; }
  int nodes() const { return nodes_; }

  SliceContour with_J(ImaginaryUnit J) const;
  SliceContour with_nodes(int nodes) const;

  /// Whether the slice coordinate (u, v) lies in the open domain.
  bool contains(double u, double v) const;
  /// Euclidean distance from (u, v) to the nearest boundary circle.
  double boundary_distance(double u, double v) const;
  /// Largest |s| over the closed domain.
  double max_modulus() const;

  std::vector<BoundaryNode> boundary_nodes() const;

 private:
  ImaginaryUnit J_;
  std::vector<Circle> circles_;
  int nodes_;
};

/// Sums integrand(node) over all boundary nodes in a fixed order, so repeated
/// runs are bit-identical.
template <typename T, typename Integrand>
T quadrature(const SliceContour& contour, Integrand&& integrand, T zero) {
  T acc = std::move(zero);
  for (const BoundaryNode& node : contour.boundary_nodes()) acc += integrand(node);
  return acc;
}

/// Plain (1/2pi) \oint g(s) ds_J for a C_J-valued or otherwise scalar integrand,
/// multiplying ds_J on the right.
Quaternion quadrature(const SliceContour& contour, const std::function<Quaternion(const Quaternion&)>& g);

/// Throws PointOnBoundary / SphereHitsBoundary / OutsideDomain unless the
/// sphere [q] meets C_J strictly inside the domain.
void validate_point(const SliceContour& contour, const Quaternion& q);
/// Throws OutsideDomain if a singularity of f lies in the closed domain and
/// DivergentSeries if the domain leaves the series disk.
void validate_function(const SliceContour& contour, const SliceFunction& f);

/// (1/2pi) \oint K(s, q) ds_J f(s) for left kernels, (1/2pi) \oint f(s) ds_J K(s, q)
/// for right kernels.
Quaternion kernel_integral(KernelKind kind, const SliceFunction& f, const Quaternion& q,
                           const SliceContour& contour);

/// Slice Cauchy formula; reproduces f(q).
Quaternion cauchy_eval(const SliceFunction& f, const Quaternion& q, const SliceContour& contour);

/// Integral form of the Fueter map; reproduces Delta f(q).
Quaternion fueter_integral_eval(const SliceFunction& f, const Quaternion& q,
                                const SliceContour& contour);

/// Integral representation of Dbar f (left) or f Dbar (right):
///  -(1/2pi) sum_{k=0,1} (-q0)^k \oint F_L(s,q) s^{1-k} ds_J f(s)
/// and its mirror with f(s) ds_J s^{1-k} F_R(s,q).
Quaternion polyanalytic_integral_eval(const SliceFunction& f, const Quaternion& q,
                                      const SliceContour& contour);

struct IndependenceReport {
  std::vector<Quaternion> values;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

/// Max pairwise deviation |a - b| / max(1, |b|) of an integral formula across
/// several contours.
IndependenceReport contour_independence_check(
    const std::function<Quaternion(const SliceContour&)>& evaluator,
    const std::vector<SliceContour>& contours, double tolerance = 1e-9);

}  // namespace fueterkit
