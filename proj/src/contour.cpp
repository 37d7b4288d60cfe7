#include "fueterkit/contour.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "fueterkit/error.hpp"

namespace fueterkit {

namespace {

double boundary_tolerance(double scale) { return 1e-12 * (1.0 + scale); }

}  // namespace

SliceContour::SliceContour(ImaginaryUnit J, std::vector<Circle> circles, int nodes)
    : J_(J), circles_(std::move(circles)), nodes_(nodes) {
  if (circles_.empty()) throw Error(ErrorCode::InvalidArgument, "contour needs at least one circle");
  if (nodes_ < 3) throw Error(ErrorCode::InvalidArgument, "contour needs at least 3 nodes");
  for (const Circle& c : circles_) {
    if (!(c.radius > 0.0) || !std::isfinite(c.radius) || !std::isfinite(c.center)) {
      throw Error(ErrorCode::NonPositiveRadius, "contour circle radius must be positive");
    }
  }
}

SliceContour SliceContour::disk(double center, double radius, ImaginaryUnit J, int nodes) {
  return SliceContour(J, {{center, radius, Orientation::CounterClockwise}}, nodes);
}

SliceContour SliceContour::annulus(double center, double inner_radius, double outer_radius,
                                   ImaginaryUnit J, int nodes) {
  if (!(inner_radius < outer_radius)) {
    throw Error(ErrorCode::InvalidArgument, "annulus needs inner radius < outer radius");
  }
  return SliceContour(J,
                      {{center, outer_radius, Orientation::CounterClockwise},
                       {center, inner_radius, Orientation::Clockwise}},
                      nodes);
}

SliceContour SliceContour::with_J(ImaginaryUnit J) const {
  SliceContour c = *this;
  c.J_ = J;
  return c;
}

SliceContour SliceContour::with_nodes(int nodes) const {
  return SliceContour(J_, circles_, nodes);
}

bool SliceContour::contains(double u, double v) const {
  bool inside_outer = false;
  for (const Circle& c : circles_) {
    const double d = std::hypot(u - c.center, v);
    if (c.orientation == Orientation::CounterClockwise) {
      inside_outer = inside_outer || d < c.radius;
    } else if (d <= c.radius) {
      return false;
    }
  }
  return inside_outer;
}

double SliceContour::boundary_distance(double u, double v) const {
  double best = std::numeric_limits<double>::infinity();
  for (const Circle& c : circles_) {
    best = std::min(best, std::abs(std::hypot(u - c.center, v) - c.radius));
  }
  return best;
}

double SliceContour::max_modulus() const {
  double m = 0.0;
  for (const Circle& c : circles_) m = std::max(m, std::abs(c.center) + c.radius);
  return m;
}

std::vector<BoundaryNode> SliceContour::boundary_nodes() const {
  std::vector<BoundaryNode> out;
  out.reserve(circles_.size() * static_cast<std::size_t>(nodes_));
  const Quaternion& J = J_.value();
  const double inv_n = 1.0 / nodes_;
  for (const Circle& c : circles_) {
    const double sign = c.orientation == Orientation::CounterClockwise ? 1.0 : -1.0;
    for (int k = 0; k < nodes_; ++k) {
      const double theta = 2.0 * std::numbers::pi * k * inv_n;
      const Quaternion offset = c.radius * (Quaternion(std::cos(theta)) + std::sin(theta) * J);
      out.push_back({Quaternion(c.center) + offset, (sign * inv_n) * offset});
    }
  }
  return out;
}

Quaternion quadrature(const SliceContour& contour,
                      const std::function<Quaternion(const Quaternion&)>& g) {
  return quadrature(
      contour, [&](const BoundaryNode& n) { return g(n.s) * n.weight; }, Quaternion());
}

void validate_point(const SliceContour& contour, const Quaternion& q) {
  const SlicePoint p = slice_decompose(q);
  const double tol = boundary_tolerance(q.norm());
  if (contour.boundary_distance(p.u, p.v) <= tol) {
    // q itself is in C_J when its imaginary part is parallel to J (or zero).
    const Quaternion& J = contour.J().value();
    const bool in_plane =
        !p.J || (p.J->value() - J).norm() <= 1e-12 || (p.J->value() + J).norm() <= 1e-12;
    throw Error(in_plane ? ErrorCode::PointOnBoundary : ErrorCode::SphereHitsBoundary,
                "evaluation point sphere meets the contour");
  }
  if (!contour.contains(p.u, p.v)) {
    throw Error(ErrorCode::OutsideDomain, "evaluation point lies outside the contour domain");
  }
}

void validate_function(const SliceContour& contour, const SliceFunction& f) {
  for (const Complex& z : f.singularities()) {
    const double u = z.real();
    const double v = std::abs(z.imag());
    if (contour.contains(u, v) || contour.boundary_distance(u, v) <= boundary_tolerance(std::abs(z))) {
      throw Error(ErrorCode::OutsideDomain,
                  "function '" + f.name() + "' has a singularity in the closed contour domain");
    }
  }
  if (!f.is_intrinsic() && !(contour.max_modulus() < f.radius())) {
    throw Error(ErrorCode::DivergentSeries, "contour domain leaves the series disk of convergence");
  }
}

Quaternion kernel_integral(KernelKind kind, const SliceFunction& f, const Quaternion& q,
                           const SliceContour& contour) {
  const Side side = kernel_side(kind);
  if (!f.is_intrinsic() && f.chirality() != side) {
    throw Error(ErrorCode::InvalidArgument, "kernel side does not match the function chirality");
  }
  validate_point(contour, q);
  validate_function(contour, f);
  return quadrature(
      contour,
      [&](const BoundaryNode& n) {
        const Quaternion k = kernel_eval(kind, n.s, q);
        return side == Side::Left ? k * n.weight * f(n.s) : f(n.s) * n.weight * k;
      },
      Quaternion());
}

Quaternion cauchy_eval(const SliceFunction& f, const Quaternion& q, const SliceContour& contour) {
  return kernel_integral(f.chirality() == Side::Left ? KernelKind::SL : KernelKind::SR, f, q,
                         contour);
}

Quaternion fueter_integral_eval(const SliceFunction& f, const Quaternion& q,
                                const SliceContour& contour) {
  return kernel_integral(f.chirality() == Side::Left ? KernelKind::FL : KernelKind::FR, f, q,
                         contour);
}

Quaternion polyanalytic_integral_eval(const SliceFunction& f, const Quaternion& q,
                                      const SliceContour& contour) {
  validate_point(contour, q);
  validate_function(contour, f);
  const bool left = f.chirality() == Side::Left;
  const KernelKind kind = left ? KernelKind::FL : KernelKind::FR;

  // k = 1 term (weight 1) and k = 0 term (weight s) accumulated separately.
  Quaternion with_s;
  Quaternion without_s;
  for (const BoundaryNode& n : contour.boundary_nodes()) {
    const Quaternion fk = kernel_eval(kind, n.s, q);
    const Quaternion fs = f(n.s);
    if (left) {
      with_s += fk * n.s * n.weight * fs;
      without_s += fk * n.weight * fs;
    } else {
      with_s += fs * n.weight * n.s * fk;
      without_s += fs * n.weight * fk;
    }
  }
  return -with_s + q.real() * without_s;
}

IndependenceReport contour_independence_check(
    const std::function<Quaternion(const SliceContour&)>& evaluator,
    const std::vector<SliceContour>& contours, double tolerance) {
  IndependenceReport report;
  report.tolerance = tolerance;
  for (const SliceContour& c : contours) report.values.push_back(evaluator(c));
  for (std::size_t i = 0; i < report.values.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      report.max_deviation = std::max(
          report.max_deviation, relative_error(report.values[i], report.values[j], 1.0));
    }
  }
  report.pass = report.max_deviation <= tolerance;
  return report;
}

}  // namespace fueterkit
