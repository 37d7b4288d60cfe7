#include "fueterkit/quaternion.hpp"

#include <algorithm>
#include <ostream>

#include "fueterkit/error.hpp"

namespace fueterkit {

Quaternion Quaternion::inverse() const {
  const double n2 = norm2();
  if (w == 0.0 && x == 0.0 && y == 0.0 && z == 0.0) throw Error(ErrorCode::DivisionByZero, "inverse of the zero quaternion");
  if (!std::isfinite(n2) || n2 < 1e-280 || n2 > 1e280) {
    const double s = norm();
    const Quaternion u = *this / s;
    return u.conj() / s;
  }
  return conj() / n2;
}

Quaternion pow(const Quaternion& q, int n) {
  if (n < 0) return pow(q.inverse(), -n);
  Quaternion result(1.0);
  Quaternion base = q;
  while (n > 0) {
    if (n & 1) result = result * base;
    base = base * base;
    n >>= 1;
  }
  return result;
}

double relative_error(const Quaternion& a, const Quaternion& b, double floor) {
  const double denom = std::max(b.norm(), floor);
  const double diff = (a - b).norm();
  if (denom == 0.0) return diff;
  return diff / denom;
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
  return os << '[' << q.w << ", " << q.x << ", " << q.y << ", " << q.z << ']';
}

ImaginaryUnit ImaginaryUnit::from_vector(double x, double y, double z) {
  const double n = std::hypot(x, std::hypot(y, z));
  if (n == 0.0 || !std::isfinite(n)) {
    throw Error(ErrorCode::InvalidArgument, "imaginary unit needs a nonzero finite vector");
  }
  return ImaginaryUnit({0.0, x / n, y / n, z / n});
}

ImaginaryUnit ImaginaryUnit::from_quaternion(const Quaternion& q) {
  return from_vector(q.x, q.y, q.z);
}

Quaternion SlicePoint::compose() const {
  if (!J) return Quaternion(u);
  return slice_compose(u, v, *J);
}

SlicePoint slice_decompose(const Quaternion& q) {
  SlicePoint p;
  p.u = q.w;
  p.v = q.imag_norm();
  if (p.v > 0.0) p.J = ImaginaryUnit::from_vector(q.x, q.y, q.z);
  return p;
}

Quaternion slice_compose(double u, double v, const ImaginaryUnit& J) {
  return Quaternion(u) + v * J.value();
}

double default_sphere_tolerance(const Quaternion& q) { return 1e-10 * (1.0 + q.norm()); }

bool same_sphere(const Quaternion& q, const Quaternion& p) {
  return same_sphere(q, p, default_sphere_tolerance(q));
}

bool same_sphere(const Quaternion& q, const Quaternion& p, double eps) {
  return std::abs(q.w - p.w) <= eps && std::abs(q.imag_norm() - p.imag_norm()) <= eps;
}

}  // namespace fueterkit
