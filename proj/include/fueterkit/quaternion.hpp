#pragma once

#include <array>
#include <cmath>
#include <iosfwd>
#include <optional>
#include <string>

namespace fueterkit {

/// Which side quaternionic factors act from (left/right slice functions,
/// kernels and operator actions).
enum class Side { Left, Right };

/// Real quaternion w + x e1 + y e2 + z e3 with e1 e2 = e3, e2 e3 = e1, e3 e1 = e2.
struct Quaternion {
  double w = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double w_) : w(w_) {}  // NOLINT: reals embed implicitly
  constexpr Quaternion(double w_, double x_, double y_, double z_) : w(w_), x(x_), y(y_), z(z_) {}

  static constexpr Quaternion e1() { return {0, 1, 0, 0}; }
  static constexpr Quaternion e2() { return {0, 0, 1, 0}; }
  static constexpr Quaternion e3() { return {0, 0, 0, 1}; }

  constexpr double real() const { return w; }
  constexpr Quaternion imag() const { return {0, x, y, z}; }
  constexpr Quaternion conj() const { return {w, -x, -y, -z}; }
  constexpr double norm2() const { return w * w + x * x + y * y + z * z; }
  double norm() const { return std::hypot(std::hypot(w, x), std::hypot(y, z)); }
  double imag_norm() const { return std::hypot(x, std::hypot(y, z)); }
  constexpr bool is_real() const { return x == 0.0 && y == 0.0 && z == 0.0; }

  /// q^{-1} = conj(q)/|q|^2; throws DivisionByZero for q = 0.
  Quaternion inverse() const;

  constexpr std::array<double, 4> components() const { return {w, x, y, z}; }

  constexpr Quaternion& operator+=(const Quaternion& o) {
    w += o.w; x += o.x; y += o.y; z += o.z;
    return *this;
  }
  constexpr Quaternion& operator-=(const Quaternion& o) {
    w -= o.w; x -= o.x; y -= o.y; z -= o.z;
    return *this;
  }
  constexpr Quaternion& operator*=(double s) {
    w *= s; x *= s; y *= s; z *= s;
    return *this;
  }
  constexpr Quaternion& operator/=(double s) {
    w /= s; x /= s; y /= s; z /= s;
    return *this;
  }
};

constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
constexpr Quaternion operator-(const Quaternion& a) { return {-a.w, -a.x, -a.y, -a.z}; }
constexpr Quaternion operator*(Quaternion a, double s) { return a *= s; }
constexpr Quaternion operator*(double s, Quaternion a) { return a *= s; }
constexpr Quaternion operator/(Quaternion a, double s) { return a /= s; }

constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
          a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
          a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

constexpr bool operator==(const Quaternion& a, const Quaternion& b) {
  return a.w == b.w && a.x == b.x && a.y == b.y && a.z == b.z;
}

inline Quaternion quat_mul(const Quaternion& a, const Quaternion& b) { return a * b; }
inline Quaternion quat_inv(const Quaternion& q) { return q.inverse(); }

/// Integer power by repeated squaring; negative exponents go through the inverse.
Quaternion pow(const Quaternion& q, int n);

/// |a - b| / max(|b|, floor).
double relative_error(const Quaternion& a, const Quaternion& b, double floor = 0.0);

std::ostream& operator<<(std::ostream& os, const Quaternion& q);

/// Unit purely imaginary quaternion; J^2 = -1 by construction.
class ImaginaryUnit {
 public:
  /// Normalizes (x, y, z); throws InvalidArgument for the zero vector.
  static ImaginaryUnit from_vector(double x, double y, double z);
  /// Uses the imaginary part of q; throws InvalidArgument when it vanishes.
  static ImaginaryUnit from_quaternion(const Quaternion& q);

  static ImaginaryUnit e1() { return ImaginaryUnit({0, 1, 0, 0}); }
  static ImaginaryUnit e2() { return ImaginaryUnit({0, 0, 1, 0}); }
  static ImaginaryUnit e3() { return ImaginaryUnit({0, 0, 0, 1}); }

  const Quaternion& value() const { return q_; }
  operator const Quaternion&() const { return q_; }  // NOLINT
  ImaginaryUnit operator-() const { return ImaginaryUnit(-q_); }

 private:
  explicit ImaginaryUnit(const Quaternion& q) : q_(q) {}
  Quaternion q_;
};

/// q = u + J v with v >= 0. Real points carry no imaginary unit.
struct SlicePoint {
  double u = 0.0;
  double v = 0.0;
  std::optional<ImaginaryUnit> J;

  Quaternion compose() const;
};

SlicePoint slice_decompose(const Quaternion& q);
Quaternion slice_compose(double u, double v, const ImaginaryUnit& J);

/// Default tolerance for sphere membership, 1e-10 (1 + |q|).
double default_sphere_tolerance(const Quaternion& q);

/// True iff p lies on the sphere [q] = Re(q) + S |Im(q)|.
bool same_sphere(const Quaternion& q, const Quaternion& p);
bool same_sphere(const Quaternion& q, const Quaternion& p, double eps);

}  // namespace fueterkit
