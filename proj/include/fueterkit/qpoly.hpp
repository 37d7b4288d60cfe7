#pragma once

// Polynomials in the commuting symbols (q, qbar) with rational coefficients.
// Fueter-type operators act exactly on the axial form A(q0, r) + w B(q0, r).

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <string>
#include <utility>

#include "fueterkit/quaternion.hpp"

namespace fueterkit {

using Rational = boost::multiprecision::cpp_rational;

/// Sparse bivariate polynomial with rational coefficients. Zero coefficients
/// are never stored, so structural equality is polynomial equality.
class Poly2 {
 public:
  using Exponents = std::pair<int, int>;
  using TermMap = std::map<Exponents, Rational>;

  Poly2() = default;
  static Poly2 constant(const Rational& c);
  static Poly2 monomial(int i, int j, const Rational& c = 1);

  const TermMap& terms() const { return terms_; }
  Rational coefficient(int i, int j) const;
  bool is_zero() const { return terms_.empty(); }

  /// Adds c to the coefficient of x^i y^j, dropping it if it cancels.
  void add_term(int i, int j, const Rational& c);

  Poly2& operator+=(const Poly2& o);
  Poly2& operator-=(const Poly2& o);
  Poly2& operator*=(const Rational& c);

  friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
  friend Poly2 operator-(Poly2 a, const Poly2& b) { return a -= b; }
  friend Poly2 operator-(Poly2 a) { return a *= Rational(-1); }
  friend Poly2 operator*(Poly2 a, const Rational& c) { return a *= c; }
  friend Poly2 operator*(const Rational& c, Poly2 a) { return a *= c; }
  friend Poly2 operator*(const Poly2& a, const Poly2& b);
  friend bool operator==(const Poly2& a, const Poly2& b) { return a.terms_ == b.terms_; }

  Poly2 derivative_first() const;   // d/dx
  Poly2 derivative_second() const;  // d/dy
  /// Divides by y; every term must carry y^{j>=1}.
  Poly2 divide_second() const;
  Poly2 power(int n) const;

  /// Parity in the second variable.
  bool is_even_in_second() const;
  bool is_odd_in_second() const;

  double evaluate(double x, double y) const;

 private:
  TermMap terms_;
};

/// Polynomial sum c_{a,b} q^a qbar^b in the commuting symbols q and qbar.
class QQbarPoly {
 public:
  QQbarPoly() = default;
  explicit QQbarPoly(Poly2 p) : p_(std::move(p)) {}

  static QQbarPoly constant(const Rational& c) { return QQbarPoly(Poly2::constant(c)); }
  static QQbarPoly monomial(int a, int b, const Rational& c = 1) {
    return QQbarPoly(Poly2::monomial(a, b, c));
  }
  static QQbarPoly q() { return monomial(1, 0); }
  static QQbarPoly qbar() { return monomial(0, 1); }
  /// q0 = (q + qbar) / 2.
  static QQbarPoly q0();

  const Poly2& poly() const { return p_; }
  const Poly2::TermMap& terms() const { return p_.terms(); }
  Rational coefficient(int a, int b) const { return p_.coefficient(a, b); }
  bool is_zero() const { return p_.is_zero(); }

  QQbarPoly& operator+=(const QQbarPoly& o) { p_ += o.p_; return *this; }
  QQbarPoly& operator-=(const QQbarPoly& o) { p_ -= o.p_; return *this; }
  QQbarPoly& operator*=(const Rational& c) { p_ *= c; return *this; }

  friend QQbarPoly operator+(QQbarPoly a, const QQbarPoly& b) { return a += b; }
  friend QQbarPoly operator-(QQbarPoly a, const QQbarPoly& b) { return a -= b; }
  friend QQbarPoly operator*(QQbarPoly a, const Rational& c) { return a *= c; }
  friend QQbarPoly operator*(const Rational& c, QQbarPoly a) { return a *= c; }
  friend QQbarPoly operator*(const QQbarPoly& a, const QQbarPoly& b) {
    return QQbarPoly(a.p_ * b.p_);
  }
  friend bool operator==(const QQbarPoly& a, const QQbarPoly& b) { return a.p_ == b.p_; }

  QQbarPoly power(int n) const { return QQbarPoly(p_.power(n)); }

  /// Numeric value at a quaternion, with qbar = conj(q).
  Quaternion evaluate(const Quaternion& q) const;

  /// Canonical text "c*q^a*qbar^b + ..." ordered by descending total degree,
  /// then descending power of q.
  std::string to_string() const;

 private:
  Poly2 p_;
};

/// Axial form A(q0, r) + w B(q0, r) with A even and B odd in r, where
/// q = q0 + w r, r = |Im q|, w in S.
class AxialPoly {
 public:
  AxialPoly() = default;
  /// Throws NotAxiallySymmetric if A is not even or B is not odd in r.
  AxialPoly(Poly2 a, Poly2 b);

  static AxialPoly constant(const Rational& c) { return AxialPoly(Poly2::constant(c), Poly2()); }
  static AxialPoly q0() { return AxialPoly(Poly2::monomial(1, 0), Poly2()); }
  static AxialPoly q() { return AxialPoly(Poly2::monomial(1, 0), Poly2::monomial(0, 1)); }
  static AxialPoly qbar() { return AxialPoly(Poly2::monomial(1, 0), -Poly2::monomial(0, 1)); }

  const Poly2& a() const { return a_; }
  const Poly2& b() const { return b_; }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

  friend AxialPoly operator+(const AxialPoly& x, const AxialPoly& y);
  friend AxialPoly operator-(const AxialPoly& x, const AxialPoly& y);
  friend AxialPoly operator*(const AxialPoly& x, const AxialPoly& y);
  friend AxialPoly operator*(const Rational& c, const AxialPoly& x);
  friend bool operator==(const AxialPoly& x, const AxialPoly& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }

  Quaternion evaluate(const Quaternion& q) const;

 private:
  Poly2 a_;
  Poly2 b_;
};

AxialPoly to_axial(const QQbarPoly& p);
QQbarPoly from_axial(const AxialPoly& x);

enum class FueterOperator { D, Dbar, Delta };

/// Exact left action of D, Dbar or the four-variable Laplacian on an axial
/// polynomial with real coefficients.
AxialPoly apply_operator_sym(FueterOperator op, const AxialPoly& p);
QQbarPoly apply_operator_sym(FueterOperator op, const QQbarPoly& p);

/// Dbar q^n = 2 (n q^{n-1} + sum_{k=1}^n q^{n-k} qbar^{k-1}), n >= 1.
QQbarPoly dbar_monomial(int n);

/// Clifford-Appell polynomial
/// Q_l = 2/((l+1)(l+2)) sum_{j=0}^l (l-j+1) q^{l-j} qbar^j, l >= 0.
QQbarPoly appell(int l);

/// Dbar q^n through the Appell polynomials,
/// 2n [(n+1) Q_{n-1} - q0 (n-1) Q_{n-2}], expanded with 2 q0 = q + qbar. n >= 2.
QQbarPoly dbar_monomial_appell(int n);

enum class LaplacianForm { Direct, Appell };

/// Delta q^n for n >= 2, either -4 sum_{k=1}^{n-1} (n-k) q^{n-k-1} qbar^{k-1}
/// or -2 n (n-1) Q_{n-2}.
QQbarPoly laplacian_monomial(int n, LaplacianForm form);

/// p = monogenic + q0 * q0_coefficient with both parts in ker D.
struct PolyanalyticParts {
  AxialPoly monogenic;
  AxialPoly q0_coefficient;
};

/// Throws NotPolyanalytic2 unless D^2 p = 0.
PolyanalyticParts polyanalytic_split(const AxialPoly& p);

}  // namespace fueterkit
