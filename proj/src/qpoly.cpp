#include "fueterkit/qpoly.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "fueterkit/error.hpp"

namespace fueterkit {

// ---------------------------------------------------------------------------
// Poly2

Poly2 Poly2::constant(const Rational& c) { return monomial(0, 0, c); }

Poly2 Poly2::monomial(int i, int j, const Rational& c) {
  Poly2 p;
  p.add_term(i, j, c);
  return p;
}

Rational Poly2::coefficient(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? Rational(0) : it->second;
}

void Poly2::add_term(int i, int j, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace({i, j}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly2& Poly2::operator+=(const Poly2& o) {
  for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, c);
  return *this;
}

Poly2& Poly2::operator-=(const Poly2& o) {
  for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, -c);
  return *this;
}

Poly2& Poly2::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Poly2 operator*(const Poly2& a, const Poly2& b) {
  Poly2 out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      out.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
    }
  }
  return out;
}

Poly2 Poly2::derivative_first() const {
  Poly2 out;
  for (const auto& [e, c] : terms_) {
    if (e.first > 0) out.add_term(e.first - 1, e.second, c * e.first);
  }
  return out;
}

Poly2 Poly2::derivative_second() const {
  Poly2 out;
  for (const auto& [e, c] : terms_) {
    if (e.second > 0) out.add_term(e.first, e.second - 1, c * e.second);
  }
  return out;
}

Poly2 Poly2::divide_second() const {
  Poly2 out;
  for (const auto& [e, c] : terms_) {
    if (e.second < 1) {
      throw Error(ErrorCode::InvalidArgument, "polynomial is not divisible by its second variable");
    }
    out.add_term(e.first, e.second - 1, c);
  }
  return out;
}

Poly2 Poly2::power(int n) const {
  if (n < 0) throw Error(ErrorCode::BadDegree, "negative polynomial power");
  Poly2 result = constant(1);
  Poly2 base = *this;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

bool Poly2::is_even_in_second() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.first.second % 2 == 0; });
}

bool Poly2::is_odd_in_second() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.first.second % 2 == 1; });
}

double Poly2::evaluate(double x, double y) const {
  double sum = 0.0;
  for (const auto& [e, c] : terms_) {
    sum += c.convert_to<double>() * std::pow(x, e.first) * std::pow(y, e.second);
  }
  return sum;
}

// ---------------------------------------------------------------------------
// QQbarPoly

QQbarPoly QQbarPoly::q0() { return (q() + qbar()) * Rational(1, 2); }

Quaternion QQbarPoly::evaluate(const Quaternion& q) const {
  // q and qbar commute, so every monomial is q^a * qbar^b in any order.
  int max_a = 0;
  int max_b = 0;
  for (const auto& [e, c] : terms()) {
    max_a = std::max(max_a, e.first);
    max_b = std::max(max_b, e.second);
  }
  std::vector<Quaternion> qp(max_a + 1, Quaternion(1.0));
  std::vector<Quaternion> qbp(max_b + 1, Quaternion(1.0));
  const Quaternion qb = q.conj();
  for (int i = 1; i <= max_a; ++i) qp[i] = qp[i - 1] * q;
  for (int i = 1; i <= max_b; ++i) qbp[i] = qbp[i - 1] * qb;

  Quaternion sum;
  for (const auto& [e, c] : terms()) {
    sum += c.convert_to<double>() * (qp[e.first] * qbp[e.second]);
  }
  return sum;
}

namespace {

std::string symbol_power(const char* name, int e) {
  if (e == 0) return {};
  if (e == 1) return name;
  return std::string(name) + "^" + std::to_string(e);
}

}  // namespace

std::string QQbarPoly::to_string() const {
  if (is_zero()) return "0";
  std::vector<std::pair<Poly2::Exponents, Rational>> ordered(terms().begin(), terms().end());
  std::sort(ordered.begin(), ordered.end(), [](const auto& l, const auto& r) {
    const int dl = l.first.first + l.first.second;
    const int dr = r.first.first + r.first.second;
    if (dl != dr) return dl > dr;
    return l.first.first > r.first.first;
  });

  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : ordered) {
    Rational mag = c;
    if (c < 0) {
      out << (first ? "-" : " - ");
      mag = -c;
    } else if (!first) {
      out << " + ";
    }
    first = false;

    std::vector<std::string> factors;
    const bool unit = (mag == 1);
    if (!unit || (e.first == 0 && e.second == 0)) factors.push_back(mag.str());
    if (e.first > 0) factors.push_back(symbol_power("q", e.first));
    if (e.second > 0) factors.push_back(symbol_power("qbar", e.second));
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) out << '*';
      out << factors[i];
    }
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// AxialPoly

AxialPoly::AxialPoly(Poly2 a, Poly2 b) : a_(std::move(a)), b_(std::move(b)) {
  if (!a_.is_even_in_second() || !b_.is_odd_in_second()) {
    throw Error(ErrorCode::NotAxiallySymmetric,
                "axial form needs A even and B odd in r");
  }
}

AxialPoly operator+(const AxialPoly& x, const AxialPoly& y) {
  AxialPoly out;
  out.a_ = x.a_ + y.a_;
  out.b_ = x.b_ + y.b_;
  return out;
}

AxialPoly operator-(const AxialPoly& x, const AxialPoly& y) {
  AxialPoly out;
  out.a_ = x.a_ - y.a_;
  out.b_ = x.b_ - y.b_;
  return out;
}

AxialPoly operator*(const AxialPoly& x, const AxialPoly& y) {
  // Real coefficients commute with w, and w^2 = -1.
  AxialPoly out;
  out.a_ = x.a_ * y.a_ - x.b_ * y.b_;
  out.b_ = x.a_ * y.b_ + x.b_ * y.a_;
  return out;
}

AxialPoly operator*(const Rational& c, const AxialPoly& x) {
  AxialPoly out;
  out.a_ = x.a_ * c;
  out.b_ = x.b_ * c;
  return out;
}

Quaternion AxialPoly::evaluate(const Quaternion& q) const {
  const SlicePoint p = slice_decompose(q);
  const double a = a_.evaluate(p.u, p.v);
  if (!p.J) return Quaternion(a);  // B(u, 0) = 0 by parity
  return Quaternion(a) + b_.evaluate(p.u, p.v) * p.J->value();
}

AxialPoly to_axial(const QQbarPoly& p) {
  int max_a = 0;
  int max_b = 0;
  for (const auto& [e, c] : p.terms()) {
    max_a = std::max(max_a, e.first);
    max_b = std::max(max_b, e.second);
  }
  std::vector<AxialPoly> qp(max_a + 1, AxialPoly::constant(1));
  std::vector<AxialPoly> qbp(max_b + 1, AxialPoly::constant(1));
  for (int i = 1; i <= max_a; ++i) qp[i] = qp[i - 1] * AxialPoly::q();
  for (int i = 1; i <= max_b; ++i) qbp[i] = qbp[i - 1] * AxialPoly::qbar();

  AxialPoly out;
  for (const auto& [e, c] : p.terms()) out = out + c * (qp[e.first] * qbp[e.second]);
  return out;
}

QQbarPoly from_axial(const AxialPoly& x) {
  // q0 = (q + qbar)/2, w r = (q - qbar)/2, r^2 = -(w r)^2.
  const QQbarPoly q0 = QQbarPoly::q0();
  const QQbarPoly wr = (QQbarPoly::q() - QQbarPoly::qbar()) * Rational(1, 2);
  const QQbarPoly r2 = wr * wr * Rational(-1);

  QQbarPoly out;
  for (const auto& [e, c] : x.a().terms()) {
    out += c * (q0.power(e.first) * r2.power(e.second / 2));
  }
  for (const auto& [e, c] : x.b().terms()) {
    out += c * (q0.power(e.first) * r2.power((e.second - 1) / 2) * wr);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Operators

namespace {

// (r B_r - B) / r^2 for B odd in r; the r^1 terms cancel exactly.
Poly2 radial_correction(const Poly2& b) {
  Poly2 out;
  for (const auto& [e, c] : b.terms()) {
    if (e.second >= 3) out.add_term(e.first, e.second - 2, c * (e.second - 1));
  }
  return out;
}

}  // namespace

AxialPoly apply_operator_sym(FueterOperator op, const AxialPoly& p) {
  const Poly2& a = p.a();
  const Poly2& b = p.b();
  switch (op) {
    case FueterOperator::D: {
      // D(A + wB) = (A_0 - B_r - 2B/r) + w (B_0 + A_r)
      Poly2 ra = a.derivative_first() - b.derivative_second() - Rational(2) * b.divide_second();
      Poly2 rb = b.derivative_first() + a.derivative_second();
      return AxialPoly(std::move(ra), std::move(rb));
    }
    case FueterOperator::Dbar: {
      // Dbar(A + wB) = (A_0 + B_r + 2B/r) + w (B_0 - A_r)
      Poly2 ra = a.derivative_first() + b.derivative_second() + Rational(2) * b.divide_second();
      Poly2 rb = b.derivative_first() - a.derivative_second();
      return AxialPoly(std::move(ra), std::move(rb));
    }
    case FueterOperator::Delta: {
      // Laplacian in R^4 of axial functions.
      Poly2 ra = a.derivative_first().derivative_first() +
                 a.derivative_second().derivative_second() +
                 Rational(2) * a.derivative_second().divide_second();
      Poly2 rb = b.derivative_first().derivative_first() +
                 b.derivative_second().derivative_second() +
                 Rational(2) * radial_correction(b);
      return AxialPoly(std::move(ra), std::move(rb));
    }
  }
  return p;
}

QQbarPoly apply_operator_sym(FueterOperator op, const QQbarPoly& p) {
  return from_axial(apply_operator_sym(op, to_axial(p)));
}

QQbarPoly dbar_monomial(int n) {
  if (n < 1) throw Error(ErrorCode::BadDegree, "dbar_monomial needs n >= 1");
  QQbarPoly out = QQbarPoly::monomial(n - 1, 0, n);
  for (int k = 1; k <= n; ++k) out += QQbarPoly::monomial(n - k, k - 1);
  return out * Rational(2);
}

QQbarPoly appell(int l) {
  if (l < 0) throw Error(ErrorCode::BadDegree, "appell needs l >= 0");
  QQbarPoly out;
  for (int j = 0; j <= l; ++j) out += QQbarPoly::monomial(l - j, j, l - j + 1);
  return out * Rational(2, (l + 1) * (l + 2));
}

QQbarPoly dbar_monomial_appell(int n) {
  if (n < 2) throw Error(ErrorCode::BadDegree, "dbar_monomial_appell needs n >= 2");
  QQbarPoly bracket = appell(n - 1) * Rational(n + 1) -
                      QQbarPoly::q0() * appell(n - 2) * Rational(n - 1);
  return bracket * Rational(2 * n);
}

QQbarPoly laplacian_monomial(int n, LaplacianForm form) {
  if (n < 2) throw Error(ErrorCode::BadDegree, "laplacian_monomial needs n >= 2");
  if (form == LaplacianForm::Appell) {
    return appell(n - 2) * Rational(-2 * n * (n - 1));
  }
  QQbarPoly out;
  for (int k = 1; k <= n - 1; ++k) out += QQbarPoly::monomial(n - k - 1, k - 1, n - k);
  return out * Rational(-4);
}

PolyanalyticParts polyanalytic_split(const AxialPoly& p) {
  AxialPoly dp = apply_operator_sym(FueterOperator::D, p);
  if (!apply_operator_sym(FueterOperator::D, dp).is_zero()) {
    throw Error(ErrorCode::NotPolyanalytic2, "D^2 p does not vanish");
  }
  AxialPoly monogenic = p - AxialPoly::q0() * dp;
  return {std::move(monogenic), std::move(dp)};
}

}  // namespace fueterkit
