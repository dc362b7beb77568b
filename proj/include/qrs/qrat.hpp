// Elements of Q(q), stored as a reduced quotient of two UPoly values.
#pragma once

#include "qrs/upoly.hpp"

namespace qrs {

class QRat {
public:
  QRat() : num_(), den_(1) {}
  QRat(long value) : num_(value), den_(1) {}  // NOLINT
  QRat(const BigInt& value) : num_(value), den_(1) {}  // NOLINT
  QRat(const UPoly& num) : num_(num), den_(1) {}  // NOLINT
  QRat(const UPoly& num, const UPoly& den);
  static QRat from_rational(const Rational& r);

  const UPoly& num() const { return num_; }
  const UPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }

  QRat operator-() const;
  friend QRat operator+(const QRat& a, const QRat& b);
  friend QRat operator-(const QRat& a, const QRat& b);
  friend QRat operator*(const QRat& a, const QRat& b);
  friend QRat operator/(const QRat& a, const QRat& b);
  QRat& operator+=(const QRat& b) { return *this = *this + b; }
  QRat& operator-=(const QRat& b) { return *this = *this - b; }
  QRat& operator*=(const QRat& b) { return *this = *this * b; }
  friend bool operator==(const QRat& a, const QRat& b) { return a.num_ * b.den_ == b.num_ * a.den_; }

  /// Value at u = point; throws std::domain_error on a pole.
  Rational eval_u(const Rational& point) const;
  /// Value at q = point; both parts must be q-polynomials.
  Rational eval_q(const Rational& point) const;

  std::string str() const;

private:
  void normalize();
  UPoly num_;
  UPoly den_;
};

}  // namespace qrs
