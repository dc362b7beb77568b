#include "qrs/qrat.hpp"

namespace qrs {

QRat::QRat(const UPoly& num, const UPoly& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw std::domain_error("QRat with zero denominator");
  normalize();
}

QRat QRat::from_rational(const Rational& r) {
  return QRat(UPoly(BigInt(r.get_num())), UPoly(BigInt(r.get_den())));
}

void QRat::normalize() {
  if (num_.is_zero()) {
    den_ = UPoly(1);
    return;
  }
  UPoly g = gcd(num_, den_);
  if (!g.is_one()) {
    num_ = divexact(num_, g);
    den_ = divexact(den_, g);
  }
  // gcd() carries only the positive integer content; the leftover integer
  // content and the sign are fixed here.
  BigInt cn = num_.content(), cd = den_.content(), c;
  mpz_gcd(c.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
  if (den_.leading() < 0) c = -c;
  if (c != 1) {
    UPoly n, d;
    try_divexact(num_, UPoly(c), n);
    try_divexact(den_, UPoly(c), d);
    num_ = std::move(n);
    den_ = std::move(d);
  }
}

QRat QRat::operator-() const {
  QRat r = *this;
  r.num_ = -r.num_;
  return r;
}

QRat operator+(const QRat& a, const QRat& b) {
  if (a.den_ == b.den_) return QRat(a.num_ + b.num_, a.den_);
  return QRat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

QRat operator-(const QRat& a, const QRat& b) { return a + (-b); }

QRat operator*(const QRat& a, const QRat& b) { return QRat(a.num_ * b.num_, a.den_ * b.den_); }

QRat operator/(const QRat& a, const QRat& b) {
  if (b.is_zero()) throw std::domain_error("QRat division by zero");
  return QRat(a.num_ * b.den_, a.den_ * b.num_);
}

Rational QRat::eval_u(const Rational& point) const {
  Rational d = den_.eval_u(point);
  if (d == 0) throw std::domain_error("QRat evaluation at a pole");
  Rational r = num_.eval_u(point) / d;
  r.canonicalize();
  return r;
}

Rational QRat::eval_q(const Rational& point) const {
  Rational d = den_.eval_q(point);
  if (d == 0) throw std::domain_error("QRat evaluation at a pole");
  Rational r = num_.eval_q(point) / d;
  r.canonicalize();
  return r;
}

std::string QRat::str() const {
  if (den_.is_one()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace qrs
