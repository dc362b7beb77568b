// Rational functions in u (q = u^2) and the symbols s, t, x.
//
// The numerator is a ZPoly.  The denominator is kept factored: a positive
// integer, a monomial in u, s, t, x and a sorted list of primitive factors
// with multiplicities.  Factors in u alone are split into cyclotomic
// polynomials, so denominators built from q-Pochhammer products cancel
// reliably against numerators.
#pragma once

#include "qrs/qrat.hpp"
#include "qrs/zpoly.hpp"

#include <vector>

namespace qrs {

class RatFunc {
public:
  RatFunc() = default;
  RatFunc(long c) : num_(c) {}  // NOLINT
  RatFunc(const UPoly& c) : num_(c) {}  // NOLINT
  RatFunc(const ZPoly& p) : num_(p) {}  // NOLINT
  RatFunc(const QRat& c);  // NOLINT
  RatFunc(const ZPoly& num, const ZPoly& den);

  static RatFunc var(Var v, unsigned e = 1) { return RatFunc(ZPoly::var(v, e)); }
  /// c * q^k for any half-integer k (negative powers go to the denominator).
  static RatFunc q_pow(HalfInt k, long c = 1);

  const ZPoly& num() const { return num_; }
  /// Expanded denominator.
  ZPoly den() const;
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const;
  /// True when no symbol occurs in numerator or denominator.
  bool is_qrat() const;
  /// True when the denominator involves u only.
  bool has_q_only_den() const;
  ZPoly to_zpoly() const;
  QRat to_qrat() const;
  UPoly to_upoly() const;
  /// Coefficient of a symbol monomial as an element of Q(q); needs has_q_only_den().
  QRat coeff(Mono m) const;
  unsigned degree(Var v) const;

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc& operator+=(const RatFunc& b) { return *this = *this + b; }
  RatFunc& operator-=(const RatFunc& b) { return *this = *this - b; }
  RatFunc& operator*=(const RatFunc& b) { return *this = *this * b; }
  RatFunc& operator/=(const RatFunc& b) { return *this = *this / b; }
  friend bool operator==(const RatFunc& a, const RatFunc& b);
  RatFunc inverse() const;
  RatFunc pow(int e) const;

  /// Sum over a common denominator, normalized once.
  static RatFunc sum(const std::vector<RatFunc>& terms);
  static RatFunc product(const std::vector<RatFunc>& factors);

  /// Substitutes value for the symbol v.
  RatFunc subst(Var v, const RatFunc& value) const;
  /// q -> q^k for a nonzero half-integer k.
  RatFunc subst_q(HalfInt k) const;

  Rational eval(const Rational& u, const Rational& s = 0, const Rational& t = 0, const Rational& x = 0) const;

  std::string str() const;

  struct Factor {
    ZPoly poly;
    int mult;
  };
  const BigInt& den_int() const { return den_int_; }
  Mono den_mono() const { return den_mono_; }
  int den_u() const { return den_u_; }
  const std::vector<Factor>& den_factors() const { return factors_; }

private:
  void absorb_den(const ZPoly& p, int mult);
  void add_factor(const ZPoly& p, int mult);
  void normalize();
  void cancel_factors();
  /// Multiplies the numerator by the part of lcm that this denominator lacks.
  ZPoly lift_num(const RatFunc& lcm) const;
  static RatFunc den_lcm(const RatFunc& a, const RatFunc& b);
  void set_den_from(const RatFunc& other);

  ZPoly num_;
  BigInt den_int_ = 1;
  Mono den_mono_;
  int den_u_ = 0;
  std::vector<Factor> factors_;
};

/// Splits a primitive polynomial in u with positive leading coefficient and
/// nonzero constant term into cyclotomic factors and a leftover.
std::vector<std::pair<UPoly, int>> factor_cyclotomic(const UPoly& g);

}  // namespace qrs
