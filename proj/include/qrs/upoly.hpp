// Dense univariate polynomials over the integers in the internal variable u,
// where q = u^2.  Every pure-q object of the library (q-numbers, Pochhammer
// products in q, Gaussian binomials) lives here; half-integer powers of q are
// odd powers of u.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace qrs {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Raised by exact division when the divisor leaves a nonzero remainder.
class NotDivisible : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Raised when a q-point evaluation meets an odd power of u.
class OddUExponent : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An exponent of q that may be a half-integer.  Stored as twice its value,
/// which is exactly the exponent of u.
class HalfInt {
public:
  constexpr HalfInt() = default;
  constexpr HalfInt(int value) : twice_(2 * value) {}  // NOLINT: integers convert
  static constexpr HalfInt from_twice(int twice) {
    HalfInt h;
    h.twice_ = twice;
    return h;
  }
  constexpr int twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  constexpr int as_integer() const { return twice_ / 2; }
  constexpr HalfInt operator-() const { return from_twice(-twice_); }
  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return from_twice(a.twice_ + b.twice_); }
  friend constexpr HalfInt operator*(HalfInt a, int k) { return from_twice(a.twice_ * k); }
  friend constexpr bool operator==(HalfInt, HalfInt) = default;
  std::string str() const;

private:
  int twice_ = 0;
};

class UPoly {
public:
  UPoly() = default;
  UPoly(long value);  // NOLINT: integer constants convert implicitly
  UPoly(const BigInt& value);  // NOLINT
  explicit UPoly(std::vector<BigInt> coeffs);

  /// c * u^e
  static UPoly monomial(const BigInt& c, int u_exp);
  /// q^k = u^(2k)
  static UPoly q_pow(HalfInt k, long c = 1);
  /// 1 - c*q^k for k >= 0
  static UPoly one_minus(HalfInt k, long c = 1);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  /// Smallest exponent with a nonzero coefficient; -1 for the zero polynomial.
  int low_degree() const;
  const BigInt& coeff(int u_exp) const;
  std::span<const BigInt> coeffs() const { return c_; }
  const BigInt& leading() const { return c_.back(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }

  /// True when every u-exponent is even, i.e. the value is a polynomial in q.
  bool is_q_poly() const;

  UPoly operator-() const;
  UPoly& operator+=(const UPoly& other);
  UPoly& operator-=(const UPoly& other);
  UPoly& operator*=(const UPoly& other);
  UPoly& operator*=(const BigInt& k);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend void addmul(UPoly& acc, const UPoly& a, const UPoly& b);
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  UPoly pow(unsigned e) const;
  /// Multiplies by u^k, k >= 0.
  UPoly shift(int k) const;

  /// Value at u = point.
  Rational eval_u(const Rational& point) const;
  /// Value at q = point; requires is_q_poly().
  Rational eval_q(const Rational& point) const;

  /// u -> u^k for k >= 1.
  UPoly compose_u_power(int k) const;
  /// u^e -> u^(e*num/den), throwing if some exponent leaves the integer grid.
  UPoly rescale_exponents(int num, int den) const;
  /// u^e -> u^(top - e): the reversal used for q -> 1/q style maps.
  UPoly reverse(int top) const;

  /// Formal derivative with respect to u.
  UPoly derivative_u() const;

  BigInt content() const;
  UPoly primitive_part() const;

  std::string str(char var = 'u') const;

private:
  void trim();
  std::vector<BigInt> c_;
};

/// Exact quotient in Z[u]; throws NotDivisible when b does not divide a.
UPoly divexact(const UPoly& a, const UPoly& b);
/// Same as divexact but reports failure through the return flag.
bool try_divexact(const UPoly& a, const UPoly& b, UPoly& quotient);
/// Remainder of a modulo a monic polynomial m.
UPoly rem_monic(const UPoly& a, const UPoly& m);
/// Greatest common divisor in Z[u], with positive leading coefficient.
UPoly gcd(const UPoly& a, const UPoly& b);

/// acc += a * b without a temporary.
void addmul(UPoly& acc, const UPoly& a, const UPoly& b);

/// Cyclotomic polynomial Phi_d(u), memoized.
const UPoly& cyclotomic(int d);

}  // namespace qrs
