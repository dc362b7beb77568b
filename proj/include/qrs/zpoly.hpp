// Sparse polynomials in the symbols s, t, x with coefficients in Z[u].
#pragma once

#include "qrs/upoly.hpp"

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

namespace qrs {

enum class Var : int { s = 0, t = 1, x = 2 };

/// Exponent vector (s, t, x) packed as s<<32 | t<<16 | x.  Multiplication of
/// monomials is addition of keys; descending key order is lex order s > t > x.
class Mono {
public:
  constexpr Mono() = default;
  constexpr Mono(unsigned es, unsigned et, unsigned ex)
      : key_((std::uint64_t{es} << 32) | (std::uint64_t{et} << 16) | std::uint64_t{ex}) {}
  static constexpr Mono var(Var v, unsigned e = 1) {
    return v == Var::s ? Mono(e, 0, 0) : v == Var::t ? Mono(0, e, 0) : Mono(0, 0, e);
  }
  constexpr unsigned exp(Var v) const {
    return static_cast<unsigned>((key_ >> (32 - 16 * static_cast<int>(v))) & 0xffffU);
  }
  constexpr std::uint64_t key() const { return key_; }
  constexpr bool is_one() const { return key_ == 0; }
  /// True when every exponent of this is at most the matching one of other.
  constexpr bool divides(Mono other) const {
    for (Var v : {Var::s, Var::t, Var::x})
      if (exp(v) > other.exp(v)) return false;
    return true;
  }
  friend constexpr Mono operator*(Mono a, Mono b) {
    Mono m;
    m.key_ = a.key_ + b.key_;
    return m;
  }
  friend constexpr Mono operator/(Mono a, Mono b) {
    Mono m;
    m.key_ = a.key_ - b.key_;
    return m;
  }
  static Mono gcd(Mono a, Mono b);
  static Mono lcm(Mono a, Mono b);
  friend constexpr auto operator<=>(Mono, Mono) = default;

private:
  std::uint64_t key_ = 0;
};

class ZPoly {
public:
  using Term = std::pair<Mono, UPoly>;

  ZPoly() = default;
  ZPoly(long c) : ZPoly(UPoly(c)) {}  // NOLINT
  ZPoly(const UPoly& c);  // NOLINT
  ZPoly(Mono m, const UPoly& c);
  static ZPoly var(Var v, unsigned e = 1) { return ZPoly(Mono::var(v, e), UPoly(1)); }
  /// Builds from unsorted terms, merging duplicates and dropping zeros.
  static ZPoly from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  /// Terms in descending monomial order.
  const std::vector<Term>& terms() const { return terms_; }
  const UPoly& coeff(Mono m) const;
  const Term& leading() const { return terms_.front(); }
  /// True when no symbol occurs, i.e. the value lies in Z[u].
  bool is_upoly() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }
  UPoly to_upoly() const;
  bool is_monomial() const { return terms_.size() == 1; }
  unsigned degree(Var v) const;
  unsigned min_degree(Var v) const;
  /// Largest u-degree over all coefficients.
  int u_degree() const;
  /// Smallest u-degree over all coefficients.
  int u_low_degree() const;
  /// Monomial gcd of all terms.
  Mono mono_content() const;
  BigInt int_content() const;
  /// gcd over Z[u] of all coefficients, with positive leading coefficient.
  UPoly upoly_content() const;

  ZPoly operator-() const;
  ZPoly& operator+=(const ZPoly& b);
  ZPoly& operator-=(const ZPoly& b);
  friend ZPoly operator+(ZPoly a, const ZPoly& b) { return a += b; }
  friend ZPoly operator-(ZPoly a, const ZPoly& b) { return a -= b; }
  friend ZPoly operator*(const ZPoly& a, const ZPoly& b);
  ZPoly& operator*=(const ZPoly& b) { return *this = *this * b; }
  friend bool operator==(const ZPoly& a, const ZPoly& b) { return a.terms_ == b.terms_; }
  /// Total order used to sort factor lists canonically.
  friend bool operator<(const ZPoly& a, const ZPoly& b);

  ZPoly mul_upoly(const UPoly& c) const;
  ZPoly mul_mono(Mono m, int u_shift = 0) const;
  /// Divides by the monomial m * u^u_shift; every term must be divisible.
  ZPoly div_mono(Mono m, int u_shift = 0) const;
  /// Divides every coefficient exactly by c; throws NotDivisible otherwise.
  ZPoly div_upoly(const UPoly& c) const;
  bool try_div_upoly(const UPoly& c, ZPoly& out) const;
  ZPoly pow(unsigned e) const;
  /// Replaces the symbol v by a polynomial value.
  ZPoly subst(Var v, const ZPoly& value) const;
  /// v^e -> v^(k*e).
  ZPoly stretch(Var v, unsigned k) const;

  /// Applies a map to every coefficient.
  template <class F>
  ZPoly map_coeffs(F&& f) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& [m, c] : terms_) out.emplace_back(m, f(c));
    return from_terms(std::move(out));
  }

  /// Value at u = point for every coefficient and the given symbol values.
  Rational eval(const Rational& u, const Rational& s, const Rational& t, const Rational& x) const;

  std::string str() const;

private:
  std::vector<Term> terms_;
};

/// Exact quotient a / b in Z[u][s,t,x]; throws NotDivisible otherwise.
ZPoly divexact(const ZPoly& a, const ZPoly& b);
bool try_divexact(const ZPoly& a, const ZPoly& b, ZPoly& quotient);

}  // namespace qrs
