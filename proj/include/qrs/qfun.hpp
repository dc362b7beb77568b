// q-numbers, Gaussian binomials in any base q^k, and q-Pochhammer products.
#pragma once

#include "qrs/ratfunc.hpp"

namespace qrs {

/// [m] = (1 - q^m)/(1 - q).
QRat q_number(int m);

/// [n j] in the variable q^base, base > 0, by the Pascal recurrence with a
/// memoized row table.  Zero outside 0 <= j <= n.
const UPoly& gauss_binomial(int n, int j, HalfInt base = 1);

/// Same for any nonzero base; negative bases give Laurent values.
RatFunc gauss_binomial_rf(int n, int j, HalfInt base);

/// (arg; q^base)_n = prod_{j<n} (1 - q^(j*base) arg).
RatFunc q_pochhammer(const RatFunc& arg, HalfInt base, int n);

/// (c q^a; q^base)_n in Z[u] for a, base >= 0 and c = +-1.
UPoly q_pochhammer(int c, HalfInt a, HalfInt base, int n);

/// 1 / (c q^a; q^base)_n with the denominator kept in factored form.
RatFunc q_pochhammer_inv(int c, HalfInt a, HalfInt base, int n);

/// Derivative of [n j]_{q^k} at q = 1: the closed value C(j+1,2) C(n,j+1) k
/// together with the value of the formal derivative of the polynomial.
struct DerivativeAtOne {
  BigInt closed;
  BigInt symbolic;
};
DerivativeAtOne q_binomial_derivative_at_1(int n, int j, int k);

/// Value at q = 1 of the formal q-derivative of a q-polynomial.
BigInt q_derivative_at_1(const UPoly& p);

BigInt binomial(long n, long k);

}  // namespace qrs
