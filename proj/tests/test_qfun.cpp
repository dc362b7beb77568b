#include "oracles.hpp"

#include "qrs/qfun.hpp"

#include <gtest/gtest.h>

using namespace qrs;

namespace {

TEST(GaussBinomial, MatchesInversionCount) {
  for (int n = 0; n <= 10; ++n)
    for (int j = 0; j <= n; ++j) {
      const auto c = oracle::binomial_by_inversions(n, j);
      for (int k : {1, 2, 3}) {
        const UPoly& g = gauss_binomial(n, j, k);
        for (size_t e = 0; e < c.size(); ++e) EXPECT_EQ(g.coeff(static_cast<int>(2 * k * e)), c[e]);
        EXPECT_EQ(g.degree(), 2 * k * j * (n - j));
      }
    }
}

TEST(GaussBinomial, OutsideRangeIsZero) {
  EXPECT_TRUE(gauss_binomial(4, 5).is_zero());
  EXPECT_TRUE(gauss_binomial(4, -1).is_zero());
  EXPECT_TRUE(gauss_binomial(0, 0).is_one());
}

TEST(GaussBinomial, HalfIntegerBaseIsStretched) {
  const UPoly& half = gauss_binomial(5, 2, HalfInt::from_twice(1));
  const UPoly& one = gauss_binomial(5, 2, 1);
  EXPECT_EQ(half.compose_u_power(2), one);
}

TEST(GaussBinomial, NegativeBaseIsReciprocalPolynomial) {
  // [n j]_{1/q} = q^{-j(n-j)} [n j]_q
  for (int n = 0; n <= 6; ++n)
    for (int j = 0; j <= n; ++j)
      EXPECT_EQ(gauss_binomial_rf(n, j, -1), RatFunc(gauss_binomial(n, j)) * RatFunc::q_pow(-j * (n - j)));
}

TEST(Pochhammer, AgreesWithRationalProduct) {
  const Rational u(2, 3);
  const Rational q = u * u;
  for (int n = 0; n <= 7; ++n) {
    EXPECT_EQ(q_pochhammer(1, 1, 1, n).eval_u(u), oracle::poch(q, q, n));
    EXPECT_EQ(q_pochhammer(-1, 1, 2, n).eval_u(u), oracle::poch(-q, q * q, n));
    EXPECT_EQ(q_pochhammer(1, HalfInt::from_twice(1), 1, n).eval_u(u), oracle::poch(u, q, n));
    EXPECT_EQ(q_pochhammer_inv(1, 1, 1, n).eval(u), 1 / oracle::poch(q, q, n));
    const RatFunc s = RatFunc::var(Var::s);
    EXPECT_EQ(q_pochhammer(s, 2, n).eval(u, Rational(5, 2)), oracle::poch(Rational(5, 2), q * q, n));
  }
}

TEST(QNumber, IsOnePlusQUpToQPowerMinusOne) {
  for (int m = 1; m <= 8; ++m) {
    UPoly sum;
    for (int i = 0; i < m; ++i) sum += UPoly::q_pow(i);
    EXPECT_EQ(RatFunc(q_number(m)), RatFunc(sum));
  }
}

TEST(Binomial, DerivativeAtOneMatchesInversionMoments) {
  for (int n = 0; n <= 9; ++n)
    for (int j = 0; j <= n; ++j)
      for (int k : {1, 2, 3}) {
        const auto c = oracle::binomial_by_inversions(n, j);
        BigInt moment = 0;
        for (size_t e = 0; e < c.size(); ++e) moment += c[e] * static_cast<long>(e);
        const auto d = q_binomial_derivative_at_1(n, j, k);
        EXPECT_EQ(d.symbolic, moment * k);
        EXPECT_EQ(d.closed, d.symbolic);
      }
  EXPECT_EQ(binomial(10, 3), 120);
  EXPECT_EQ(binomial(3, 5), 0);
}

}  // namespace
