#include "oracles.hpp"

#include "qrs/limits.hpp"
#include "qrs/qfun.hpp"
#include "qrs/rogers.hpp"

#include <gtest/gtest.h>

using namespace qrs;

namespace {

TEST(VanishingOrder, CountsRootMultiplicity) {
  const UPoly p = UPoly::one_minus(1).pow(3) * UPoly::one_minus(1, -1).pow(2) * UPoly(5);
  EXPECT_EQ(vanishing_order(p, 1), 3);
  EXPECT_EQ(vanishing_order(p, -1), 2);
  EXPECT_EQ(vanishing_order(UPoly(7), 1), 0);
  EXPECT_THROW(vanishing_order(UPoly(), 1), ZeroPolynomial);
  EXPECT_THROW(vanishing_order(UPoly::monomial(1, 1), -1), OddUExponent);
  EXPECT_THROW(vanishing_order(UPoly(1), 2), std::invalid_argument);
}

TEST(ExactLimit, SimpleQuotients) {
  // (1-q^3)/(1-q) -> 3 at q = 1; (1-q^4)/(1+q) = (1-q)(1+q^2) -> 4 at q = -1.
  EXPECT_EQ(exact_limit({UPoly::one_minus(3), UPoly::one_minus(1), 1}), 3);
  EXPECT_EQ(exact_limit({UPoly::one_minus(4), UPoly::one_minus(1, -1), -1}), 4);
  EXPECT_EQ(exact_limit({UPoly(), UPoly::one_minus(1), 1}), 0);
  EXPECT_THROW(exact_limit({UPoly(1), UPoly::one_minus(1), 1}), OrderDeficit);
  EXPECT_THROW(exact_limit({UPoly(1), UPoly(), 1}), ZeroPolynomial);
}

TEST(ExactLimit, AgreesWithLHopitalOnRandomInstances) {
  std::mt19937_64 rng(20261016);
  std::uniform_int_distribution<int> small(0, 3), exps(1, 4);
  for (int trial = 0; trial < 20; ++trial) {
    const int point = trial % 2 ? -1 : 1;
    const UPoly root = point == 1 ? UPoly::one_minus(1) : UPoly::one_minus(1, -1);
    // Random q-polynomials so that q = -1 is meaningful.
    UPoly a = oracle::random_upoly(rng, 5).compose_u_power(2), b = oracle::random_upoly(rng, 4).compose_u_power(2);
    if (a.is_zero() || b.is_zero() || b.eval_q(point) == 0) continue;
    const int od = small(rng);
    const LimitProblem prob{a * root.pow(static_cast<unsigned>(od + small(rng))) * UPoly::one_minus(exps(rng)),
                            b * root.pow(static_cast<unsigned>(od)), point};
    try {
      EXPECT_EQ(exact_limit(prob), lhopital_limit(prob)) << trial;
    } catch (const OrderDeficit&) {
      EXPECT_THROW(lhopital_limit(prob), OrderDeficit);
    }
  }
}

TEST(FSum, EqualsRogersSzegoAtMinusQPowerM) {
  // sum_j (-1)^j q^{mj} [n j]_{q^k} = r_n(-q^m, q^k)
  for (int n = 0; n <= 7; ++n)
    for (int m = 0; m <= 3; ++m)
      for (int k = 1; k <= 3; ++k) {
        EXPECT_EQ(f_sum(n, 0, m, k), rs(n, k).subst(Var::s, -UPoly::q_pow(m)).to_upoly());
        EXPECT_EQ(f_sum_plain(n, 0, m, k), rs(n, k).subst(Var::s, UPoly::q_pow(m)).to_upoly());
      }
}

TEST(FSum, QuadraticExponentAgainstRationalSum) {
  const Rational u(3, 5);
  const Rational q = u * u;
  for (int n = 0; n <= 6; ++n)
    for (int r2 = 0; r2 <= 4; ++r2) {
      Rational want = 0;
      for (int j = 0; j <= n; ++j)
        want += (j % 2 ? -1 : 1) * oracle::rpow(u, r2 * j * j + 2 * 2 * j) * oracle::qbinom(n, j, q * q * q);
      EXPECT_EQ(f_sum(n, HalfInt::from_twice(r2), 2, 3).eval_u(u), want);
    }
}

TEST(PAdic, ValuationExamples) {
  EXPECT_EQ(padic(3, 45).v, 2);
  EXPECT_EQ(padic(3, 45).V, 9);
  EXPECT_EQ(padic(2, 96).v, 5);
  EXPECT_EQ(padic(2, 96).V, 32);
  EXPECT_EQ(padic(5, 7).v, 0);
  EXPECT_EQ(padic(7, BigInt("678223072849")).v, 14);
  EXPECT_THROW(padic(4, 8), NotPrime);
  EXPECT_THROW(padic(3, 0), std::invalid_argument);
}

TEST(CofactorValue, ListedValuesForPThreeMTwo) {
  const long want[] = {1, 5, 3, 45, 27, 135, 81, 405, 243, 5 * 2187};
  for (int n = 0; n <= 9; ++n) EXPECT_EQ(c_p_minus1(3, 2, n), want[n]) << n;
  EXPECT_THROW(c_p_minus1(2, 0, 1), std::invalid_argument);
}

TEST(LimitTheorems, AcceptanceGridsHold) {
  for (const auto& id : limit_ids())
    for (int n = 0; n <= 2; ++n)
      for (int m = 0; m <= 3; ++m)
        for (int k = 1; k <= 4; ++k)
          for (int r = 0; r <= 2; ++r) {
            LimitParams p{n, m, k, r, 3};
            if (!limit_params_valid(id, p)) continue;
            EXPECT_TRUE(limit_theorem_check(id, p).pass) << id << " n=" << n << " m=" << m << " k=" << k << " r=" << r;
          }
}

TEST(LimitTheorems, PrimeCasesAndDomain) {
  for (long p : {3L, 5L})
    for (int n = 0; n <= 3; ++n) {
      EXPECT_TRUE(limit_theorem_check("p-even", {n, 1, 1, 0, p}).pass);
      EXPECT_TRUE(limit_theorem_check("p-odd", {n, 2, 1, 0, p}).pass);
    }
  EXPECT_FALSE(limit_params_valid("p-even", {1, 1, 1, 0, 4}));
  EXPECT_FALSE(limit_params_valid("quad-neg-even", {1, 1, 1, 1, 3}));
  EXPECT_TRUE(limit_params_valid("quad-neg-even", {1, 2, 1, 1, 3}));
  EXPECT_THROW(limit_theorem_check("bogus", {}), UnknownIdentity);
}

TEST(LimitTheorems, MutatedBaseFails) {
  for (int n = 1; n <= 3; ++n)
    for (int k = 1; k <= 3; ++k) EXPECT_FALSE(limit_theorem_check("alt-even-mutated", {n, 1, k, 0, 3}).pass);
}

TEST(LimitTheorems, CriticalSumIsProduct) {
  const Check c = limit_theorem_check("quad-critical", {2, 1, 3, 0, 3});
  EXPECT_TRUE(c.pass);
  EXPECT_EQ(c.extra["product_form"], true);
}

}  // namespace
