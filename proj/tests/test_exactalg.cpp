#include "oracles.hpp"

#include "qrs/report.hpp"

#include <gtest/gtest.h>

using namespace qrs;

namespace {

const std::vector<Rational> kPoints = {Rational(2), Rational(-3), Rational(1, 3), Rational(-5, 7)};

TEST(UPoly, RingOperationsAgreeWithEvaluation) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const UPoly a = oracle::random_upoly(rng, 8), b = oracle::random_upoly(rng, 6);
    for (const auto& x : kPoints) {
      EXPECT_EQ((a * b).eval_u(x), a.eval_u(x) * b.eval_u(x));
      EXPECT_EQ((a + b).eval_u(x), a.eval_u(x) + b.eval_u(x));
      EXPECT_EQ((a - b).eval_u(x), a.eval_u(x) - b.eval_u(x));
    }
  }
}

TEST(UPoly, ExactDivisionRoundTrips) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const UPoly a = oracle::random_upoly(rng, 8), b = oracle::random_upoly(rng, 5);
    if (b.is_zero()) continue;
    EXPECT_EQ(divexact(a * b, b), a);
  }
  UPoly q;
  EXPECT_FALSE(try_divexact(UPoly(std::vector<BigInt>{1, 0, 1}), UPoly(std::vector<BigInt>{1, 1}), q));
  EXPECT_THROW(divexact(UPoly(3), UPoly(2)), NotDivisible);
}

TEST(UPoly, RemainderByMonic) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    const UPoly a = oracle::random_upoly(rng, 10);
    UPoly m = oracle::random_upoly(rng, 4) + UPoly::monomial(1, 5);
    const UPoly r = rem_monic(a, m);
    EXPECT_LT(r.degree(), 5);
    UPoly quotient;
    EXPECT_TRUE(try_divexact(a - r, m, quotient));
  }
}

TEST(UPoly, CyclotomicProductIsUnMinusOne) {
  for (int n = 1; n <= 24; ++n) {
    UPoly prod(1);
    for (int d = 1; d <= n; ++d)
      if (n % d == 0) prod *= cyclotomic(d);
    EXPECT_EQ(prod, UPoly::monomial(1, n) - UPoly(1)) << n;
  }
}

TEST(UPoly, GcdContainsCommonFactor) {
  const UPoly c = UPoly::one_minus(3) * UPoly::one_minus(1, -1);
  const UPoly a = c * UPoly::one_minus(2), b = c * UPoly::one_minus(5, -1);
  UPoly quotient;
  EXPECT_TRUE(try_divexact(gcd(a, b), c, quotient));
}

TEST(UPoly, QPowersUseHalfIntegerExponents) {
  EXPECT_EQ(UPoly::q_pow(HalfInt::from_twice(3)), UPoly::monomial(1, 3));
  EXPECT_EQ(UPoly::one_minus(2).eval_q(3), Rational(-8));
  EXPECT_TRUE(UPoly::one_minus(2).is_q_poly());
  EXPECT_FALSE(UPoly::q_pow(HalfInt::from_twice(1)).is_q_poly());
}

TEST(ZPoly, MultiplicationAndSubstitutionAgreeWithEvaluation) {
  const ZPoly s = ZPoly::var(Var::s), t = ZPoly::var(Var::t), x = ZPoly::var(Var::x);
  const ZPoly a = s * s * UPoly::one_minus(1) + t * x - 3;
  const ZPoly b = x * UPoly::monomial(2, 3) - s * t + UPoly::one_minus(2, -1);
  const Rational u(2, 3), sv(-1, 2), tv(5), xv(3, 4);
  EXPECT_EQ((a * b).eval(u, sv, tv, xv), a.eval(u, sv, tv, xv) * b.eval(u, sv, tv, xv));
  const ZPoly sub = a.subst(Var::s, b);
  EXPECT_EQ(sub.eval(u, sv, tv, xv), a.eval(u, b.eval(u, sv, tv, xv), tv, xv));
  EXPECT_EQ(a.stretch(Var::t, 3).eval(u, sv, tv, xv), a.eval(u, sv, tv * tv * tv, xv));
  EXPECT_EQ(divexact(a * b, b), a);
}

TEST(RatFunc, FieldOperationsAgreeWithEvaluation) {
  const RatFunc s = RatFunc::var(Var::s), t = RatFunc::var(Var::t);
  const RatFunc a = (1 + s) / RatFunc(UPoly::one_minus(1));
  const RatFunc b = (s - t * RatFunc::q_pow(2)) / (1 - s * RatFunc::q_pow(1));
  const Rational u(3, 5), sv(2, 7), tv(-4);
  auto ev = [&](const RatFunc& r) { return r.eval(u, sv, tv); };
  EXPECT_EQ(ev(a + b), ev(a) + ev(b));
  EXPECT_EQ(ev(a * b), ev(a) * ev(b));
  EXPECT_EQ(ev(a / b), ev(a) / ev(b));
  EXPECT_EQ(ev(b.pow(-3)), 1 / (ev(b) * ev(b) * ev(b)));
  EXPECT_EQ(a * a.inverse(), RatFunc(1));
  EXPECT_EQ(b.subst_q(-1).eval(1 / u, sv, tv), ev(b));
  EXPECT_EQ(b.subst(Var::s, t).eval(u, 0, tv), b.eval(u, tv, tv));
  EXPECT_TRUE((a - a).is_zero());
}

TEST(RatFunc, CanonicalFormMakesEqualValuesEqual) {
  const RatFunc s = RatFunc::var(Var::s);
  const RatFunc one_minus_q = RatFunc(UPoly::one_minus(1));
  EXPECT_EQ((1 - s * s) / (1 - s), 1 + s);
  EXPECT_EQ(RatFunc(UPoly::one_minus(2)) / one_minus_q, RatFunc(UPoly::one_minus(1, -1)));
  EXPECT_EQ(RatFunc::sum({s / one_minus_q, -s / one_minus_q}), RatFunc(0));
}

TEST(Serialize, PolynomialRowsAndRoundTrip) {
  const ZPoly p = ZPoly::var(Var::s, 2) * UPoly::monomial(-7, 3) + ZPoly::var(Var::x) + 5;
  const Json j = to_json(p);
  EXPECT_EQ(j[0], Json::array({3, 2, 0, 0, "-7"}));
  EXPECT_EQ(zpoly_from_json(j), p);
  EXPECT_EQ(to_json(Rational(6, 4)), "3/2");
  EXPECT_EQ(pretty(UPoly::one_minus(2)), "1 - q^2");
  EXPECT_THROW(zpoly_from_json(Json::array({Json::array({1, 2})})), std::invalid_argument);
}

TEST(Report, CompareCarriesDifferenceAsWitness) {
  const Check ok = compare("x", {{"n", 1}}, RatFunc(3), RatFunc(3));
  EXPECT_TRUE(ok.pass);
  EXPECT_TRUE(ok.witness.is_null());
  const Check bad = compare("x", {{"n", 1}}, RatFunc(3), RatFunc(1));
  EXPECT_FALSE(bad.pass);
  EXPECT_EQ(bad.witness, to_json(RatFunc(2)));
  EXPECT_EQ(to_json(bad)["id"], "x");
}

}  // namespace
