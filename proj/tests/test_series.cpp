#include "oracles.hpp"

#include "qrs/series.hpp"

#include <gtest/gtest.h>

using namespace qrs;

namespace {

const Rational kU(1, 2);

Rational q() { return kU * kU; }

TEST(QExp, CoefficientsMatchTheirDefinitions) {
  const int N = 7;
  const auto e = q_exp_series(QExpKind::e, 1, 1, 1, N);
  const auto ex = q_exp_series(QExpKind::exp, 1, 1, 1, N);
  const auto Ex = q_exp_series(QExpKind::Exp, 1, 1, 1, N);
  for (int n = 0; n <= N; ++n) {
    const Rational qq = oracle::poch(q(), q(), n);
    const Rational fact = qq / oracle::rpow(1 - q(), n);
    EXPECT_EQ(e[n].eval(kU), 1 / qq);
    EXPECT_EQ(ex[n].eval(kU), 1 / fact);
    EXPECT_EQ(Ex[n].eval(kU), oracle::rpow(q(), n * (n - 1) / 2) / fact);
  }
}

TEST(QExp, ScaledArgumentAndPowers) {
  const RatFunc s = RatFunc::var(Var::s);
  const auto e = q_exp_series(QExpKind::e, 2, s, 2, 8);
  for (int n = 0; n <= 8; ++n) {
    const Rational expected = n % 2 ? Rational(0) : oracle::rpow(3, n / 2) / oracle::poch(q() * q(), q() * q(), n / 2);
    EXPECT_EQ(e[n].eval(kU, 3), expected);
  }
}

TEST(TruncSeries, ReciprocalInvertsAndNeedsUnitConstant) {
  const auto e = q_exp_series(QExpKind::e, 1, RatFunc::var(Var::s), 1, 6);
  const auto one = e * e.reciprocal();
  EXPECT_EQ(one[0], RatFunc(1));
  for (int n = 1; n <= 6; ++n) EXPECT_TRUE(one[n].is_zero());
  TruncSeries bad(3);
  bad[0] = 2;
  EXPECT_THROW(bad.reciprocal(), NonUnitConstantTerm);
}

TEST(TruncSeries, ExpTimesInverseIsOne) {
  // exp_q(z) Exp_q(-z) = 1, checked independently of the catalog.
  const auto a = q_exp_series(QExpKind::exp, 1, 1, 1, 8);
  const auto b = q_exp_series(QExpKind::Exp, 1, -1, 1, 8);
  EXPECT_EQ(first_difference(a * b, TruncSeries(8, {RatFunc(1)})), -1);
}

TEST(Catalog, EveryIdentityHoldsToOrderEight) {
  for (const auto& id : gf_catalog()) {
    const Check c = verify_gf_identity(id, 8);
    EXPECT_TRUE(c.pass) << id;
    EXPECT_TRUE(c.extra["first_failing_order"].is_null()) << id;
  }
}

TEST(Catalog, RogersSzegoCoefficientsMatchDirectSum) {
  // Coefficient of z^n in rs-gf is r_n(s,q)/(q;q)_n.
  const Check c = verify_gf_identity("rs-gf", 5);
  ASSERT_TRUE(c.pass);
  const ZPoly num = zpoly_from_json(c.computed["num"]), den = zpoly_from_json(c.computed["den"]);
  const Rational s(3, 4);
  EXPECT_EQ(RatFunc(num, den).eval(kU, s), oracle::rs(5, s, q()) / oracle::poch(q(), q(), 5));
}

TEST(Catalog, MutatedIdentityFailsAtOrderOne) {
  for (const auto& id : gf_negative_controls()) {
    const Check c = verify_gf_identity(id, 12);
    EXPECT_FALSE(c.pass) << id;
    EXPECT_EQ(c.extra["first_failing_order"], 1);
    EXPECT_FALSE(c.witness.is_null());
  }
}

TEST(Catalog, UnknownKeyThrows) { EXPECT_THROW(verify_gf_identity("bogus", 3), UnknownIdentity); }

}  // namespace
