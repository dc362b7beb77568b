#include "oracles.hpp"

#include "qrs/rogers.hpp"

#include <gtest/gtest.h>

using namespace qrs;

namespace {

const Rational kU(2, 3);

Rational q() { return kU * kU; }

TEST(Rs, MatchesRationalSumInSeveralBases) {
  for (int n = 0; n <= 9; ++n)
    for (int base : {1, 2, 3})
      for (const Rational& s : {Rational(3, 5), Rational(-2), Rational(1)})
        EXPECT_EQ(rs(n, base).eval(kU, s, 0, 0), oracle::rs(n, s, oracle::rpow(q(), base))) << n << " " << base;
}

TEST(Rs, ClassicalLimitIsBinomialPower) {
  for (int n = 0; n <= 10; ++n) EXPECT_EQ(rs(n).eval(1, 2, 0, 0), oracle::rpow(3, n));
}

TEST(Rs, BivariateFormIsHomogeneous) {
  const Rational s(5, 3), x(-4, 7);
  for (int n = 0; n <= 6; ++n)
    EXPECT_EQ(rs_bivariate(n).eval(kU, s, 0, x), oracle::rpow(x, n) * oracle::rs(n, s / x, q()));
}

TEST(Rs, RecurrencesReproduceDirectSum) {
  const auto one = rs_by_recurrence(10), two = rs_by_double_step(10);
  for (int n = 0; n <= 10; ++n) {
    EXPECT_EQ(one[static_cast<size_t>(n)], rs(n));
    EXPECT_EQ(two[static_cast<size_t>(n)], rs(n));
  }
  EXPECT_THROW(rs_recurrence_step(3, rs(1), rs(1)), DegreeMismatch);
}

TEST(RsSpecial, ClosedValuesAgreeWithRationalProducts) {
  const Rational qq = q();
  for (int n = 0; n <= 8; ++n) {
    EXPECT_EQ(rs_special_value(RsSpecial::gauss_even, n).eval_u(kU), oracle::poch(qq, qq * qq, n));
    EXPECT_TRUE(rs_special_value(RsSpecial::gauss_odd, n).is_zero());
    EXPECT_EQ(rs_special_value(RsSpecial::neg_q, n).eval_u(kU), oracle::poch(qq, qq * qq, (n + 1) / 2));
    EXPECT_EQ(rs_special_value(RsSpecial::q_base_q2, n).eval_u(kU), oracle::poch(-qq, qq, n));
    // Same values straight from the rational sum.
    EXPECT_EQ(oracle::rs(2 * n, -1, qq), oracle::poch(qq, qq * qq, n));
    EXPECT_EQ(oracle::rs(n, -qq, qq), oracle::poch(qq, qq * qq, (n + 1) / 2));
  }
}

TEST(RsSpecial, ChecksPassToFifteen) {
  for (const auto& [name, id] : rs_special_ids())
    for (int n = 0; n <= 15; ++n) EXPECT_TRUE(rs_special_check(id, n).pass) << name << " " << n;
}

TEST(RsExpansion, AllIdentitiesHold) {
  for (const auto& id : rs_expansion_ids())
    for (int n = 0; n <= 6; ++n) {
      const Check c = rs_check(id, n);
      EXPECT_TRUE(c.pass) << id << " " << n;
      EXPECT_EQ(c.id, id);
    }
}

TEST(RsExpansion, MutatedSplitFails) {
  int failures = 0;
  for (const auto& id : rs_negative_controls())
    for (int n = 0; n <= 6; ++n) failures += !rs_check(id, n).pass;
  EXPECT_GE(failures, 5);
  EXPECT_THROW(rs_check("bogus", 1), UnknownIdentity);
}

}  // namespace
