#include "oracles.hpp"

#include "qrs/conjectures.hpp"
#include "qrs/limits.hpp"

#include <gtest/gtest.h>

using namespace qrs;

namespace {

/// Divisibility by a product of cyclotomic-type factors, tested through
/// the quotient: witness * divisor must give back the target.
void expect_exact(const ScanResult& r) {
  ASSERT_TRUE(r.holds) << r.params.dump();
  EXPECT_EQ(r.witness * r.divisor, r.target) << r.params.dump();
}

TEST(Binary, HoldsOnSmallGrid) {
  for (int n = 0; n <= 8; ++n)
    for (int m = 0; m <= 4; ++m)
      for (int k = 0; k <= 2; ++k) expect_exact(binary_tuple(n, m, k));
}

TEST(Binary, TargetMatchesRationalSum) {
  const Rational u(1, 2);
  const Rational q = u * u;
  const ScanResult r = binary_tuple(5, 2, 1);
  EXPECT_EQ(r.target.eval_u(u), oracle::rs(5, -q * q, q * q));
  EXPECT_EQ(r.divisor.eval_u(u), oracle::poch(q, q * q, 3));
}

TEST(Prime, HoldsAndDivisorUsesOddValuation) {
  for (long p : {2L, 3L, 5L})
    for (int n = 0; n <= 8; ++n)
      for (int m = 0; m <= 3; ++m) expect_exact(prime_tuple(p, n, m));
  // p = 3, n = 5: exponents 1, 3/3, 5.
  const ScanResult r = prime_tuple(3, 5, 1);
  EXPECT_EQ(r.divisor, UPoly::one_minus(1) * UPoly::one_minus(1) * UPoly::one_minus(5));
  EXPECT_THROW(prime_tuple(9, 1, 1), NotPrime);
}

TEST(Cofactor, ValuesAtOneAndMinusOne) {
  for (long p : {3L, 5L})
    for (int m = 0; m <= 2; ++m)
      for (int n = 0; n <= 7; ++n) {
        const ScanResult r = cofactor_tuple(p, m, n);
        ASSERT_TRUE(r.holds) << r.params.dump();
        EXPECT_EQ(r.witness.eval_q(1), 1);
        EXPECT_EQ(r.witness.eval_q(-1), Rational(c_p_minus1(p, m, n)));
      }
}

TEST(Cofactor, ExampleCofactor) {
  const ScanResult r = cofactor_tuple(3, 2, 2);
  ASSERT_TRUE(r.holds);
  EXPECT_EQ(r.witness, UPoly(1) - UPoly::q_pow(1) + UPoly::q_pow(4) - UPoly::q_pow(6) + UPoly::q_pow(8));
}

TEST(Overreach, FailsForPositiveM) {
  for (int n = 0; n <= 8; ++n)
    for (int m = 1; m <= 3; ++m) {
      const ScanResult r = binary_overreach_tuple(n, m, 1);
      EXPECT_FALSE(r.holds) << n << " " << m;
      EXPECT_LT(r.witness.degree(), r.divisor.degree());
      EXPECT_FALSE(r.witness.is_zero());
    }
}

TEST(Serialization, VerdictAndEvaluations) {
  const Json j = to_json(cofactor_tuple(3, 2, 3));
  EXPECT_EQ(j["conjecture"], "cofactor");
  EXPECT_EQ(j["verdict"], "holds");
  EXPECT_EQ(j["evaluations"]["q=-1"], "45");
  const Check c = to_check(binary_overreach_tuple(4, 1, 0));
  EXPECT_FALSE(c.pass);
  EXPECT_EQ(conjecture_from_name("prime"), Conjecture::prime);
  EXPECT_THROW(conjecture_from_name("2.1"), UnknownIdentity);
}

TEST(PochhammerSplit, Holds) {
  for (int n = 0; n <= 12; ++n) EXPECT_TRUE(pochhammer_split_check(n).pass);
}

}  // namespace
