#include "oracles.hpp"

#include "qrs/normalized.hpp"

#include <gtest/gtest.h>

using namespace qrs;
using oracle::rpow;

namespace {

const Rational kU(3, 4);

Rational q() { return kU * kU; }

Rational f_value(int n, const Rational& s) { return oracle::f_value(n, s, q()); }

Rational F_value(int n, const Rational& s) { return oracle::F_value(n, s, q()); }

TEST(Normalized, fAndFMatchRationalDefinitions) {
  const Rational s(2, 5);
  for (int n = 0; n <= 9; ++n) {
    EXPECT_EQ(f_norm(n).eval(kU, s), f_value(n, s));
    EXPECT_EQ(F_norm(n).eval(kU, s), F_value(n, s));
  }
}

TEST(Normalized, hAndHMatchTheirDefiningSums) {
  const Rational s(2, 5), t(-3, 2);
  for (int n = 0; n <= 6; ++n) {
    EXPECT_EQ(h_general(n).eval(kU, s, t), oracle::h_value(n, s, t, q())) << n;
    EXPECT_EQ(H_general(n).eval(kU, s, t), oracle::H_value(n, s, t, q())) << n;
    // At t = 1 the families reduce to f and to F(2n).
    EXPECT_EQ(h_general(n).eval(kU, s, 1), f_value(n, s));
    EXPECT_EQ(H_general(n).eval(kU, s, 1), F_value(2 * n, s));
  }
}

TEST(Kupershmidt, ValueAtQCubed) {
  for (int n = 0; n <= 12; ++n) {
    const UPoly expected = UPoly(1) - UPoly::q_pow(1) + UPoly::q_pow(n + 1);
    EXPECT_EQ(kupershmidt_closed(Kupershmidt::f_odd_power, n, 1), expected) << n;
  }
}

TEST(Kupershmidt, ClosedFormsMatchRationalValues) {
  for (int n = 0; n <= 6; ++n)
    for (int m = 0; m <= 5; ++m) {
      EXPECT_EQ(kupershmidt_closed(Kupershmidt::f_odd_power, n, m).eval_u(kU), f_value(n, rpow(q(), 2 * m + 1)));
      EXPECT_EQ(kupershmidt_closed(Kupershmidt::F_even, n, m).eval_u(kU), F_value(2 * n, rpow(q(), m)));
      EXPECT_EQ(kupershmidt_closed(Kupershmidt::F_odd, n, m).eval_u(kU), F_value(2 * n + 1, rpow(q(), m)));
    }
}

TEST(Kupershmidt, NormalizedValuesAreOneAtQEqualsOne) {
  for (int n = 0; n <= 8; ++n) {
    EXPECT_EQ(kupershmidt_closed(Kupershmidt::f_odd_power, n, 0).eval_q(1), 1);
    EXPECT_EQ(kupershmidt_closed(Kupershmidt::F_even, n, 0).eval_q(1), 1);
  }
}

TEST(NormSuite, EveryIdHoldsOnSmallGrid) {
  for (const auto& id : norm_ids())
    for (int n = 0; n <= 4; ++n)
      for (int m = 0; m <= 3; ++m) {
        try {
          EXPECT_TRUE(norm_check(id, n, m).pass) << id << " n=" << n << " m=" << m;
        } catch (const std::invalid_argument&) {
          EXPECT_TRUE((id.ends_with("negative-m") || id == "F-odd-tail") && m == 0) << id;
        }
      }
}

TEST(NormSuite, PrintedFormsFail) {
  for (const auto& id : norm_negative_controls()) {
    int failures = 0;
    for (int n = 0; n <= 4; ++n) failures += !norm_check(id, n, 0).pass;
    EXPECT_GT(failures, 0) << id;
  }
}

}  // namespace
