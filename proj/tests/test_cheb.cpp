#include "oracles.hpp"

#include "qrs/cheb.hpp"

#include <gtest/gtest.h>

using namespace qrs;
using oracle::rpow;

namespace {

/// The three recurrences run over Q at a point.
Rational cheb_value(ChebKind kind, int m, const Rational& q, const Rational& s, const Rational& x) {
  std::vector<Rational> p = {1};
  for (int k = 1; k <= m; ++k) {
    const Rational prev2 = k >= 2 ? p[static_cast<size_t>(k - 2)] : Rational(0);
    const Rational prev = p[static_cast<size_t>(k - 1)];
    Rational v;
    switch (kind) {
      case ChebKind::T:
        v = k == 1 ? x : Rational(x * (1 + rpow(q, k - 1)) * prev + s * rpow(q, k - 1) * prev2);
        break;
      case ChebKind::U:
        v = x * (1 + rpow(q, k)) * prev + s * rpow(q, k - 1) * prev2;
        break;
      case ChebKind::V:
        v = k == 1 ? Rational(x * (1 + q) + s * q)
                   : Rational(x * (1 + rpow(q, 2 * k - 1)) * prev - s * s * rpow(q, 2 * k - 1) * prev2);
        break;
    }
    p.push_back(v);
  }
  return p[static_cast<size_t>(m)];
}

TEST(Cheb, MatchesRationalRecurrence) {
  const Rational u(2, 3), s(-3, 5), x(7, 4);
  for (ChebKind kind : {ChebKind::T, ChebKind::U, ChebKind::V})
    for (int m = 0; m <= 8; ++m) EXPECT_EQ(cheb(kind, m).eval(u, s, 0, x), cheb_value(kind, m, u * u, s, x));
}

TEST(Cheb, ClosedSumsMatchRecurrence) {
  for (int m = 0; m <= 9; ++m) {
    EXPECT_EQ(cheb_closed(ChebKind::T, m), RatFunc(cheb(ChebKind::T, m)));
    EXPECT_EQ(cheb_closed(ChebKind::U, m), RatFunc(cheb(ChebKind::U, m)));
  }
  EXPECT_THROW(cheb_closed(ChebKind::V, 2), std::invalid_argument);
}

TEST(Cheb, ClassicalValuesAtCosPiOverThree) {
  // At q = 1, s = -1, x = cos(pi/3): cos(m pi/3), sin((m+1) pi/3)/sin(pi/3),
  // cos((2m+1) pi/6)/cos(pi/6).
  const Rational T[] = {1, Rational(1, 2), Rational(-1, 2), -1, Rational(-1, 2), Rational(1, 2)};
  const int U[] = {1, 1, 0, -1, -1, 0};
  const int V[] = {1, 0, -1, -1, 0, 1};
  for (int m = 0; m <= 11; ++m) {
    EXPECT_EQ(cheb(ChebKind::T, m).eval(1, -1, 0, Rational(1, 2)), T[m % 6]) << m;
    EXPECT_EQ(cheb(ChebKind::U, m).eval(1, -1, 0, Rational(1, 2)), U[m % 6]) << m;
    EXPECT_EQ(cheb(ChebKind::V, m).eval(1, -1, 0, Rational(1, 2)), V[m % 6]) << m;
  }
}

TEST(Cheb, NegateQFlipsOddPowers) {
  const UPoly p = UPoly(1) + UPoly::q_pow(1, 3) + UPoly::q_pow(2, 5);
  EXPECT_EQ(negate_q(p), UPoly(1) - UPoly::q_pow(1, 3) + UPoly::q_pow(2, 5));
  EXPECT_THROW(negate_q(UPoly::monomial(1, 1)), OddUExponent);
  EXPECT_EQ(cheb_at(ChebKind::U, 3, 2, -1).eval_q(Rational(1, 3)),
            cheb_value(ChebKind::U, 3, Rational(-1, 3), -Rational(1, 9), 1));
}

TEST(ChebSuite, EveryIdHoldsOnSmallGrid) {
  for (const auto& id : cheb_ids())
    for (int n = 0; n <= 3; ++n)
      for (int m = 0; m <= 4; ++m) {
        try {
          EXPECT_TRUE(cheb_check(id, n, m).pass) << id << " n=" << n << " m=" << m;
        } catch (const std::invalid_argument&) {
          EXPECT_TRUE(n == 0 || m < 2) << id << " n=" << n << " m=" << m;
        }
      }
}

TEST(ChebSuite, PrintedBoundaryValuesFail) {
  for (const auto& id : cheb_negative_controls()) {
    int failures = 0;
    for (int n = 0; n <= 3; ++n)
      for (int m = 2; m <= 4; ++m) failures += !cheb_check(id, std::max(n, 1), m).pass;
    EXPECT_GT(failures, 0) << id;
  }
  EXPECT_THROW(cheb_check("bogus", 0, 0), UnknownIdentity);
}

}  // namespace
