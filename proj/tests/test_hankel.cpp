#include "oracles.hpp"

#include "qrs/hankel.hpp"

#include <gtest/gtest.h>

using namespace qrs;
using oracle::rpow;

namespace {

const Rational kU(2, 3), kSv(5, 7), kTv(-3, 4);

Rational q() { return kU * kU; }

Rational moment_value(Family f, int n) {
  switch (f) {
    case Family::rs: return oracle::rs(n, kSv, q());
    case Family::f: return oracle::f_value(n, kSv, q());
    case Family::h: return oracle::h_value(n, kSv, kTv, q());
    case Family::H: return oracle::H_value(n, kSv, kTv, q());
    case Family::F_even: return oracle::F_value(2 * n, kSv, q());
    case Family::F_odd: return oracle::F_value(2 * n + 1, kSv, q());
    case Family::F: return oracle::F_value(n, kSv, q());
  }
  return 0;
}

Rational hankel_value(Family f, int n) {
  std::vector<std::vector<Rational>> m(static_cast<size_t>(n + 1), std::vector<Rational>(static_cast<size_t>(n + 1)));
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) m[static_cast<size_t>(i)][static_cast<size_t>(j)] = moment_value(f, i + j);
  return oracle::det(m);
}

const RatFunc kS = RatFunc::var(Var::s);
RatFunc qp(int k) { return RatFunc::q_pow(k); }

TEST(Moments, MatchRationalDefinitions) {
  for (Family f : all_families())
    for (int n = 0; n <= 5; ++n) EXPECT_EQ(moment(f, n).eval(kU, kSv, kTv), moment_value(f, n)) << family_name(f) << n;
}

TEST(Determinant, MatchesGaussianEliminationOverQ) {
  for (Family f : all_families()) {
    const int top = f == Family::h || f == Family::H ? 2 : 4;
    for (int n = 0; n <= top; ++n)
      EXPECT_EQ(hankel_det(f, n).eval(kU, kSv, kTv), hankel_value(f, n)) << family_name(f) << " n=" << n;
  }
}

TEST(Determinant, GenericMatrixWithZeroPivot) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<std::vector<RatFunc>> m(4, std::vector<RatFunc>(4));
    std::vector<std::vector<Rational>> v(4, std::vector<Rational>(4));
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        const UPoly p = oracle::random_upoly(rng, 2, 4);
        m[i][j] = (i == 0 && j == 0) ? RatFunc(0) : RatFunc(p) / RatFunc(UPoly::one_minus(i + 1)) + kS;
        v[i][j] = m[i][j].eval(kU, kSv);
      }
    EXPECT_EQ(determinant(m).eval(kU, kSv), oracle::det(v));
  }
}

TEST(Determinant, SpotValues) {
  EXPECT_EQ(hankel_det(Family::rs, 1), (qp(1) - 1) * kS);
  EXPECT_EQ(hankel_det(Family::F, 1), -(qp(1) - kS) * (1 - qp(1) * kS) / RatFunc(UPoly::one_minus(1)).pow(2));
  const RatFunc d1 = RatFunc(UPoly::one_minus(1)) * (qp(1) - kS * (1 + qp(2)) + qp(1) * kS * kS) /
                     (RatFunc(UPoly::one_minus(1, -1)).pow(2) * RatFunc(UPoly::one_minus(2, -1)));
  EXPECT_EQ(hankel_det(Family::f, 1), d1);
  EXPECT_EQ(hankel_det(Family::F, 0), RatFunc(1));
  EXPECT_EQ(hankel_det(Family::rs, 0), RatFunc(1));
}

TEST(Recurrence, CatalogValues) {
  const RecSystem rs = sigma_tau(Family::rs);
  EXPECT_EQ(rs.sigma(2), qp(2) * (1 + kS));
  EXPECT_EQ(rs.tau(0), kS * (qp(1) - 1));
  const RecSystem F = sigma_tau(Family::F);
  EXPECT_EQ(F.tau(1), (1 - kS).pow(2) * qp(2) * RatFunc(UPoly::one_minus(1)) * RatFunc(UPoly::one_minus(2)) /
                          RatFunc(UPoly::one_minus(3)).pow(2));
  EXPECT_THROW(family_from_name("G"), UnknownFamily);
}

TEST(ClosedForms, AgreeWithDeterminant) {
  for (Family f : all_families()) {
    if (!has_closed_form(f)) continue;
    for (int n = 0; n <= 3; ++n) EXPECT_EQ(closed_hankel(f, n), hankel_det(f, n)) << family_name(f) << n;
  }
  EXPECT_EQ(closed_hankel(Family::rs, 1), -kS * (1 - qp(1)));
  EXPECT_EQ(closed_hankel(Family::F, 1), -qp(1) * (1 - qp(1) * kS) * (1 - kS / qp(1)) / RatFunc(UPoly::one_minus(1)).pow(2));
}

TEST(OrthogonalPolynomials, FunctionalAnnihilatesHigherProducts) {
  for (Family f : all_families()) {
    const int top = f == Family::h || f == Family::H ? 2 : 4;
    const auto p = orth_polys(sigma_tau(f), top);
    std::vector<Rational> a;
    for (int k = 0; k <= 2 * top; ++k) a.push_back(moment_value(f, k));
    for (int n = 0; n <= top; ++n)
      for (int m = 0; m <= n; ++m) {
        Rational acc = 0;
        for (size_t i = 0; i < p[n].size(); ++i)
          for (size_t j = 0; j < p[m].size(); ++j)
            acc += p[n][i].eval(kU, kSv, kTv) * p[m][j].eval(kU, kSv, kTv) * a[i + j];
        if (m < n) EXPECT_EQ(acc, 0) << family_name(f) << " " << n << " " << m;
      }
  }
  const auto rs = orth_polys(sigma_tau(Family::rs), 1);
  EXPECT_EQ(rs[1][0], -(1 + kS));
  EXPECT_EQ(rs[1][1], RatFunc(1));
}

TEST(Vanishing, DirectRationalDeterminants) {
  // d(n, q^(2m+1), q) = 0 for n > m.
  for (int m = 0; m <= 2; ++m)
    for (int n = 0; n <= 3; ++n) {
      std::vector<std::vector<Rational>> mat(static_cast<size_t>(n + 1), std::vector<Rational>(static_cast<size_t>(n + 1)));
      for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) mat[i][j] = oracle::f_value(i + j, rpow(q(), 2 * m + 1), q());
      EXPECT_EQ(oracle::det(mat) == 0, n > m) << m << " " << n;
    }
  EXPECT_EQ(vanishing_start(Family::f, 2), 3);
  EXPECT_THROW(vanishing_start(Family::rs, 1), UnknownFamily);
}

TEST(Suite, EveryIdHoldsAtSmallOrder) {
  for (const auto& id : hankel_ids()) {
    const int top = id.ends_with("-h") || id.ends_with("-H") ? 2 : 3;
    for (int n = id == "recurrence-vanishing" ? 1 : 0; n <= top; ++n) {
      const Check c = hankel_suite_check(id, n, id == "recurrence-vanishing" ? n - 1 : 1);
      EXPECT_TRUE(c.pass) << id << " n=" << n << " " << c.witness.dump();
    }
  }
}

TEST(Suite, ControlsFail) {
  for (const auto& id : hankel_negative_controls()) {
    int failures = 0;
    for (int n = 0; n <= 3; ++n) failures += !hankel_suite_check(id, n).pass;
    EXPECT_GT(failures, 0) << id;
  }
  EXPECT_THROW(hankel_suite_check("bogus", 1), UnknownIdentity);
}

}  // namespace
