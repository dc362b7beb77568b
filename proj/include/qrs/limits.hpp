// Exact limits at q = 1 and q = -1 by division, and the limit theorems for
// alternating and quadratic-exponent q-binomial sums.
#pragma once

#include "qrs/report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qrs {

class ZeroPolynomial : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

class OrderDeficit : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

class NotPrime : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

struct LimitProblem {
  UPoly numerator;
  UPoly denominator;
  int point = 1;  // +1 or -1
};

/// Multiplicity of the root q = point.  At q = 1 it is counted in (1 - u),
/// which equals the (1 - q) count for polynomials in q and also covers odd
/// powers of u.  At q = -1 the polynomial must be a polynomial in q.
int vanishing_order(const UPoly& p, int point);

/// Divides out the root at the point from both sides and evaluates.
Rational exact_limit(const LimitProblem& prob);

/// Independent oracle: repeated formal differentiation (in u at q = 1, in q
/// at q = -1) until the denominator stops vanishing.
Rational lhopital_limit(const LimitProblem& prob);

/// sum_{j=0}^n (-1)^j q^(r j^2 + m j) [n j]_{q^k}.
UPoly f_sum(int n, HalfInt r, int m, int k);

/// The same sum without the sign (-1)^j.
UPoly f_sum_plain(int n, HalfInt r, int m, int k);

struct PAdic {
  long v;
  BigInt V;
};
PAdic padic(long p, const BigInt& x);

/// Value of c_p(2m+1, n, -1) from the valuation formula.
BigInt c_p_minus1(long p, int m, int n);

struct LimitParams {
  int n = 0;
  int m = 0;
  int k = 1;
  HalfInt r = 0;
  long p = 3;
};

const std::vector<std::string>& limit_ids();
const std::vector<std::string>& limit_negative_controls();

/// Builds the quotient for id, takes its exact limit and compares with the
/// closed value.  An order deficit is a failed check.
Check limit_theorem_check(const std::string& id, const LimitParams& params);

/// Whether params lie in the domain of the statement (for example r+m odd).
bool limit_params_valid(const std::string& id, const LimitParams& params);

}  // namespace qrs
