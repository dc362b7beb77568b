// Rogers-Szego polynomials r_n(s, q^k) and their identities.
#pragma once

#include "qrs/report.hpp"

#include <string>
#include <vector>

namespace qrs {

class DegreeMismatch : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// r_n(s, q^base) = sum_j [n j]_{q^base} s^j, memoized.  The direct sum is
/// compared with the three-term recurrence when an entry is first built.
const ZPoly& rs(int n, HalfInt base = 1);

/// x^n r_n(s/x, q): the bivariate form by homogeneity.
ZPoly rs_bivariate(int n, HalfInt base = 1);

/// One step r_n = (1+s) r_{n-1} + (q^{n-1} - 1) s r_{n-2}.  prev must have
/// s-degree n-1 and prev2 s-degree n-2 (zero when n = 1).
ZPoly rs_recurrence_step(int n, const ZPoly& prev, const ZPoly& prev2);

/// Two-step form r_n from r_{n-2} and r_{n-4}, n >= 2.
ZPoly rs_double_step(int n, const ZPoly& prev2, const ZPoly& prev4);

/// r_0 .. r_n built by the one-step or the two-step recurrence.
std::vector<ZPoly> rs_by_recurrence(int n);
std::vector<ZPoly> rs_by_double_step(int n);

enum class RsSpecial { gauss_even, gauss_odd, neg_q, q_base_q2 };

const std::vector<std::pair<std::string, RsSpecial>>& rs_special_ids();

/// Closed side of a special value; throws IdentityViolated when it differs
/// from the substituted polynomial.  gauss_even and gauss_odd use degree 2n
/// and 2n+1.
UPoly rs_special_value(RsSpecial id, int n);

/// Report form of rs_special_value.
Check rs_special_check(RsSpecial id, int n);

/// Expansion identities, keyed by the ids in rs_expansion_ids().
const std::vector<std::string>& rs_expansion_ids();
Check rs_expansion(const std::string& id, int n);
const std::vector<std::string>& rs_negative_controls();

/// Special values and expansions, dispatched on id.
Check rs_check(const std::string& id, int n);

/// r_n(q^2 x, q) = (1 - q x) r_n(q x, q) + q^(n+1) x r_n(x, q).
Check rs_shift_identity(int n);

/// s^{-n} r_n(s^2, q) satisfies the continuous q-Hermite recurrence.
Check hermite_bridge(int n);

}  // namespace qrs
