// Normalized Rogers-Szego polynomials f, F and the two-parameter families
// h, H, with their expansions and closed forms at s = +-q^m.
#pragma once

#include "qrs/report.hpp"

#include <string>
#include <vector>

namespace qrs {

/// f(n, s, q) = r_n(s, q^2) / (-q;q)_n.
RatFunc f_norm(int n);
/// F(n, s, q) = r_n(-s, q) / (q;q^2)_{floor((n+1)/2)}.
RatFunc F_norm(int n);
/// h(n, s, t, q) from its defining sum, memoized.
const RatFunc& h_general(int n);
/// H(n, s, t, q) from its defining sum, memoized.
const RatFunc& H_general(int n);

/// Expansion identities for f, F(2n), F(2n+1).
Check norm_expansion(const std::string& id, int n);

enum class Kupershmidt { f_odd_power, F_even, F_odd };

const std::vector<std::pair<std::string, Kupershmidt>>& kupershmidt_ids();

/// Closed form in Z[q] of f(n, q^(2m+1), q), F(2n, q^m, q) or
/// F(2n+1, q^m, q); throws IdentityViolated when it differs from the
/// substituted normalized polynomial.
UPoly kupershmidt_closed(Kupershmidt id, int n, int m);
Check kupershmidt_check(Kupershmidt id, int n, int m);

/// The same value at the reflected exponent -m (for f: -(2m-1), m >= 1)
/// against q^(...) times the positive-m closed form.
Check negative_m_check(Kupershmidt id, int n, int m);

/// Large-n behaviour: the closed form at index n agrees with its n -> oo
/// limit in every q-power below the stated bound.
Check tail_check(Kupershmidt id, int n, int m);

/// sum_j (-1)^j q^(m j) [n j]_{q^2} is divisible by (q;q^2)_{floor((n+1)/2)},
/// and by (q;-q)_n for odd m or (q^2;q^4)_{floor((n+1)/2)} for even m.
Check divisibility_check(int n, int m);

/// Keyed checks on h and H: recurrences, expansions and the specializations
/// at s = 0 and t = 0, 1, q.
const std::vector<std::string>& hH_check_ids();
Check hH_check(const std::string& id, int n);

/// Identities accepted by norm_check, including the negative controls.
const std::vector<std::string>& norm_ids();
const std::vector<std::string>& norm_negative_controls();
/// Dispatches on id; m is ignored by identities that do not use it.
Check norm_check(const std::string& id, int n, int m);

}  // namespace qrs
