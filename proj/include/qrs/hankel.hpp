// Hankel determinants of Rogers-Szego moment sequences, the Favard
// recurrence data sigma/tau, moment tables and orthogonal polynomials.
#pragma once

#include "qrs/report.hpp"

#include <functional>
#include <string>
#include <vector>

namespace qrs {

class UnknownFamily : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Moment sequences: r_n(s,q); f(n,s,q); h(n,s,t,q); H(n,s,t,q); F(2n,s,q);
/// F(2n+1,s,q); F(n,s,q).
enum class Family { rs, f, h, H, F_even, F_odd, F };

Family family_from_name(const std::string& name);
std::string family_name(Family f);
const std::vector<Family>& all_families();

/// The n-th moment of the family.
RatFunc moment(Family f, int n);

/// Three-term recurrence data.  The moments are scale * a(n) where a is the
/// moment sequence of the monic orthogonal polynomials p_n with
/// p_n = (x - sigma(n-1)) p_{n-1} - tau(n-2) p_{n-2}.
struct RecSystem {
  Family family;
  std::function<RatFunc(int)> sigma;
  std::function<RatFunc(int)> tau;
  RatFunc scale = 1;
};

RecSystem sigma_tau(Family f);

/// det(m[i][j]) by fraction-free elimination after clearing each row's
/// denominator.
RatFunc determinant(const std::vector<std::vector<RatFunc>>& m);

/// det(a(i+j))_{i,j=0}^n for a(k) = moments[k]; needs 2n+1 moments.
RatFunc hankel_det(const std::vector<RatFunc>& moments, int n);
RatFunc hankel_det(Family f, int n);

/// scale^(n+1) * prod_{i=1}^n prod_{j<i} tau(j).
RatFunc tau_product(const RecSystem& rec, int n);

/// Closed form of the determinant for rs, f, F-even, F-odd and F; the
/// F-even and F-odd base values at s = 0 come from tau_product.
RatFunc closed_hankel(Family f, int n);
bool has_closed_form(Family f);

/// Three-way agreement of hankel_det, tau_product and closed_hankel (the
/// last one only where has_closed_form).
Check hankel_check(Family f, int n);

/// a(n, j) for 0 <= j <= n <= n_max.
std::vector<std::vector<RatFunc>> moment_table(const RecSystem& rec, int n_max);

/// The table against its guessed closed entries (rs, h, H) and its first
/// column against the moments (every family).
Check moment_identity_check(Family f, int n);

/// Coefficients in x, lowest first.
using XPoly = std::vector<RatFunc>;

std::vector<XPoly> orth_polys(const RecSystem& rec, int n_max);

/// The explicit orthogonal polynomials for rs, h and H.  form 0 is the sum
/// over powers of x, form 1 the sum over prod (x - q^i) (h and H only).
XPoly explicit_orth(Family f, int n, int form);

/// Explicit forms and the bordered-determinant form against the recurrence.
Check orth_poly_check(Family f, int n);

/// F(p_n) = [n = 0] and F(p_n p_m) = 0 for m < n.
Check orthogonality_check(Family f, int n);

/// A_n and C_n of the monic big q-Jacobi polynomials p_n(x; a, b, c; q^base).
struct BigQJacobi {
  RatFunc a;
  RatFunc b;
  RatFunc c;
  HalfInt base = 1;
  RatFunc A(int n) const;
  RatFunc C(int n) const;
};

const std::vector<std::string>& jacobi_ids();
Check jacobi_check(const std::string& id, int n);

/// sum_{j=0}^{m+1} (-1)^j q^C(j,2) [m+1 j] f(n-j, q^(2m+1), q) = 0 for n > m.
Check recurrence_vanishing_check(int m, int n);

/// The order from which the determinant of the family vanishes at
/// s = q^(2m+1) (f) or s = q^m (F, F-even, F-odd).
int vanishing_start(Family f, int m);
/// det at the special s is zero exactly when n >= vanishing_start.
Check vanishing_check(Family f, int m, int n);

/// Every root in s of the f determinant is q^(+-(2m+1)), of the F
/// determinant q^(+-m): the predicted linear factors leave a constant in s.
Check root_structure_check(Family f, int n);

/// tau(j) is not identically zero for j <= j_max.
Check tau_nonzero_check(Family f, int j_max);

/// Ids accepted by hankel_suite_check, including the negative controls.
const std::vector<std::string>& hankel_ids();
const std::vector<std::string>& hankel_negative_controls();
/// Dispatches on id; m is used by the vanishing ids only.
Check hankel_suite_check(const std::string& id, int n, int m = 0);

}  // namespace qrs
