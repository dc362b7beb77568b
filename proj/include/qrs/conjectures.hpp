// Divisibility scans for the Rogers-Szego conjectures in bases q^(2^k) and
// q^p, and the cofactors c_p(2m+1, n, q).
#pragma once

#include "qrs/report.hpp"

#include <string>
#include <vector>

namespace qrs {

enum class Conjecture { binary, prime, cofactor };

/// "binary", "prime" or "cofactor"; throws UnknownIdentity otherwise.
Conjecture conjecture_from_name(const std::string& name);
std::string conjecture_name(Conjecture c);

struct ScanResult {
  Conjecture conjecture = Conjecture::binary;
  Json params = Json::object();
  bool holds = false;
  UPoly target;
  UPoly divisor;
  /// Cofactor when the division is exact, otherwise the remainder.
  UPoly witness;
  /// Cofactor values at q = 1 and q = -1 (cofactor scan only).
  Rational at_one = 0;
  Rational at_minus_one = 0;
  /// c_p_minus1 for the cofactor scan.
  Rational expected_at_minus_one = 0;
};

Json to_json(const ScanResult& r);
Check to_check(const ScanResult& r);

/// r_n(-q^m, q^(2^k)) against (q;q^2)_{floor((n+1)/2)}.
ScanResult binary_tuple(int n, int m, int k);

/// sum_j (-1)^j q^(m j) [n j]_{q^p} against
/// prod_{j=1}^{floor((n+1)/2)} (1 - q^((2j-1)/V_p(2j-1))).
ScanResult prime_tuple(long p, int n, int m);

/// r_n(q^(2m+1), q^(2p)) against prod_{k=1}^n (1 + q^(k/V_p(k))).  Holds when
/// the division is exact, the cofactor is 1 at q = 1 and matches
/// c_p_minus1 at q = -1.
ScanResult cofactor_tuple(long p, int m, int n);

/// Control: the binary scan with one extra factor (1 - q^(2N+1)) in the
/// divisor.  Expected to fail for every m >= 1.
ScanResult binary_overreach_tuple(int n, int m, int k);

/// (q;-q)_n = (q;q^2)_{floor((n+1)/2)} (-q^2;q^2)_{floor(n/2)}.
Check pochhammer_split_check(int n);

}  // namespace qrs
