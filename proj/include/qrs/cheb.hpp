// q-Chebyshev polynomials T, U, V in (x, s) and their links to
// Rogers-Szego values at s = -q^m.
#pragma once

#include "qrs/report.hpp"

#include <string>
#include <vector>

namespace qrs {

enum class ChebKind { T, U, V };

/// Recurrence construction, memoized.  U accepts m = -1 (zero).
const ZPoly& cheb(ChebKind kind, int m);

/// Closed sums for T and U.
RatFunc cheb_closed(ChebKind kind, int m);

/// q -> -q on a polynomial in q.
UPoly negate_q(const UPoly& p);
ZPoly negate_q(const ZPoly& p);

/// kind_m(1, -q^e, q) for base_sign = 1, or with q -> -q for base_sign = -1.
UPoly cheb_at(ChebKind kind, int m, int e, int base_sign);

/// Ids: closed sums, factorizations, boundary values, classical limits and
/// the recurrences in m satisfied by F and f.
const std::vector<std::string>& cheb_ids();
const std::vector<std::string>& cheb_negative_controls();
Check cheb_check(const std::string& id, int n, int m);

}  // namespace qrs
