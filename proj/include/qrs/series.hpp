// Truncated power series in z with rational-function coefficients, the three
// q-exponentials and the generating-function catalog.
#pragma once

#include "qrs/report.hpp"

#include <string>
#include <vector>

namespace qrs {

class NonUnitConstantTerm : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

class TruncSeries {
public:
  explicit TruncSeries(int order);
  TruncSeries(int order, std::vector<RatFunc> coeffs);

  int order() const { return order_; }
  const RatFunc& operator[](int n) const { return c_[static_cast<size_t>(n)]; }
  RatFunc& operator[](int n) { return c_[static_cast<size_t>(n)]; }

  friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
  TruncSeries scale(const RatFunc& k) const;
  TruncSeries reciprocal() const;
  /// Index of the first differing coefficient, or -1.
  friend int first_difference(const TruncSeries& a, const TruncSeries& b);

private:
  int order_;
  std::vector<RatFunc> c_;
};

enum class QExpKind { exp, Exp, e };

/// Series of the q-exponential of kind in base q^base evaluated at c * z^power.
TruncSeries q_exp_series(QExpKind kind, HalfInt base, const RatFunc& c, int power, int order);

/// Catalog keys accepted by verify_gf_identity.
const std::vector<std::string>& gf_catalog();

/// Deliberately perturbed identities that must fail.
const std::vector<std::string>& gf_negative_controls();

/// Compares both sides coefficient by coefficient up to z^order.  The check
/// records first_failing_order and, on failure, the two coefficients.
Check verify_gf_identity(const std::string& id, int order);

}  // namespace qrs
