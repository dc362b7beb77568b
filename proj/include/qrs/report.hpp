// One verified instance of an identity, limit, scan tuple or determinant.
#pragma once

#include "qrs/serialize.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace qrs {

struct Check {
  std::string id;
  Json params = Json::object();
  bool pass = false;
  Json expected;
  Json computed;
  Json witness;
  /// Extra fields some suites attach (for example first_failing_order).
  Json extra = Json::object();
};

Json to_json(const Check& c);

/// Raised by value-returning operations whose built-in cross-check fails.
class IdentityViolated : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Raised when a catalog key is not registered.
class UnknownIdentity : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Builds a check comparing two exact values; a failing check carries the
/// difference as witness.
Check compare(std::string id, Json params, const RatFunc& computed, const RatFunc& expected);

bool all_pass(const std::vector<Check>& checks);

}  // namespace qrs
