#include "qrs/report.hpp"

#include <algorithm>

namespace qrs {

Json to_json(const Check& c) {
  Json j{{"id", c.id}, {"params", c.params}, {"pass", c.pass},
         {"expected", c.expected}, {"computed", c.computed}, {"witness", c.witness}};
  for (const auto& [k, v] : c.extra.items()) j[k] = v;
  return j;
}

Check compare(std::string id, Json params, const RatFunc& computed, const RatFunc& expected) {
  Check c;
  c.id = std::move(id);
  c.params = std::move(params);
  c.pass = computed == expected;
  c.computed = to_json(computed);
  c.expected = to_json(expected);
  if (!c.pass) c.witness = to_json(computed - expected);
  return c;
}

bool all_pass(const std::vector<Check>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

}  // namespace qrs
