// Canonical JSON forms.  A polynomial is an array of
// [u_exp, s_exp, t_exp, x_exp, "coeff"] rows in descending (s, t, x) order and
// ascending u; quotients are {"num": ..., "den": ...}.
#pragma once

#include "qrs/ratfunc.hpp"

#include <json.hpp>

namespace qrs {

using Json = nlohmann::ordered_json;

Json to_json(const UPoly& p);
Json to_json(const ZPoly& p);
Json to_json(const QRat& r);
Json to_json(const RatFunc& r);
Json to_json(const Rational& r);

UPoly upoly_from_json(const Json& j);
ZPoly zpoly_from_json(const Json& j);

/// Human-readable rendering in q when every u-exponent is even.
std::string pretty(const UPoly& p);
std::string pretty(const ZPoly& p);
std::string pretty(const RatFunc& r);

}  // namespace qrs
