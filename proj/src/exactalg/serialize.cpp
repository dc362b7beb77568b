#include "qrs/serialize.hpp"

#include <sstream>

namespace qrs {

Json to_json(const UPoly& p) { return to_json(ZPoly(p)); }

Json to_json(const ZPoly& p) {
  Json rows = Json::array();
  for (const auto& [m, c] : p.terms())
    for (int e = 0; e <= c.degree(); ++e)
      if (c.coeff(e) != 0)
        rows.push_back(Json::array({e, m.exp(Var::s), m.exp(Var::t), m.exp(Var::x), c.coeff(e).get_str()}));
  return rows;
}

Json to_json(const QRat& r) { return Json{{"num", to_json(r.num())}, {"den", to_json(r.den())}}; }

Json to_json(const RatFunc& r) {
  if (r.is_polynomial()) return Json{{"num", to_json(r.num())}, {"den", to_json(ZPoly(1))}};
  return Json{{"num", to_json(r.num())}, {"den", to_json(r.den())}};
}

Json to_json(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_str();
}

ZPoly zpoly_from_json(const Json& j) {
  std::vector<ZPoly::Term> terms;
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != 5) throw std::invalid_argument("polynomial row must have five entries");
    const int e = row[0].get<int>();
    const Mono m(row[1].get<unsigned>(), row[2].get<unsigned>(), row[3].get<unsigned>());
    terms.emplace_back(m, UPoly::monomial(BigInt(row[4].get<std::string>()), e));
  }
  return ZPoly::from_terms(std::move(terms));
}

UPoly upoly_from_json(const Json& j) { return zpoly_from_json(j).to_upoly(); }

std::string pretty(const UPoly& p) { return p.is_q_poly() ? p.rescale_exponents(1, 2).str('q') : p.str('u'); }

std::string pretty(const ZPoly& p) {
  bool even = true;
  for (const auto& t : p.terms()) even = even && t.second.is_q_poly();
  if (!even) return p.str();
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const char* names[] = {"s", "t", "x"};
  for (const auto& [m, c] : p.terms()) {
    if (!first) os << " + ";
    first = false;
    const bool bare = c.is_one() && !m.is_one();
    if (!bare) os << (m.is_one() ? pretty(c) : "(" + pretty(c) + ")");
    bool any = !bare;
    for (Var v : {Var::s, Var::t, Var::x}) {
      const unsigned e = m.exp(v);
      if (e == 0) continue;
      if (any) os << "*";
      any = true;
      os << names[static_cast<int>(v)];
      if (e > 1) os << "^" << e;
    }
  }
  return os.str();
}

std::string pretty(const RatFunc& r) {
  if (r.is_polynomial()) return pretty(r.num());
  return "(" + pretty(r.num()) + ")/(" + pretty(r.den()) + ")";
}

}  // namespace qrs
