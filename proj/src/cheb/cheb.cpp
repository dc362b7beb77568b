#include "qrs/cheb.hpp"

#include "qrs/normalized.hpp"
#include "qrs/qfun.hpp"
#include "qrs/rogers.hpp"

#include <functional>
#include <map>
#include <mutex>

namespace qrs {

namespace {

const ZPoly kX = ZPoly::var(Var::x);
const ZPoly kS = ZPoly::var(Var::s);

ZPoly build(ChebKind kind, int m, const std::function<const ZPoly&(int)>& prev) {
  if (m < 0) return ZPoly();
  if (m == 0) return ZPoly(1);
  switch (kind) {
    case ChebKind::T:
      if (m == 1) return kX;
      return (kX * prev(m - 1)).mul_upoly(UPoly::one_minus(m - 1, -1)) + (kS * prev(m - 2)).mul_upoly(UPoly::q_pow(m - 1));
    case ChebKind::U:
      return (kX * prev(m - 1)).mul_upoly(UPoly::one_minus(m, -1)) + (kS * prev(m - 2)).mul_upoly(UPoly::q_pow(m - 1));
    case ChebKind::V:
      if (m == 1) return kX.mul_upoly(UPoly::one_minus(1, -1)) + kS.mul_upoly(UPoly::q_pow(1));
      return (kX * prev(m - 1)).mul_upoly(UPoly::one_minus(2 * m - 1, -1)) -
             (kS * kS * prev(m - 2)).mul_upoly(UPoly::q_pow(2 * m - 1));
  }
  throw std::logic_error("unreachable");
}

}  // namespace

const ZPoly& cheb(ChebKind kind, int m) {
  static const ZPoly zero;
  if (m < 0) {
    if (m == -1 && kind == ChebKind::U) return zero;
    throw std::invalid_argument("cheb: negative degree");
  }
  static std::mutex mu;
  static std::map<std::pair<int, int>, ZPoly> memo;
  const auto key = std::make_pair(static_cast<int>(kind), m);
  {
    std::lock_guard lock(mu);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  ZPoly value = build(kind, m, [kind](int k) -> const ZPoly& { return cheb(kind, k); });
  std::lock_guard lock(mu);
  return memo.emplace(key, std::move(value)).first->second;
}

RatFunc cheb_closed(ChebKind kind, int m) {
  if (kind == ChebKind::V) throw std::invalid_argument("cheb_closed: no closed sum for V");
  if (m == 0) return 1;
  std::vector<RatFunc> terms;
  for (int k = 0; 2 * k <= m; ++k) {
    const ZPoly mono = ZPoly(Mono(static_cast<unsigned>(k), 0, static_cast<unsigned>(m - 2 * k)), UPoly::q_pow(k * k));
    RatFunc c = gauss_binomial(m - k, k);
    if (kind == ChebKind::U) {
      c *= RatFunc(q_pochhammer(-1, k + 1, 1, m - 2 * k));
    } else {
      c *= RatFunc(UPoly::one_minus(m)) / RatFunc(UPoly::one_minus(m - k));
      c *= RatFunc(q_pochhammer(-1, 1, 1, m - 1)) * q_pochhammer_inv(-1, 1, 1, k) * q_pochhammer_inv(-1, m - k, 1, k);
    }
    terms.push_back(c * RatFunc(mono));
  }
  return RatFunc::sum(terms);
}

UPoly negate_q(const UPoly& p) {
  if (!p.is_q_poly()) throw OddUExponent("negate_q: odd power of u");
  std::vector<BigInt> c(p.coeffs().begin(), p.coeffs().end());
  for (size_t e = 2; e < c.size(); e += 4) c[e] = -c[e];
  return UPoly(std::move(c));
}

ZPoly negate_q(const ZPoly& p) {
  return p.map_coeffs([](const UPoly& c) { return negate_q(c); });
}

UPoly cheb_at(ChebKind kind, int m, int e, int base_sign) {
  const ZPoly& p = cheb(kind, m);
  const ZPoly based = base_sign < 0 ? negate_q(p) : p;
  return based.subst(Var::x, 1).subst(Var::s, -UPoly::q_pow(e)).to_upoly();
}

namespace {

Json nm(int n, int m) { return {{"n", n}, {"m", m}}; }

Check rational_check(std::string id, Json params, const Rational& computed, const Rational& expected) {
  Check c;
  c.id = std::move(id);
  c.params = std::move(params);
  c.pass = computed == expected;
  c.computed = to_json(computed);
  c.expected = to_json(expected);
  return c;
}

/// Integer coefficients in x of p at q = 1, s = -1.
std::vector<BigInt> classical_coeffs(const ZPoly& p) {
  const ZPoly at = p.subst(Var::s, -1);
  std::vector<BigInt> out(at.degree(Var::x) + 1);
  for (const auto& [mono, c] : at.terms()) {
    const Rational v = c.eval_u(1);
    out[mono.exp(Var::x)] += BigInt(v.get_num());
  }
  return out;
}

/// Classical Chebyshev coefficients in x by the integer recurrence
/// P_m = 2x P_{m-1} - P_{m-2}.
std::vector<BigInt> classical_oracle(ChebKind kind, int m) {
  std::vector<std::vector<BigInt>> p = {{1}};
  if (kind == ChebKind::T) p.push_back({0, 1});
  if (kind == ChebKind::U) p.push_back({0, 2});
  if (kind == ChebKind::V) p.push_back({-1, 2});
  for (int k = 2; k <= m; ++k) {
    std::vector<BigInt> next(static_cast<size_t>(k + 1));
    for (size_t i = 0; i < p[k - 1].size(); ++i) next[i + 1] += 2 * p[k - 1][i];
    for (size_t i = 0; i < p[k - 2].size(); ++i) next[i] -= p[k - 2][i];
    p.push_back(next);
  }
  return p[static_cast<size_t>(m)];
}

Json coeff_json(const std::vector<BigInt>& v) {
  Json j = Json::array();
  for (const auto& c : v) j.push_back(c.get_str());
  return j;
}

Check classical_check(ChebKind kind, const std::string& id, int m) {
  const auto got = classical_coeffs(cheb(kind, m));
  const auto want = classical_oracle(kind, m);
  Check c;
  c.id = id;
  c.params = {{"m", m}};
  c.pass = got == want;
  c.computed = coeff_json(got);
  c.expected = coeff_json(want);
  return c;
}

/// Rational value of p at the q-point.
Rational at_q(const UPoly& p, int point) { return p.eval_q(point); }

/// F(N, q^e, q) or f(n, q^e, q) as a rational function of q.
RatFunc F_at(int N, int e) { return F_norm(N).subst(Var::s, RatFunc::q_pow(e)); }
RatFunc f_at(int n, int e) { return f_norm(n).subst(Var::s, RatFunc::q_pow(e)); }

using ChebFn = std::function<Check(int, int)>;

const std::vector<std::pair<std::string, ChebFn>>& table() {
  static const std::vector<std::pair<std::string, ChebFn>> t = {
      {"U-closed", [](int, int m) { return compare("U-closed", {{"m", m}}, cheb(ChebKind::U, m), cheb_closed(ChebKind::U, m)); }},
      {"T-closed", [](int, int m) { return compare("T-closed", {{"m", m}}, cheb(ChebKind::T, m), cheb_closed(ChebKind::T, m)); }},
      {"T-factor",
       [](int n, int m) {
         return compare("T-factor", nm(n, m), rs(2 * n).subst(Var::s, -UPoly::q_pow(m)),
                        q_pochhammer(1, 1, 2, n) * cheb_at(ChebKind::T, m, 2 * n, 1));
       }},
      {"U-factor",
       [](int n, int m) {
         if (n < 1) throw std::invalid_argument("U-factor needs n >= 1");
         const UPoly u = m >= 1 ? cheb_at(ChebKind::U, m - 1, 2 * n, 1) : UPoly();
         return compare("U-factor", nm(n, m), rs(2 * n - 1).subst(Var::s, -UPoly::q_pow(m)), q_pochhammer(1, 1, 2, n) * u);
       }},
      {"V-factor",
       [](int n, int m) {
         return compare("V-factor", nm(n, m), rs(n, 2).subst(Var::s, UPoly::q_pow(2 * m + 1)),
                        q_pochhammer(-1, 1, 1, n) * cheb_at(ChebKind::V, m, n, -1));
       }},
      {"T-boundary-q1",
       [](int n, int m) { return rational_check("T-boundary-q1", nm(n, m), at_q(cheb_at(ChebKind::T, m, 2 * n, 1), 1), 1); }},
      {"T-boundary-qm1",
       [](int n, int m) { return rational_check("T-boundary-qm1", nm(n, m), at_q(cheb_at(ChebKind::T, m, 2 * n, 1), -1), 1); }},
      {"U-boundary-q1",
       [](int n, int m) {
         return rational_check("U-boundary-q1", nm(n, m), at_q(cheb_at(ChebKind::U, m, 2 * n, 1), 1), m + 1);
       }},
      {"U-boundary-q1-printed",
       [](int n, int m) {
         return rational_check("U-boundary-q1-printed", nm(n, m), at_q(cheb_at(ChebKind::U, m, 2 * n, 1), 1), 1);
       }},
      {"U-boundary-qm1",
       [](int n, int m) {
         // Observed pattern: 1 for even m, 0 for odd m.
         Check c = rational_check("U-boundary-qm1", nm(n, m), at_q(cheb_at(ChebKind::U, m, 2 * n, 1), -1), m % 2 ? 0 : 1);
         const long e = static_cast<long>(m) * (m + 1) / 2 * (m / 2);
         c.extra["printed_value"] = e % 2 ? -1 : 1;
         return c;
       }},
      {"V-boundary-q1",
       [](int n, int m) { return rational_check("V-boundary-q1", nm(n, m), at_q(cheb_at(ChebKind::V, m, n, -1), 1), 1); }},
      {"V-even-boundary-qm1",
       [](int n, int m) {
         return rational_check("V-even-boundary-qm1", nm(n, m), at_q(cheb_at(ChebKind::V, m, 2 * n, -1), -1), 1);
       }},
      {"V-odd-boundary-qm1",
       [](int n, int m) {
         return rational_check("V-odd-boundary-qm1", nm(n, m), at_q(cheb_at(ChebKind::V, m, 2 * n + 1, -1), -1), 2 * m + 1);
       }},
      {"V-odd-boundary-q1-printed",
       [](int n, int m) {
         return rational_check("V-odd-boundary-q1-printed", nm(n, m), at_q(cheb_at(ChebKind::V, m, 2 * n + 1, -1), 1),
                               2 * m + 1);
       }},
      {"T-classical", [](int, int m) { return classical_check(ChebKind::T, "T-classical", m); }},
      {"U-classical", [](int, int m) { return classical_check(ChebKind::U, "U-classical", m); }},
      {"V-classical", [](int, int m) { return classical_check(ChebKind::V, "V-classical", m); }},
      {"T-bridge",
       [](int n, int m) {
         if (m < 2) throw std::invalid_argument("T-bridge needs m >= 2");
         const RatFunc rhs = RatFunc(UPoly::one_minus(m - 1, -1)) * F_at(2 * n, m - 1) -
                             RatFunc::q_pow(m - 1 + 2 * n) * F_at(2 * n, m - 2);
         return compare("T-bridge", nm(n, m), F_at(2 * n, m), rhs);
       }},
      {"U-bridge",
       [](int n, int m) {
         if (m < 2 || n < 1) throw std::invalid_argument("U-bridge needs n >= 1, m >= 2");
         const RatFunc rhs = RatFunc(UPoly::one_minus(m - 1, -1)) * F_at(2 * n - 1, m - 1) -
                             RatFunc::q_pow(m - 2 + 2 * n) * F_at(2 * n - 1, m - 2);
         return compare("U-bridge", nm(n, m), F_at(2 * n - 1, m), rhs);
       }},
      {"V-bridge",
       [](int n, int m) {
         if (m < 1) throw std::invalid_argument("V-bridge needs m >= 1");
         const RatFunc rhs = RatFunc(UPoly::one_minus(2 * m - 1)) * f_at(n, 2 * m - 1) +
                             RatFunc::q_pow(2 * n + 2 * m - 1) * f_at(n, 2 * m - 3);
         return compare("V-bridge", nm(n, m), f_at(n, 2 * m + 1), rhs);
       }},
  };
  return t;
}

}  // namespace

const std::vector<std::string>& cheb_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> r;
    for (const auto& [name, fn] : table())
      if (!name.ends_with("-printed")) r.push_back(name);
    return r;
  }();
  return ids;
}

const std::vector<std::string>& cheb_negative_controls() {
  static const std::vector<std::string> ids = {"U-boundary-q1-printed", "V-odd-boundary-q1-printed"};
  return ids;
}

Check cheb_check(const std::string& id, int n, int m) {
  for (const auto& [name, fn] : table())
    if (name == id) return fn(n, m);
  throw UnknownIdentity("unknown q-Chebyshev identity: " + id);
}

}  // namespace qrs
