#include "qrs/normalized.hpp"

#include "qrs/qfun.hpp"
#include "qrs/rogers.hpp"

#include <map>
#include <mutex>

namespace qrs {

namespace {

const RatFunc kS = RatFunc::var(Var::s);
const RatFunc kT = RatFunc::var(Var::t);

RatFunc q_rf(HalfInt k, long c = 1) { return RatFunc::q_pow(k, c); }

/// (c q^a; q^base)_len for any integer a; zero when a factor 1 - q^0 occurs.
UPoly poch(int c, int a, int base, int len) {
  if (a >= 0) return q_pochhammer(c, a, base, len);
  if (c == 1 && -a % base == 0 && -a / base < len) return UPoly();
  UPoly r(1);
  for (int i = 0; i < len; ++i) {
    const int e = a + i * base;
    if (e == 0 && c == 1) return UPoly();
    if (e < 0) throw std::invalid_argument("poch: negative exponent with nonzero factor");
    r *= UPoly::one_minus(e, c);
  }
  return r;
}

template <class Build>
const RatFunc& memoized(std::map<int, RatFunc>& memo, std::mutex& mu, int n, Build build) {
  {
    std::lock_guard lock(mu);
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
  }
  RatFunc value = build(n);
  std::lock_guard lock(mu);
  return memo.emplace(n, std::move(value)).first->second;
}

}  // namespace

RatFunc f_norm(int n) { return RatFunc(rs(n, 2)) * q_pochhammer_inv(-1, 1, 1, n); }

RatFunc F_norm(int n) {
  return RatFunc(rs(n).subst(Var::s, -ZPoly::var(Var::s))) * q_pochhammer_inv(1, 1, 2, (n + 1) / 2);
}

const RatFunc& h_general(int n) {
  static std::mutex mu;
  static std::map<int, RatFunc> memo;
  return memoized(memo, mu, n, [](int n) {
    std::vector<RatFunc> terms;
    RatFunc prod = 1;
    for (int j = 0; j <= n; ++j) {
      if (j > 0) prod *= (q_rf(2 * j - 1) * kT - kS) / (1 + q_rf(j) * kT);
      terms.push_back(prod * RatFunc(UPoly(gauss_binomial(n, j)) * (j % 2 ? -1L : 1L)));
    }
    return RatFunc::sum(terms);
  });
}

const RatFunc& H_general(int n) {
  static std::mutex mu;
  static std::map<int, RatFunc> memo;
  return memoized(memo, mu, n, [](int n) {
    std::vector<RatFunc> terms;
    RatFunc prod = 1;
    for (int j = 0; j <= n; ++j) {
      if (j > 0)
        prod *= (q_rf(2 * j - 2) * kT - kS) * (q_rf(2 * j - 1) * kT - kS) / (1 - q_rf(2 * j - 1) * kT * kT);
      terms.push_back(prod * RatFunc(gauss_binomial(n, j, 2)));
    }
    return RatFunc::sum(terms);
  });
}

Check norm_expansion(const std::string& id, int n) {
  std::vector<RatFunc> terms;
  if (id == "f-expansion") {
    RatFunc prod = 1;
    for (int j = 0; j <= n; ++j) {
      if (j > 0) prod *= (q_rf(2 * j - 1) - kS) / RatFunc(UPoly::one_minus(j, -1));
      terms.push_back(prod * RatFunc(UPoly(gauss_binomial(n, j)) * (j % 2 ? -1L : 1L)));
    }
    return compare(id, {{"n", n}}, f_norm(n), RatFunc::sum(terms));
  }
  if (id == "F-even-expansion" || id == "F-odd-expansion") {
    const bool odd = id == "F-odd-expansion";
    RatFunc prod = odd ? (1 - kS) / RatFunc(UPoly::one_minus(1)) : RatFunc(1);
    for (int k = 0; k <= n; ++k) {
      if (k > 0) {
        // Two more factors q^j - s and one more (q;q^2) factor.
        const int j0 = odd ? 2 * k - 1 : 2 * k - 2;
        prod *= (q_rf(j0) - kS) * (q_rf(j0 + 1) - kS) / RatFunc(UPoly::one_minus(odd ? 2 * k + 1 : 2 * k - 1));
      }
      terms.push_back(prod * RatFunc(gauss_binomial(n, k, 2)));
    }
    return compare(id, {{"n", n}}, F_norm(odd ? 2 * n + 1 : 2 * n), RatFunc::sum(terms));
  }
  throw UnknownIdentity("unknown expansion: " + id);
}

const std::vector<std::pair<std::string, Kupershmidt>>& kupershmidt_ids() {
  static const std::vector<std::pair<std::string, Kupershmidt>> ids = {
      {"f-closed", Kupershmidt::f_odd_power}, {"F-even-closed", Kupershmidt::F_even}, {"F-odd-closed", Kupershmidt::F_odd}};
  return ids;
}

namespace {

std::string kup_name(Kupershmidt id) {
  for (const auto& [name, v] : kupershmidt_ids())
    if (v == id) return name;
  return "?";
}

UPoly closed_form(Kupershmidt id, int n, int m) {
  if (m < 0) throw std::invalid_argument("closed form needs m >= 0");
  UPoly sum;
  switch (id) {
    case Kupershmidt::f_odd_power:
      for (int j = 0; j <= m; ++j)
        sum += UPoly::q_pow(j * j, j % 2 ? -1 : 1) * gauss_binomial(m, j, 2) * poch(1, n - j + 1, 1, j);
      break;
    case Kupershmidt::F_even:
      for (int k = 0; 2 * k <= m; ++k)
        sum += UPoly::q_pow(k * (2 * k - 1)) * gauss_binomial(m, 2 * k) * poch(1, 2 * n - 2 * k + 2, 2, k);
      break;
    case Kupershmidt::F_odd:
      for (int k = 0; 2 * k + 1 <= m; ++k)
        sum += UPoly::q_pow(k * (2 * k + 1)) * gauss_binomial(m, 2 * k + 1) * poch(1, 2 * n - 2 * k + 2, 2, k);
      break;
  }
  return sum;
}

/// The normalized polynomial at s = q^e, in Q(q).
RatFunc substituted(Kupershmidt id, int n, int e) {
  const RatFunc point = RatFunc::q_pow(e);
  switch (id) {
    case Kupershmidt::f_odd_power:
      return f_norm(n).subst(Var::s, point);
    case Kupershmidt::F_even:
      return F_norm(2 * n).subst(Var::s, point);
    case Kupershmidt::F_odd:
      return F_norm(2 * n + 1).subst(Var::s, point);
  }
  throw std::logic_error("unreachable");
}

int exponent_for(Kupershmidt id, int m) { return id == Kupershmidt::f_odd_power ? 2 * m + 1 : m; }

}  // namespace

UPoly kupershmidt_closed(Kupershmidt id, int n, int m) {
  const UPoly closed = closed_form(id, n, m);
  if (!(substituted(id, n, exponent_for(id, m)) == RatFunc(closed)))
    throw IdentityViolated(kup_name(id) + " fails at n = " + std::to_string(n) + ", m = " + std::to_string(m));
  return closed;
}

Check kupershmidt_check(Kupershmidt id, int n, int m) {
  const RatFunc value = substituted(id, n, exponent_for(id, m));
  Check c = compare(kup_name(id), {{"n", n}, {"m", m}}, value, closed_form(id, n, m));
  c.extra["in_Zq"] = value.is_polynomial() && value.to_upoly().is_q_poly();
  if (!c.extra["in_Zq"].get<bool>()) c.pass = false;
  return c;
}

Check negative_m_check(Kupershmidt id, int n, int m) {
  // Reversing the summation order gives r_N(c q^-e) = c^N q^(-eN) r_N(c q^e).
  std::string name = kup_name(id);
  name = name.substr(0, name.size() - std::string("closed").size()) + "negative-m";
  if (id == Kupershmidt::f_odd_power) {
    if (m < 1) throw std::invalid_argument("f-negative-m needs m >= 1");
    const int e = 2 * m - 1;
    return compare(name, {{"n", n}, {"m", m}}, substituted(id, n, -e),
                   RatFunc::q_pow(-e * n) * RatFunc(closed_form(id, n, m - 1)));
  }
  const int N = id == Kupershmidt::F_even ? 2 * n : 2 * n + 1;
  return compare(name, {{"n", n}, {"m", m}}, substituted(id, n, -m),
                 RatFunc::q_pow(-m * N, N % 2 ? -1 : 1) * RatFunc(closed_form(id, n, m)));
}

Check tail_check(Kupershmidt id, int n, int m) {
  std::string name = kup_name(id);
  name = name.substr(0, name.size() - std::string("closed").size()) + "tail";
  UPoly limit;
  int bound;
  if (id == Kupershmidt::f_odd_power) {
    limit = q_pochhammer(1, 1, 2, m);
    bound = n + 1 - m;
  } else {
    if (id == Kupershmidt::F_odd && m < 1) throw std::invalid_argument("F-odd-tail needs m >= 1");
    limit = m >= 1 ? q_pochhammer(-1, 1, 1, m - 1) : UPoly(1);
    bound = 2 * n + 2 - m;
  }
  const UPoly value = kupershmidt_closed(id, n, m);
  const UPoly diff = value - limit;
  // low_degree is in u; q-degree is half of it.
  const int agree = diff.is_zero() ? -1 : diff.low_degree() / 2;
  Check c;
  c.id = name;
  c.params = {{"n", n}, {"m", m}};
  c.pass = diff.is_zero() || agree >= bound;
  c.computed = agree;
  c.expected = bound;
  c.extra["limit"] = to_json(limit);
  if (!c.pass) c.witness = to_json(diff);
  return c;
}

Check divisibility_check(int n, int m) {
  const ZPoly sum = rs(n, 2).subst(Var::s, -UPoly::q_pow(m));
  const UPoly target = sum.to_upoly();
  std::vector<std::pair<std::string, UPoly>> divisors = {{"(q;q^2)", q_pochhammer(1, 1, 2, (n + 1) / 2)}};
  if (m % 2) {
    UPoly d(1);
    for (int j = 0; j < n; ++j) d *= UPoly::one_minus(j + 1, j % 2 ? -1 : 1);
    divisors.emplace_back("(q;-q)", d);
  } else {
    divisors.emplace_back("(q^2;q^4)", q_pochhammer(1, 2, 4, (n + 1) / 2));
  }
  Check c;
  c.id = "divisibility";
  c.params = {{"n", n}, {"m", m}};
  c.pass = true;
  c.computed = to_json(target);
  Json cof = Json::object();
  for (const auto& [label, d] : divisors) {
    UPoly quotient;
    const bool ok = try_divexact(target, d, quotient);
    cof[label] = ok ? to_json(quotient) : Json(nullptr);
    c.pass = c.pass && ok;
  }
  c.extra["cofactors"] = cof;
  return c;
}

namespace {

RatFunc h_recurrence(int n, bool) {
  const RatFunc prev2 = n >= 2 ? h_general(n - 2) : RatFunc(0);
  return ((1 + kS) * h_general(n - 1) + RatFunc(UPoly::q_pow(n - 1) - 1) * kS * prev2) / (1 + q_rf(n) * kT);
}

RatFunc H_recurrence(int n, bool printed_sign) {
  const RatFunc prev2 = n >= 2 ? H_general(n - 2) : RatFunc(0);
  const RatFunc lead = 1 + kS * kS - RatFunc(UPoly::one_minus(1, -1) * UPoly::q_pow(2 * n - 2)) * kS * kT;
  const RatFunc tail = RatFunc(UPoly::one_minus(2 * n - 2)) * kS * kS * prev2;
  return (lead * H_general(n - 1) + (printed_sign ? tail : -tail)) / (1 - q_rf(2 * n - 1) * kT * kT);
}

RatFunc h_expansion_rhs(int n) {
  std::vector<RatFunc> terms;
  for (int j = 0; 2 * j <= n; ++j) {
    const UPoly c = UPoly::q_pow(j * j, j % 2 ? -1 : 1) * q_pochhammer(1, 1, 2, j) * gauss_binomial(n, 2 * j);
    terms.emplace_back(rs(n - 2 * j).mul_mono(Mono(static_cast<unsigned>(j), static_cast<unsigned>(j), 0)).mul_upoly(c));
  }
  return RatFunc::sum(terms) / q_pochhammer(-q_rf(1) * kT, 1, n);
}

RatFunc H_expansion_rhs(int n) {
  std::vector<RatFunc> terms;
  for (int j = 0; j <= n; ++j) {
    const UPoly c = UPoly::q_pow(j * (j - 1) / 2, j % 2 ? -1 : 1) * q_pochhammer(-1, 1, 1, j) * gauss_binomial(n, j, 2);
    terms.emplace_back(
        rs(n - j, 2).stretch(Var::s, 2).mul_mono(Mono(static_cast<unsigned>(j), static_cast<unsigned>(j), 0)).mul_upoly(c));
  }
  return RatFunc::sum(terms) / q_pochhammer(q_rf(1) * kT * kT, 2, n);
}

RatFunc at_t(const RatFunc& p, const RatFunc& value) { return p.subst(Var::t, value); }

using HHFn = Check (*)(int);

const std::vector<std::pair<std::string, HHFn>>& hH_table() {
  static const std::vector<std::pair<std::string, HHFn>> table = {
      {"h-recurrence",
       [](int n) { return compare("h-recurrence", {{"n", n}}, h_general(n), n == 0 ? RatFunc(1) : h_recurrence(n, false)); }},
      {"h-expansion", [](int n) { return compare("h-expansion", {{"n", n}}, h_general(n), h_expansion_rhs(n)); }},
      {"H-recurrence",
       [](int n) { return compare("H-recurrence", {{"n", n}}, H_general(n), n == 0 ? RatFunc(1) : H_recurrence(n, false)); }},
      {"H-expansion", [](int n) { return compare("H-expansion", {{"n", n}}, H_general(n), H_expansion_rhs(n)); }},
      {"h-at-t1", [](int n) { return compare("h-at-t1", {{"n", n}}, at_t(h_general(n), 1), f_norm(n)); }},
      {"h-at-t0", [](int n) { return compare("h-at-t0", {{"n", n}}, at_t(h_general(n), 0), rs(n)); }},
      {"h-at-s0",
       [](int n) {
         return compare("h-at-s0", {{"n", n}}, h_general(n).subst(Var::s, 0), RatFunc(1) / q_pochhammer(-q_rf(1) * kT, 1, n));
       }},
      {"H-at-t1", [](int n) { return compare("H-at-t1", {{"n", n}}, at_t(H_general(n), 1), F_norm(2 * n)); }},
      {"H-at-tq",
       [](int n) {
         return compare("H-at-tq", {{"n", n}}, at_t(H_general(n), q_rf(1)) * (1 - kS) / RatFunc(UPoly::one_minus(1)),
                        F_norm(2 * n + 1));
       }},
      {"H-at-t0", [](int n) { return compare("H-at-t0", {{"n", n}}, at_t(H_general(n), 0), rs(n, 2).stretch(Var::s, 2)); }},
      {"H-at-s0",
       [](int n) {
         return compare("H-at-s0", {{"n", n}}, H_general(n).subst(Var::s, 0),
                        RatFunc(1) / q_pochhammer(q_rf(1) * kT * kT, 2, n));
       }},
      {"H-recurrence-printed",
       [](int n) {
         return compare("H-recurrence-printed", {{"n", n}}, H_general(n), n == 0 ? RatFunc(1) : H_recurrence(n, true));
       }},
      {"H-initial-printed",
       [](int n) {
         const RatFunc printed = (1 + RatFunc(UPoly::one_minus(1, -1)) * kS + kS * kS) / (1 - q_rf(1) * kT * kT);
         return compare("H-initial-printed", {{"n", n}}, H_general(1), printed);
       }},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& hH_check_ids() {
  static const std::vector<std::string> ids = {"h-recurrence", "h-expansion", "H-recurrence", "H-expansion",
                                               "h-at-t1",      "h-at-t0",     "h-at-s0",      "H-at-t1",
                                               "H-at-tq",      "H-at-t0",     "H-at-s0"};
  return ids;
}

Check hH_check(const std::string& id, int n) {
  for (const auto& [name, fn] : hH_table())
    if (name == id) return fn(n);
  throw UnknownIdentity("unknown h/H identity: " + id);
}

const std::vector<std::string>& norm_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> r = {"f-expansion",   "F-even-expansion", "F-odd-expansion",   "f-closed",
                                  "F-even-closed", "F-odd-closed",     "f-negative-m",      "F-even-negative-m",
                                  "F-odd-negative-m", "f-tail",        "F-even-tail",       "F-odd-tail",
                                  "divisibility"};
    for (const auto& id : hH_check_ids()) r.push_back(id);
    return r;
  }();
  return ids;
}

const std::vector<std::string>& norm_negative_controls() {
  static const std::vector<std::string> ids = {"H-recurrence-printed", "H-initial-printed"};
  return ids;
}

Check norm_check(const std::string& id, int n, int m) {
  if (id.ends_with("-expansion") && id.front() != 'h' && id.front() != 'H') return norm_expansion(id, n);
  for (const auto& [name, kid] : kupershmidt_ids()) {
    const std::string stem = name.substr(0, name.size() - std::string("closed").size());
    if (id == name) return kupershmidt_check(kid, n, m);
    if (id == stem + "negative-m") return negative_m_check(kid, n, m);
    if (id == stem + "tail") return tail_check(kid, n, m);
  }
  if (id == "divisibility") return divisibility_check(n, m);
  return hH_check(id, n);
}

}  // namespace qrs
