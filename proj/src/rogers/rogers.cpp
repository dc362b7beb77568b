#include "qrs/rogers.hpp"

#include "qrs/qfun.hpp"

#include <map>
#include <mutex>

namespace qrs {

namespace {

const ZPoly kS = ZPoly::var(Var::s);

ZPoly rs_direct(int n, HalfInt base) {
  std::vector<ZPoly::Term> terms;
  for (int j = 0; j <= n; ++j) terms.emplace_back(Mono::var(Var::s, static_cast<unsigned>(j)), gauss_binomial(n, j, base));
  return ZPoly::from_terms(std::move(terms));
}

ZPoly step(int n, const ZPoly& prev, const ZPoly& prev2, HalfInt base) {
  return (1 + kS) * prev + (kS * prev2).mul_upoly(UPoly::q_pow(base * (n - 1)) - 1);
}

void check_degree(const ZPoly& p, int expected, const char* what) {
  const int d = p.is_zero() ? -1 : static_cast<int>(p.degree(Var::s));
  if (d != expected)
    throw DegreeMismatch(std::string(what) + ": expected s-degree " + std::to_string(expected) + ", got " +
                         std::to_string(d));
}

}  // namespace

const ZPoly& rs(int n, HalfInt base) {
  if (n < 0) throw std::invalid_argument("rs: negative index");
  static std::mutex mu;
  static std::map<std::pair<int, int>, ZPoly> memo;
  const auto key = std::make_pair(base.twice(), n);
  {
    std::lock_guard lock(mu);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  ZPoly value = rs_direct(n, base);
  if (n >= 1) {
    const ZPoly prev2 = n >= 2 ? rs(n - 2, base) : ZPoly();
    if (!(step(n, rs(n - 1, base), prev2, base) == value))
      throw IdentityViolated("rs: direct sum and recurrence disagree at n = " + std::to_string(n));
  }
  std::lock_guard lock(mu);
  return memo.emplace(key, std::move(value)).first->second;
}

ZPoly rs_bivariate(int n, HalfInt base) {
  std::vector<ZPoly::Term> terms;
  for (const auto& [m, c] : rs(n, base).terms()) {
    const unsigned k = m.exp(Var::s);
    terms.emplace_back(Mono(k, 0, static_cast<unsigned>(n) - k), c);
  }
  return ZPoly::from_terms(std::move(terms));
}

ZPoly rs_recurrence_step(int n, const ZPoly& prev, const ZPoly& prev2) {
  if (n < 1) throw std::invalid_argument("rs_recurrence_step: n must be positive");
  check_degree(prev, n - 1, "rs_recurrence_step prev");
  check_degree(prev2, n - 2, "rs_recurrence_step prev2");
  return step(n, prev, prev2, 1);
}

ZPoly rs_double_step(int n, const ZPoly& prev2, const ZPoly& prev4) {
  if (n < 2) throw std::invalid_argument("rs_double_step: n must be at least 2");
  check_degree(prev2, n - 2, "rs_double_step prev2");
  if (n >= 4) check_degree(prev4, n - 4, "rs_double_step prev4");
  const ZPoly lead = 1 + kS.mul_upoly(UPoly::one_minus(1, -1) * UPoly::q_pow(n - 2)) + kS * kS;
  // (1 - q^(n-3)) vanishes at n = 3, so r_{-1} never contributes.
  const ZPoly tail = n >= 4 ? (kS * kS * prev4).mul_upoly(UPoly::one_minus(n - 3) * UPoly::one_minus(n - 2)) : ZPoly();
  return lead * prev2 - tail;
}

std::vector<ZPoly> rs_by_recurrence(int n) {
  std::vector<ZPoly> r{ZPoly(1)};
  for (int k = 1; k <= n; ++k) r.push_back(rs_recurrence_step(k, r[k - 1], k >= 2 ? r[k - 2] : ZPoly()));
  return r;
}

std::vector<ZPoly> rs_by_double_step(int n) {
  std::vector<ZPoly> r{ZPoly(1), 1 + kS};
  for (int k = 2; k <= n; ++k) r.push_back(rs_double_step(k, r[k - 2], k >= 4 ? r[k - 4] : ZPoly()));
  r.resize(static_cast<size_t>(n + 1));
  return r;
}

const std::vector<std::pair<std::string, RsSpecial>>& rs_special_ids() {
  static const std::vector<std::pair<std::string, RsSpecial>> ids = {{"gauss-even", RsSpecial::gauss_even},
                                                                      {"gauss-odd", RsSpecial::gauss_odd},
                                                                      {"neg-q", RsSpecial::neg_q},
                                                                      {"q-base-q2", RsSpecial::q_base_q2}};
  return ids;
}

namespace {

struct SpecialSides {
  UPoly computed;
  UPoly closed;
};

SpecialSides special_sides(RsSpecial id, int n) {
  switch (id) {
    case RsSpecial::gauss_even:
      return {rs(2 * n).subst(Var::s, -1).to_upoly(), q_pochhammer(1, 1, 2, n)};
    case RsSpecial::gauss_odd:
      return {rs(2 * n + 1).subst(Var::s, -1).to_upoly(), UPoly()};
    case RsSpecial::neg_q:
      return {rs(n).subst(Var::s, -UPoly::q_pow(1)).to_upoly(), q_pochhammer(1, 1, 2, (n + 1) / 2)};
    case RsSpecial::q_base_q2:
      return {rs(n, 2).subst(Var::s, UPoly::q_pow(1)).to_upoly(), q_pochhammer(-1, 1, 1, n)};
  }
  throw std::logic_error("unreachable");
}

std::string special_name(RsSpecial id) {
  for (const auto& [name, v] : rs_special_ids())
    if (v == id) return name;
  return "?";
}

}  // namespace

UPoly rs_special_value(RsSpecial id, int n) {
  const SpecialSides sides = special_sides(id, n);
  if (!(sides.computed == sides.closed))
    throw IdentityViolated("rs special value " + special_name(id) + " fails at n = " + std::to_string(n));
  return sides.closed;
}

Check rs_special_check(RsSpecial id, int n) {
  const SpecialSides sides = special_sides(id, n);
  return compare(special_name(id), {{"n", n}}, sides.computed, sides.closed);
}

namespace {

const RatFunc kSr = RatFunc::var(Var::s);

RatFunc q_rf(HalfInt k, long c = 1) { return RatFunc::q_pow(k, c); }

/// sum_k (-q;q)_k q^{shift(k)} s^k [n k]_{q^2} r_{n-k}(s^2, q^2)
RatFunc split_sum(int n, bool odd_power) {
  std::vector<RatFunc> terms;
  for (int k = 0; k <= n; ++k) {
    const int e = odd_power ? k * (k + 1) / 2 : k * (k - 1) / 2;
    const UPoly c = q_pochhammer(-1, 1, 1, k) * UPoly::q_pow(e) * gauss_binomial(n, k, 2);
    terms.emplace_back(rs(n - k, 2).stretch(Var::s, 2).mul_mono(Mono::var(Var::s, static_cast<unsigned>(k))).mul_upoly(c));
  }
  return RatFunc::sum(terms);
}

/// sum_k s^{2k} (-q/s; q^2)_k (-q^a s; q^2)_{n+extra-k} [n k]_{q^2}
RatFunc pochhammer_sum(int n, int a, int extra) {
  std::vector<RatFunc> terms;
  const RatFunc neg_q_over_s = q_rf(1, -1) / kSr;
  for (int k = 0; k <= n; ++k)
    terms.push_back(kSr.pow(2 * k) * q_pochhammer(neg_q_over_s, 2, k) *
                    q_pochhammer(q_rf(a, -1) * kSr, 2, n + extra - k) * RatFunc(gauss_binomial(n, k, 2)));
  return RatFunc::sum(terms);
}

Check both(Check c, const RatFunc& second_computed, const RatFunc& second_expected, const char* label) {
  const bool ok = second_computed == second_expected;
  c.extra[label] = ok;
  if (!ok) {
    c.pass = false;
    c.witness = Json{{label, to_json(second_computed - second_expected)}};
  }
  return c;
}

using ExpansionFn = Check (*)(int);

Check exp_r2n_split(int n) { return compare("r2n-split", {{"n", n}}, rs(2 * n), split_sum(n, false)); }

Check exp_r2n_split_mutated(int n) {
  return compare("r2n-split-mutated", {{"n", n}}, rs(2 * n), split_sum(n, true));
}

Check exp_r2n1_split(int n) { return compare("r2n1-split", {{"n", n}}, rs(2 * n + 1), (1 + kSr) * split_sum(n, true)); }

Check exp_r2n_pochhammer(int n) { return compare("r2n-pochhammer", {{"n", n}}, rs(2 * n), pochhammer_sum(n, 0, 0)); }

Check exp_r2n1_pochhammer(int n) {
  const RatFunc first = pochhammer_sum(n, 0, 1);
  Check c = compare("r2n1-pochhammer", {{"n", n}}, rs(2 * n + 1), first);
  return both(std::move(c), first, (1 + kSr) * pochhammer_sum(n, 2, 0), "second_form");
}

Check exp_rq2_alternating(int n) {
  std::vector<RatFunc> terms;
  for (int j = 0; 2 * j <= n; ++j) {
    const UPoly c = UPoly::q_pow(j * j, j % 2 ? -1 : 1) * q_pochhammer(1, 1, 2, j) * gauss_binomial(n, 2 * j, 1);
    terms.emplace_back(rs(n - 2 * j).mul_mono(Mono::var(Var::s, static_cast<unsigned>(j))).mul_upoly(c));
  }
  return compare("rq2-alternating", {{"n", n}}, rs(n, 2), RatFunc::sum(terms));
}

Check exp_rq2_pochhammer(int n) {
  std::vector<RatFunc> terms;
  const RatFunc neg_inv_s = RatFunc(-1) / kSr;
  for (int j = 0; 2 * j <= n; ++j) {
    const int r = n - 2 * j;
    terms.push_back(RatFunc(gauss_binomial(n, 2 * j, 1) * q_pochhammer(1, 1, 2, j)) *
                    q_pochhammer(q_rf(1) * kSr, 2, j) * kSr.pow(r) * q_pochhammer(neg_inv_s, 1, r));
  }
  return compare("rq2-pochhammer", {{"n", n}}, rs(n, 2), RatFunc::sum(terms));
}

RatFunc inverse_sum(int N) {
  std::vector<RatFunc> terms;
  for (int k = 0; k <= N; ++k)
    terms.push_back(q_pochhammer(-kSr, 1, k) * RatFunc(rs(N - k, 2).mul_upoly(gauss_binomial(N, k, 1))) *
                    RatFunc(k % 2 ? -1 : 1));
  return RatFunc::sum(terms);
}

Check exp_rq2_inverse(int n) {
  const RatFunc closed = RatFunc(q_pochhammer(1, 1, 2, n)) * q_pochhammer(q_rf(1) * kSr, 2, n);
  Check c = compare("rq2-inverse", {{"n", n}}, inverse_sum(2 * n), closed);
  return both(std::move(c), inverse_sum(2 * n + 1), 0, "odd_vanishes");
}

Check exp_recurrence_step(int n) {
  return compare("recurrence-step", {{"n", n}}, rs_by_recurrence(n)[static_cast<size_t>(n)], rs_direct(n, 1));
}

Check exp_recurrence_double_step(int n) {
  return compare("recurrence-double-step", {{"n", n}}, rs_by_double_step(n)[static_cast<size_t>(n)], rs_direct(n, 1));
}

const std::vector<std::pair<std::string, ExpansionFn>>& expansion_table() {
  static const std::vector<std::pair<std::string, ExpansionFn>> table = {
      {"r2n-split", exp_r2n_split},
      {"r2n1-split", exp_r2n1_split},
      {"r2n-pochhammer", exp_r2n_pochhammer},
      {"r2n1-pochhammer", exp_r2n1_pochhammer},
      {"rq2-alternating", exp_rq2_alternating},
      {"rq2-pochhammer", exp_rq2_pochhammer},
      {"rq2-inverse", exp_rq2_inverse},
      {"recurrence-step", exp_recurrence_step},
      {"recurrence-double-step", exp_recurrence_double_step},
      {"shift", rs_shift_identity},
      {"hermite", hermite_bridge},
      {"r2n-split-mutated", exp_r2n_split_mutated},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& rs_expansion_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> r;
    for (const auto& [name, fn] : expansion_table())
      if (!name.ends_with("-mutated")) r.push_back(name);
    return r;
  }();
  return ids;
}

const std::vector<std::string>& rs_negative_controls() {
  static const std::vector<std::string> ids = {"r2n-split-mutated"};
  return ids;
}

Check rs_check(const std::string& id, int n) {
  for (const auto& [name, special] : rs_special_ids())
    if (name == id) return rs_special_check(special, n);
  return rs_expansion(id, n);
}

Check rs_expansion(const std::string& id, int n) {
  for (const auto& [name, fn] : expansion_table())
    if (name == id) return fn(n);
  throw UnknownIdentity("unknown Rogers-Szego identity: " + id);
}

Check rs_shift_identity(int n) {
  const ZPoly x = ZPoly::var(Var::x);
  const ZPoly& r = rs(n);
  const ZPoly lhs = r.subst(Var::s, x.mul_mono(Mono(), 4));
  const ZPoly rhs = (1 - x.mul_mono(Mono(), 2)) * r.subst(Var::s, x.mul_mono(Mono(), 2)) +
                    (x * r.subst(Var::s, x)).mul_mono(Mono(), 2 * n + 2);
  return compare("shift", {{"n", n}}, lhs, rhs);
}

Check hermite_bridge(int n) {
  // H_k = s^{-k} r_k(s^2, q) and 2x = s + 1/s.
  auto H = [](int k) { return RatFunc(rs(k).stretch(Var::s, 2)) / kSr.pow(k); };
  const RatFunc two_x = kSr + RatFunc(1) / kSr;
  const RatFunc lhs = two_x * H(n);
  const RatFunc rhs = H(n + 1) + (n >= 1 ? RatFunc(UPoly::one_minus(n)) * H(n - 1) : RatFunc(0));
  // Cleared by s^{n+1}, both sides must be polynomials.
  const RatFunc clear = kSr.pow(n + 1);
  Check c = compare("hermite", {{"n", n}}, lhs * clear, rhs * clear);
  if (!(lhs * clear).is_polynomial() || !(rhs * clear).is_polynomial()) c.pass = false;
  return c;
}

}  // namespace qrs
