#include "qrs/conjectures.hpp"

#include "qrs/limits.hpp"
#include "qrs/qfun.hpp"
#include "qrs/rogers.hpp"

namespace qrs {

Conjecture conjecture_from_name(const std::string& name) {
  if (name == "binary") return Conjecture::binary;
  if (name == "prime") return Conjecture::prime;
  if (name == "cofactor") return Conjecture::cofactor;
  throw UnknownIdentity("unknown conjecture: " + name);
}

std::string conjecture_name(Conjecture c) {
  switch (c) {
    case Conjecture::binary: return "binary";
    case Conjecture::prime: return "prime";
    case Conjecture::cofactor: return "cofactor";
  }
  return "";
}

namespace {

// Divisors here are products of (1 -+ q^a), so their leading coefficient is +-1.
UPoly remainder(const UPoly& a, const UPoly& d) {
  const UPoly monic = d.coeff(d.degree()) < 0 ? -d : d;
  return rem_monic(a, monic);
}

ScanResult divide(Conjecture c, Json params, UPoly target, UPoly divisor) {
  ScanResult r;
  r.conjecture = c;
  r.params = std::move(params);
  r.holds = try_divexact(target, divisor, r.witness);
  if (!r.holds) r.witness = remainder(target, divisor);
  r.target = std::move(target);
  r.divisor = std::move(divisor);
  return r;
}

UPoly at_s(int n, HalfInt base, int sign, HalfInt e) { return rs(n, base).subst(Var::s, UPoly::q_pow(e, sign)).to_upoly(); }

}  // namespace

ScanResult binary_tuple(int n, int m, int k) {
  if (n < 0 || m < 0 || k < 0 || k > 20) throw std::invalid_argument("binary scan needs n, m >= 0 and 0 <= k <= 20");
  return divide(Conjecture::binary, {{"n", n}, {"m", m}, {"k", k}}, at_s(n, 1 << k, -1, m),
                q_pochhammer(1, 1, 2, (n + 1) / 2));
}

ScanResult prime_tuple(long p, int n, int m) {
  if (n < 0 || m < 0) throw std::invalid_argument("prime scan needs n, m >= 0");
  padic(p, 1);
  UPoly divisor(1);
  for (int j = 1; j <= (n + 1) / 2; ++j) {
    const long odd = 2L * j - 1;
    divisor *= UPoly::one_minus(static_cast<int>(odd / padic(p, odd).V.get_si()));
  }
  return divide(Conjecture::prime, {{"p", p}, {"n", n}, {"m", m}}, at_s(n, static_cast<int>(p), -1, m), divisor);
}

ScanResult cofactor_tuple(long p, int m, int n) {
  if (n < 0 || m < 0) throw std::invalid_argument("cofactor scan needs n, m >= 0");
  const BigInt expected = c_p_minus1(p, m, n);
  UPoly divisor(1);
  for (int k = 1; k <= n; ++k) divisor *= UPoly::one_minus(static_cast<int>(k / padic(p, k).V.get_si()), -1);
  ScanResult r = divide(Conjecture::cofactor, {{"p", p}, {"m", m}, {"n", n}}, at_s(n, static_cast<int>(2 * p), 1, 2 * m + 1),
                        divisor);
  r.expected_at_minus_one = expected;
  if (r.holds) {
    r.at_one = r.witness.eval_q(1);
    r.at_minus_one = r.witness.eval_q(-1);
    r.holds = r.at_one == 1 && r.at_minus_one == r.expected_at_minus_one;
  }
  return r;
}

ScanResult binary_overreach_tuple(int n, int m, int k) {
  ScanResult r = binary_tuple(n, m, k);
  UPoly divisor = r.divisor * UPoly::one_minus(2 * ((n + 1) / 2) + 1);
  ScanResult o = divide(Conjecture::binary, r.params, std::move(r.target), std::move(divisor));
  o.params["control"] = "overreach";
  return o;
}

Json to_json(const ScanResult& r) {
  Json j = {{"conjecture", conjecture_name(r.conjecture)},
            {"params", r.params},
            {"verdict", r.holds ? "holds" : "fails"},
            {"divisor", to_json(r.divisor)},
            {"witness", to_json(r.witness)}};
  if (r.conjecture == Conjecture::cofactor) {
    j["evaluations"] = {{"q=1", to_json(r.at_one)},
                        {"q=-1", to_json(r.at_minus_one)},
                        {"expected_q=-1", to_json(r.expected_at_minus_one)}};
  } else if (r.holds && r.witness.is_q_poly()) {
    j["evaluations"] = {{"q=1", to_json(r.witness.eval_q(1))}, {"q=-1", to_json(r.witness.eval_q(-1))}};
  }
  return j;
}

Check to_check(const ScanResult& r) {
  Check c;
  c.id = conjecture_name(r.conjecture);
  c.params = r.params;
  c.pass = r.holds;
  c.computed = to_json(r.target);
  c.expected = to_json(r.divisor);
  c.witness = to_json(r.witness);
  const Json full = to_json(r);
  if (full.contains("evaluations")) c.extra["evaluations"] = full["evaluations"];
  return c;
}

Check pochhammer_split_check(int n) {
  UPoly lhs(1);
  for (int j = 0; j < n; ++j) lhs *= UPoly::one_minus(j + 1, j % 2 ? -1 : 1);
  const UPoly rhs = q_pochhammer(1, 1, 2, (n + 1) / 2) * q_pochhammer(-1, 2, 2, n / 2);
  return compare("pochhammer-split", {{"n", n}}, RatFunc(lhs), RatFunc(rhs));
}

}  // namespace qrs
