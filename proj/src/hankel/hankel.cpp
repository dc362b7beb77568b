#include "qrs/hankel.hpp"

#include "qrs/normalized.hpp"
#include "qrs/qfun.hpp"
#include "qrs/rogers.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>

namespace qrs {

namespace {

const RatFunc kS = RatFunc::var(Var::s);
const RatFunc kT = RatFunc::var(Var::t);

RatFunc qp(HalfInt k, long c = 1) { return RatFunc::q_pow(k, c); }

long choose2(long n) { return n * (n - 1) / 2; }

}  // namespace

Family family_from_name(const std::string& name) {
  for (Family f : all_families())
    if (family_name(f) == name) return f;
  throw UnknownFamily("unknown moment family: " + name);
}

std::string family_name(Family f) {
  switch (f) {
    case Family::rs: return "rs";
    case Family::f: return "f";
    case Family::h: return "h";
    case Family::H: return "H";
    case Family::F_even: return "F-even";
    case Family::F_odd: return "F-odd";
    case Family::F: return "F";
  }
  return "";
}

const std::vector<Family>& all_families() {
  static const std::vector<Family> v = {Family::rs, Family::f, Family::h, Family::H, Family::F_even, Family::F_odd, Family::F};
  return v;
}

RatFunc moment(Family f, int n) {
  switch (f) {
    case Family::rs: return RatFunc(rs(n));
    case Family::f: return f_norm(n);
    case Family::h: return h_general(n);
    case Family::H: return H_general(n);
    case Family::F_even: return F_norm(2 * n);
    case Family::F_odd: return F_norm(2 * n + 1);
    case Family::F: return F_norm(n);
  }
  throw UnknownFamily("unknown moment family");
}

namespace {

RatFunc h_sigma(int n, const RatFunc& t) {
  return qp(n) * (1 + kS) * (1 + qp(n - 1) * (1 + qp(1)) * t - qp(2 * n) * t) /
         ((1 + qp(2 * n - 1) * t) * (1 + qp(2 * n + 1) * t));
}

RatFunc h_tau(int n, const RatFunc& t) {
  return -qp(n) * (1 + qp(n) * t) * (1 - qp(n + 1)) * (kS - qp(2 * n + 1) * t) * (1 - qp(2 * n + 1) * kS * t) /
         ((1 + qp(2 * n) * t) * (1 + qp(2 * n + 1) * t).pow(2) * (1 + qp(2 * n + 2) * t));
}

RatFunc H_sigma(int n, const RatFunc& t) {
  const RatFunc t2 = t * t;
  const RatFunc a = (1 + kS * kS) * qp(2) * (1 - qp(2 * n - 1) * t2 - qp(2 * n - 3) * t2 + qp(4 * n - 1) * t2);
  const RatFunc b = kS * t * (1 + qp(1)) * (1 - qp(2 * n) - qp(2 * n + 2) + qp(4 * n - 1) * t2);
  return qp(2 * n - 2) * (a + b) / ((1 - qp(4 * n + 1) * t2) * (1 - qp(4 * n - 3) * t2));
}

RatFunc H_tau(int n, const RatFunc& t) {
  const RatFunc t2 = t * t;
  const RatFunc tau0 = -qp(2 * n) * (1 - qp(2 * n - 1) * t2) * (1 - qp(2 * n + 2)) /
                       ((1 - qp(4 * n - 1) * t2) * (1 - qp(4 * n + 1) * t2).pow(2) * (1 - qp(4 * n + 3) * t2));
  return tau0 * (kS - qp(2 * n) * t) * (kS - qp(2 * n + 1) * t) * (1 - qp(2 * n) * kS * t) *
         (1 - qp(2 * n + 1) * kS * t);
}

RatFunc F_sigma(int n) {
  const int k = n / 2;
  RatFunc u, v;
  if (n % 2 == 0) {
    u = qp(2 * k) * (1 - qp(2 * k - 1) + qp(2 * k + 1) - qp(4 * k + 1));
    v = (1 - qp(4 * k - 1)) * (1 - qp(2 * k + 1)) * (1 - qp(2 * k));
  } else {
    u = qp(2 * k + 2) * (1 - qp(4 * k + 1) + qp(2 * k - 1) - qp(2 * k + 1));
    v = (1 - qp(4 * k + 3)) * (1 - qp(2 * k + 1)) * (1 - qp(2 * k));
  }
  const RatFunc sign = n % 2 ? -1 : 1;
  return sign * ((1 - kS).pow(2) * u + kS * v) / ((1 - kS) * (1 - qp(2 * n - 1)) * (1 - qp(2 * n + 1)));
}

RatFunc F_tau(int n) {
  const int k = n / 2;
  if (n % 2 == 0)
    return -qp(4 * k + 1) * (1 - kS * qp(-2 * k)) * (1 - kS * qp(-2 * k - 1)) * (1 - qp(2 * k) * kS) *
           (1 - qp(2 * k + 1) * kS) / ((1 - kS).pow(2) * (1 - qp(4 * k + 1)).pow(2));
  return (1 - kS).pow(2) * qp(2 * k + 2) * (1 - qp(2 * k + 1)) * (1 - qp(2 * k + 2)) / (1 - qp(4 * k + 3)).pow(2);
}

}  // namespace

RecSystem sigma_tau(Family f) {
  switch (f) {
    case Family::rs:
      return {f, [](int n) { return qp(n) * (1 + kS); }, [](int n) { return qp(n) * kS * (qp(n + 1) - 1); }};
    case Family::f:
      return {f, [](int n) { return h_sigma(n, 1); }, [](int n) { return h_tau(n, 1); }};
    case Family::h:
      return {f, [](int n) { return h_sigma(n, kT); }, [](int n) { return h_tau(n, kT); }};
    case Family::H:
      return {f, [](int n) { return H_sigma(n, kT); }, [](int n) { return H_tau(n, kT); }};
    case Family::F_even:
      return {f, [](int n) { return H_sigma(n, 1); }, [](int n) { return H_tau(n, 1); }};
    case Family::F_odd:
      // F(2n+1, s, q) = (1 - s)/(1 - q) H(n, s, q, q).
      return {f, [](int n) { return H_sigma(n, qp(1)); }, [](int n) { return H_tau(n, qp(1)); },
              (1 - kS) / (1 - qp(1))};
    case Family::F:
      return {f, F_sigma, F_tau};
  }
  throw UnknownFamily("unknown moment family");
}

namespace {

// Least common multiple of the factored denominators, as a polynomial.
ZPoly den_lcm(const std::vector<RatFunc>& row) {
  BigInt den_int = 1;
  Mono mono;
  int du = 0;
  std::vector<std::pair<ZPoly, int>> factors;
  for (const RatFunc& e : row) {
    if (e.is_zero()) continue;
    mpz_lcm(den_int.get_mpz_t(), den_int.get_mpz_t(), e.den_int().get_mpz_t());
    mono = Mono::lcm(mono, e.den_mono());
    du = std::max(du, e.den_u());
    for (const auto& f : e.den_factors()) {
      auto it = std::find_if(factors.begin(), factors.end(), [&](const auto& g) { return g.first == f.poly; });
      if (it == factors.end())
        factors.emplace_back(f.poly, f.mult);
      else
        it->second = std::max(it->second, f.mult);
    }
  }
  ZPoly l(mono, UPoly::monomial(den_int, du));
  for (const auto& [p, m] : factors) l *= p.pow(static_cast<unsigned>(m));
  return l;
}

}  // namespace

RatFunc determinant(const std::vector<std::vector<RatFunc>>& m) {
  const size_t n = m.size();
  if (n == 0) return 1;
  std::vector<std::vector<ZPoly>> a(n, std::vector<ZPoly>(n));
  RatFunc scale = 1;
  for (size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw std::invalid_argument("determinant needs a square matrix");
    const ZPoly l = den_lcm(m[i]);
    const RatFunc lr(l);
    for (size_t j = 0; j < n; ++j) a[i][j] = (m[i][j] * lr).to_zpoly();
    scale *= lr;
  }
  // Bareiss: after step k every entry below and right of the pivot is a
  // (k+1)-minor, so the division by the previous pivot is exact.
  ZPoly prev(1);
  bool negate = false;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      size_t p = k + 1;
      while (p < n && a[p][k].is_zero()) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      negate = !negate;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) a[i][j] = divexact(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev);
      a[i][k] = ZPoly();
    }
    prev = a[k][k];
  }
  RatFunc det(a[n - 1][n - 1]);
  if (negate) det = -det;
  return det / scale;
}

RatFunc hankel_det(const std::vector<RatFunc>& moments, int n) {
  if (n < 0) return 1;
  if (static_cast<int>(moments.size()) < 2 * n + 1) throw std::invalid_argument("hankel_det needs 2n+1 moments");
  std::vector<std::vector<RatFunc>> m(static_cast<size_t>(n + 1), std::vector<RatFunc>(static_cast<size_t>(n + 1)));
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) m[static_cast<size_t>(i)][static_cast<size_t>(j)] = moments[static_cast<size_t>(i + j)];
  return determinant(m);
}

namespace {

std::vector<RatFunc> moments_upto(Family f, int top) {
  std::vector<RatFunc> v;
  for (int k = 0; k <= top; ++k) v.push_back(moment(f, k));
  return v;
}

}  // namespace

RatFunc hankel_det(Family f, int n) { return hankel_det(moments_upto(f, 2 * n), n); }

RatFunc tau_product(const RecSystem& rec, int n) {
  std::vector<RatFunc> factors = {rec.scale.pow(n + 1)};
  for (int j = 0; j < n; ++j) factors.push_back(rec.tau(j).pow(n - j));
  return RatFunc::product(factors);
}

bool has_closed_form(Family f) { return f != Family::h && f != Family::H; }

namespace {

RatFunc poch_rf(const RatFunc& arg, HalfInt base, int n) { return q_pochhammer(arg, base, n); }

RatFunc closed_rs(int n) {
  std::vector<RatFunc> f = {qp(static_cast<int>(n * (n + 1L) * (n - 1) / 6)), (-kS).pow(static_cast<int>(choose2(n + 1)))};
  for (int j = 1; j <= n; ++j) f.emplace_back(q_pochhammer(1, 1, 1, j));
  return RatFunc::product(f);
}

RatFunc closed_f(int n) {
  std::vector<RatFunc> f = {qp(n * n * (n + 1) / 2)};
  for (int j = 0; j <= n; ++j) {
    f.push_back(poch_rf(kS * qp(1 - 2 * j), 2, 2 * j));
    f.emplace_back(q_pochhammer(1, 1, 1, j));
    f.push_back(q_pochhammer_inv(-1, 1, 1, j + n));
  }
  return RatFunc::product(f);
}

RatFunc closed_F_even(int n) {
  std::vector<RatFunc> f = {tau_product(sigma_tau(Family::F_even), n).subst(Var::s, 0)};
  for (int j = 0; j <= n; ++j)
    f.push_back(((kS - qp(2 * j)) * (kS - qp(2 * j + 1)) * (kS - qp(-2 * j)) * (kS - qp(-2 * j - 1))).pow(n - j));
  return RatFunc::product(f);
}

RatFunc closed_F_odd(int n) {
  std::vector<RatFunc> f = {tau_product(sigma_tau(Family::F_odd), n).subst(Var::s, 0), (1 - kS).pow(n + 1)};
  for (int j = 0; j <= n; ++j)
    f.push_back(
        ((kS - qp(2 * j + 2)) * (kS - qp(2 * j + 1)) * (kS - qp(-2 * j - 2)) * (kS - qp(-2 * j - 1))).pow(n - j));
  return RatFunc::product(f);
}

RatFunc closed_F_base(int n, bool printed) {
  long e = static_cast<long>(n) * n;
  long inner = 0;
  for (int j = 1; j <= n - 1; ++j) inner += j / 2;
  e += n * inner;
  const long sign_exp = (n + 1L) * (n + 1L) / 4;
  std::vector<RatFunc> f = {qp(static_cast<int>(e), sign_exp % 2 ? -1 : 1)};
  for (int j = 0; 2 * j <= n - 1; ++j) {
    f.push_back((1 - qp(4 * j + 1)).pow(-(printed ? 2 * n - 2 * j : 2 * n - 4 * j)));
    f.push_back(((1 - qp(2 * j + 1)) * (1 - qp(2 * j + 2)) / (1 - qp(4 * j + 3)).pow(2)).pow(n - 1 - 2 * j));
  }
  return RatFunc::product(f);
}

RatFunc closed_F(int n, bool printed = false) {
  std::vector<RatFunc> f = {closed_F_base(n, printed), (1 - kS).pow(-2 * ((n + 1) / 2))};
  for (int j = 0; j <= n / 2; ++j)
    f.push_back(((1 - qp(2 * j) * kS) * (1 - qp(2 * j + 1) * kS) * (1 - kS * qp(-2 * j)) * (1 - kS * qp(-2 * j - 1)))
                    .pow(n - 2 * j));
  return RatFunc::product(f);
}

}  // namespace

RatFunc closed_hankel(Family f, int n) {
  switch (f) {
    case Family::rs: return closed_rs(n);
    case Family::f: return closed_f(n);
    case Family::F_even: return closed_F_even(n);
    case Family::F_odd: return closed_F_odd(n);
    case Family::F: return closed_F(n);
    default: throw UnknownFamily("no closed Hankel form for family " + family_name(f));
  }
}

Check hankel_check(Family f, int n) {
  const RatFunc det = hankel_det(f, n);
  const RatFunc prod = tau_product(sigma_tau(f), n);
  Check c;
  c.id = "det-" + family_name(f);
  c.params = {{"n", n}};
  c.computed = to_json(det);
  c.expected = to_json(prod);
  bool ok = det == prod;
  c.extra["product_agrees"] = ok;
  if (has_closed_form(f)) {
    const RatFunc closed = closed_hankel(f, n);
    const bool closed_ok = det == closed;
    c.extra["closed"] = to_json(closed);
    c.extra["closed_agrees"] = closed_ok;
    ok = ok && closed_ok;
  }
  c.pass = ok;
  if (!ok) c.witness = to_json(det - prod);
  return c;
}

std::vector<std::vector<RatFunc>> moment_table(const RecSystem& rec, int n_max) {
  std::vector<std::vector<RatFunc>> a(static_cast<size_t>(n_max + 1));
  a[0] = {RatFunc(1)};
  std::vector<RatFunc> sigma, tau;
  for (int j = 0; j <= n_max; ++j) {
    sigma.push_back(rec.sigma(j));
    tau.push_back(rec.tau(j));
  }
  for (int n = 1; n <= n_max; ++n) {
    const auto& prev = a[static_cast<size_t>(n - 1)];
    auto at = [&](int j) { return j >= 0 && j < static_cast<int>(prev.size()) ? prev[static_cast<size_t>(j)] : RatFunc(0); };
    auto& row = a[static_cast<size_t>(n)];
    for (int j = 0; j <= n; ++j) {
      std::vector<RatFunc> terms;
      if (!at(j - 1).is_zero()) terms.push_back(at(j - 1));
      if (!at(j).is_zero()) terms.push_back(sigma[static_cast<size_t>(j)] * at(j));
      if (!at(j + 1).is_zero()) terms.push_back(tau[static_cast<size_t>(j)] * at(j + 1));
      row.push_back(RatFunc::sum(terms));
    }
  }
  return a;
}

namespace {

// Guessed entry a(n, k); empty when the family has no guess.
std::optional<RatFunc> guessed_entry(Family f, int n, int k) {
  switch (f) {
    case Family::rs: return RatFunc(rs(n - k)) * RatFunc(gauss_binomial(n, k));
    case Family::f: return RatFunc(gauss_binomial(n, k)) * h_general(n - k).subst(Var::t, qp(2 * k));
    case Family::h: return RatFunc(gauss_binomial(n, k)) * h_general(n - k).subst(Var::t, qp(2 * k) * kT);
    case Family::H: return RatFunc(gauss_binomial(n, k, 2)) * H_general(n - k).subst(Var::t, qp(2 * k) * kT);
    case Family::F_even: return RatFunc(gauss_binomial(n, k, 2)) * H_general(n - k).subst(Var::t, qp(2 * k));
    case Family::F_odd: return RatFunc(gauss_binomial(n, k, 2)) * H_general(n - k).subst(Var::t, qp(2 * k + 1));
    case Family::F: return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

Check moment_identity_check(Family f, int n) {
  const RecSystem rec = sigma_tau(f);
  const auto table = moment_table(rec, n);
  Check c;
  c.id = "moments-" + family_name(f);
  c.params = {{"n", n}};
  c.pass = true;
  Json bad = Json::array();
  for (int i = 0; i <= n; ++i) {
    const auto& row = table[static_cast<size_t>(i)];
    if (!(rec.scale * row[0] == moment(f, i))) {
      c.pass = false;
      bad.push_back({{"n", i}, {"k", 0}, {"kind", "moment"}});
    }
    for (int k = 0; k <= i; ++k) {
      const auto guess = guessed_entry(f, i, k);
      if (guess && !(row[static_cast<size_t>(k)] == *guess)) {
        c.pass = false;
        bad.push_back({{"n", i}, {"k", k}, {"kind", "entry"}});
      }
    }
  }
  c.computed = to_json(table[static_cast<size_t>(n)][0]);
  c.expected = to_json(moment(f, n) / rec.scale);
  if (!c.pass) c.witness = bad;
  return c;
}

namespace {

XPoly x_mul_linear(const XPoly& p, const RatFunc& root) {
  // p * (x - root)
  XPoly r(p.size() + 1);
  for (size_t i = 0; i < p.size(); ++i) {
    r[i + 1] += p[i];
    r[i] -= p[i] * root;
  }
  return r;
}

XPoly x_add(const XPoly& a, const XPoly& b) {
  XPoly r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

XPoly x_scale(const XPoly& a, const RatFunc& k) {
  XPoly r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * k;
  return r;
}

XPoly x_mul(const XPoly& a, const XPoly& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::vector<RatFunc>> terms(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      if (!a[i].is_zero() && !b[j].is_zero()) terms[i + j].push_back(a[i] * b[j]);
  XPoly r;
  for (const auto& t : terms) r.push_back(RatFunc::sum(t));
  return r;
}

bool x_equal(const XPoly& a, const XPoly& b) {
  const size_t n = std::max(a.size(), b.size());
  for (size_t i = 0; i < n; ++i) {
    const RatFunc ai = i < a.size() ? a[i] : RatFunc(0);
    const RatFunc bi = i < b.size() ? b[i] : RatFunc(0);
    if (!(ai == bi)) return false;
  }
  return true;
}

Json x_json(const XPoly& p) {
  Json j = Json::array();
  for (const auto& c : p) j.push_back(to_json(c));
  return j;
}

// prod_{i<j} (x - q^(step*i)).
XPoly falling(int j, int step) {
  XPoly p = {RatFunc(1)};
  for (int i = 0; i < j; ++i) p = x_mul_linear(p, qp(step * i));
  return p;
}

XPoly monomial_x(int k, const RatFunc& c) {
  XPoly p(static_cast<size_t>(k + 1));
  p[static_cast<size_t>(k)] = c;
  return p;
}

XPoly explicit_h(int n, int form, const RatFunc& t) {
  XPoly sum;
  for (int j = 0; j <= n; ++j) {
    if (form == 0) {
      const RatFunc h = h_general(j).subst_q(-1).subst(Var::t, qp(2 * n) * t);
      const RatFunc c = qp(static_cast<int>(choose2(j)), j % 2 ? -1 : 1) * RatFunc(gauss_binomial(n, j)) * h;
      sum = x_add(sum, monomial_x(n - j, c));
    } else {
      std::vector<RatFunc> f = {qp(static_cast<int>(choose2(n - j))), RatFunc(gauss_binomial(n, j))};
      for (int i = 0; i < n - j; ++i) f.push_back(qp(2 * j + 2 * i + 1) * t - kS);
      f.push_back(poch_rf(-qp(n + j) * t, 1, n - j).inverse());
      sum = x_add(sum, x_scale(falling(j, 1), RatFunc::product(f)));
    }
  }
  return sum;
}

XPoly explicit_H(int n, int form, const RatFunc& t, bool printed_sign = false) {
  XPoly sum;
  for (int j = 0; j <= n; ++j) {
    if (form == 0) {
      const RatFunc h = H_general(j).subst_q(-1).subst(Var::t, qp(2 * n - 1) * t);
      const RatFunc c = qp(static_cast<int>(2 * choose2(j)), j % 2 ? -1 : 1) * RatFunc(gauss_binomial(n, j, 2)) * h;
      sum = x_add(sum, monomial_x(n - j, c));
    } else {
      const long sign = (n - j) % 2 && !printed_sign ? -1 : 1;
      std::vector<RatFunc> f = {qp(static_cast<int>(2 * choose2(n - j)), sign), RatFunc(gauss_binomial(n, j, 2))};
      for (int i = 0; i < 2 * n - 2 * j; ++i) f.push_back(kS - qp(2 * j + i) * t);
      f.push_back(poch_rf(qp(2 * n - 1 + 2 * j) * t * t, 2, n - j).inverse());
      sum = x_add(sum, x_scale(falling(j, 2), RatFunc::product(f)));
    }
  }
  return sum;
}

}  // namespace

std::vector<XPoly> orth_polys(const RecSystem& rec, int n_max) {
  std::vector<XPoly> p = {{RatFunc(1)}};
  if (n_max >= 1) p.push_back({-rec.sigma(0), RatFunc(1)});
  for (int n = 2; n <= n_max; ++n)
    p.push_back(x_add(x_mul_linear(p[static_cast<size_t>(n - 1)], rec.sigma(n - 1)),
                      x_scale(p[static_cast<size_t>(n - 2)], -rec.tau(n - 2))));
  p.resize(static_cast<size_t>(n_max + 1));
  return p;
}

XPoly explicit_orth(Family f, int n, int form) {
  switch (f) {
    case Family::rs: {
      XPoly sum;
      for (int j = 0; j <= n; ++j) {
        const RatFunc sign = qp(static_cast<int>(choose2(j)), j % 2 ? -1 : 1) * RatFunc(gauss_binomial(n, j));
        if (form == 0)
          sum = x_add(sum, monomial_x(n - j, sign * RatFunc(rs(j)).subst_q(-1)));
        else
          sum = x_add(sum, x_scale(falling(n - j, 1), sign * kS.pow(j)));
      }
      return sum;
    }
    case Family::f: return explicit_h(n, form, 1);
    case Family::h: return explicit_h(n, form, kT);
    case Family::H: return explicit_H(n, form, kT);
    case Family::F_even: return explicit_H(n, form, 1);
    case Family::F_odd: return explicit_H(n, form, qp(1));
    case Family::F: break;
  }
  throw UnknownFamily("no explicit orthogonal polynomials for family " + family_name(f));
}

namespace {

// p_n from the bordered Hankel determinant, expanded along the x column.
XPoly bordered(const std::vector<RatFunc>& a, int n) {
  const RatFunc base = hankel_det(a, n - 1);
  XPoly p(static_cast<size_t>(n + 1));
  for (int i = 0; i <= n; ++i) {
    std::vector<std::vector<RatFunc>> minor;
    for (int r = 0; r <= n; ++r) {
      if (r == i) continue;
      std::vector<RatFunc> row;
      for (int c = 0; c < n; ++c) row.push_back(a[static_cast<size_t>(r + c)]);
      minor.push_back(std::move(row));
    }
    const RatFunc d = determinant(minor);
    p[static_cast<size_t>(i)] = ((i + n) % 2 ? -d : d) / base;
  }
  return p;
}

}  // namespace

Check orth_poly_check(Family f, int n) {
  const RecSystem rec = sigma_tau(f);
  const XPoly p = orth_polys(rec, n).back();
  Check c;
  c.id = "orth-" + family_name(f);
  c.params = {{"n", n}};
  c.computed = x_json(p);
  c.pass = true;
  if (f != Family::F) {
    for (int form = 0; form < 2; ++form) {
      const bool ok = x_equal(p, explicit_orth(f, n, form));
      c.extra["form" + std::to_string(form)] = ok;
      c.pass = c.pass && ok;
    }
  }
  if (n >= 1 && (n <= 3 || (f != Family::h && f != Family::H))) {
    const bool ok = x_equal(p, bordered(moments_upto(f, 2 * n - 1), n));
    c.extra["bordered"] = ok;
    c.pass = c.pass && ok;
  }
  return c;
}

Check orthogonality_check(Family f, int n) {
  const RecSystem rec = sigma_tau(f);
  const auto p = orth_polys(rec, n);
  std::vector<RatFunc> a;
  for (int k = 0; k <= 2 * n; ++k) a.push_back(moment(f, k) / rec.scale);
  auto functional = [&](const XPoly& x) {
    std::vector<RatFunc> terms;
    for (size_t k = 0; k < x.size(); ++k)
      if (!x[k].is_zero()) terms.push_back(x[k] * a[k]);
    return RatFunc::sum(terms);
  };
  Check c;
  c.id = "orthogonality-" + family_name(f);
  c.params = {{"n", n}};
  const XPoly& pn = p.back();
  c.pass = functional(pn) == RatFunc(n == 0 ? 1 : 0);
  Json bad = Json::array();
  for (int m = 0; m < n; ++m)
    if (!functional(x_mul(pn, p[static_cast<size_t>(m)])).is_zero()) {
      c.pass = false;
      bad.push_back(m);
    }
  // F(p_n^2) = tau(0) ... tau(n-1).
  std::vector<RatFunc> taus;
  for (int j = 0; j < n; ++j) taus.push_back(rec.tau(j));
  const RatFunc norm = functional(x_mul(pn, pn));
  const RatFunc expected = RatFunc::product(taus);
  c.computed = to_json(norm);
  c.expected = to_json(expected);
  c.pass = c.pass && norm == expected;
  if (!c.pass) c.witness = bad;
  return c;
}

RatFunc BigQJacobi::A(int n) const {
  auto Q = [&](int k) { return qp(base * k); };
  const RatFunc ab = a * b;
  return (1 - a * Q(n + 1)) * (1 - ab * Q(n + 1)) * (1 - c * Q(n + 1)) /
         ((1 - ab * Q(2 * n + 1)) * (1 - ab * Q(2 * n + 2)));
}

RatFunc BigQJacobi::C(int n) const {
  auto Q = [&](int k) { return qp(base * k); };
  const RatFunc ab = a * b;
  return -a * c * Q(n + 1) * (1 - Q(n)) * (1 - ab / c * Q(n)) * (1 - b * Q(n)) /
         ((1 - ab * Q(2 * n)) * (1 - ab * Q(2 * n + 1)));
}

namespace {

const RatFunc kU = RatFunc(UPoly::monomial(1, 1));

// Parameters of the functional whose moments are f(n, s^2, q) after scaling.
BigQJacobi jacobi_f() { return {-1 / (kS * kU), kS / kU, -kS / kU, 1}; }
BigQJacobi jacobi_F_even() { return {-1 / (qp(1) * kS * kS), -kS * kS / qp(2), -kS * kS / qp(1), 2}; }
BigQJacobi jacobi_F_odd() { return {-1 / (kS * kS), -kS * kS / qp(1), -kS * kS, 2}; }

RatFunc s_to(const RatFunc& r, const RatFunc& v) { return r.subst(Var::s, v); }

Check bridge(const std::string& id, int n, const BigQJacobi& J, const RatFunc& r, Family target, const RatFunc& s_image) {
  const RecSystem rec = sigma_tau(target);
  const RatFunc sigma = r * (1 - J.A(n) - J.C(n));
  const RatFunc tau = r * r * J.A(n) * J.C(n + 1);
  const RatFunc want_sigma = s_to(rec.sigma(n), s_image);
  const RatFunc want_tau = s_to(rec.tau(n), s_image);
  Check c;
  c.id = id;
  c.params = {{"n", n}};
  const bool ok_sigma = sigma == want_sigma;
  const bool ok_tau = tau == want_tau;
  c.extra = {{"sigma_agrees", ok_sigma}, {"tau_agrees", ok_tau}};
  c.pass = ok_sigma && ok_tau;
  c.computed = {{"sigma", to_json(sigma)}, {"tau", to_json(tau)}};
  c.expected = {{"sigma", to_json(want_sigma)}, {"tau", to_json(want_tau)}};
  return c;
}

}  // namespace

const std::vector<std::string>& jacobi_ids() {
  static const std::vector<std::string> ids = {"jacobi-f-product", "jacobi-f-sum",  "jacobi-f-bridge",
                                               "jacobi-F-even-product", "jacobi-F-even-sum",
                                               "jacobi-F-even-bridge", "jacobi-F-odd-bridge"};
  return ids;
}

Check jacobi_check(const std::string& id, int n) {
  const RatFunc s2 = kS * kS;
  if (id == "jacobi-f-product") {
    const BigQJacobi J = jacobi_f();
    const RatFunc want = qp(n + 1) * (1 + qp(n)) * (1 - qp(n + 1)) * (1 - qp(2 * n + 1) * s2) * (qp(2 * n + 1) - s2) /
                         (s2 * (1 + qp(2 * n)) * (1 + qp(2 * n + 1)).pow(2) * (1 + qp(2 * n + 2)));
    return compare(id, {{"n", n}}, J.A(n) * J.C(n + 1), want);
  }
  const bool printed = id.ends_with("-printed");
  const RatFunc sign = printed ? -1 : 1;
  if (id == "jacobi-f-sum" || id == "jacobi-f-sum-printed") {
    const BigQJacobi J = jacobi_f();
    const RatFunc want = sign * (1 + s2) / kS * qp(HalfInt::from_twice(2 * n + 1)) *
                         (1 + qp(n - 1) * (1 + qp(1)) - qp(2 * n)) / ((1 + qp(2 * n - 1)) * (1 + qp(2 * n + 1)));
    return compare(id, {{"n", n}}, J.A(n) + J.C(n) - 1, want);
  }
  if (id == "jacobi-f-bridge") return bridge(id, n, jacobi_f(), -kS / kU, Family::f, s2);
  if (id == "jacobi-F-even-product") {
    const BigQJacobi J = jacobi_F_even();
    const RatFunc want = -qp(2 * n + 2) * (1 - qp(2 * n - 1)) * (1 - qp(2 * n + 2)) /
                         ((1 - qp(4 * n - 1)) * (1 - qp(4 * n + 1)).pow(2) * (1 - qp(4 * n + 3))) * (s2 + qp(2 * n)) *
                         (s2 + qp(2 * n + 1)) * (1 + qp(2 * n) * s2) * (1 + qp(2 * n + 1) * s2) / s2.pow(2);
    return compare(id, {{"n", n}}, J.A(n) * J.C(n + 1), want);
  }
  if (id == "jacobi-F-even-sum" || id == "jacobi-F-even-sum-printed") {
    const BigQJacobi J = jacobi_F_even();
    const RatFunc want =
        -sign * qp(2 * n - 1) *
        ((1 + s2 * s2) * qp(2) * (1 - qp(2 * n - 1) - qp(2 * n - 3) + qp(4 * n - 1)) -
         s2 * (1 + qp(1)) * (1 - qp(2 * n) - qp(2 * n + 2) + qp(4 * n - 1))) /
        (s2 * (1 - qp(4 * n + 1)) * (1 - qp(4 * n - 3)));
    return compare(id, {{"n", n}}, 1 - J.A(n) - J.C(n), want);
  }
  if (id == "jacobi-F-even-bridge") return bridge(id, n, jacobi_F_even(), -s2 / qp(1), Family::F_even, -s2);
  if (id == "jacobi-F-odd-bridge") return bridge(id, n, jacobi_F_odd(), -s2 / qp(2), Family::F_odd, -s2);
  throw UnknownIdentity("unknown big q-Jacobi relation: " + id);
}

Check recurrence_vanishing_check(int m, int n) {
  if (m < 0 || n <= m) throw std::invalid_argument("recurrence_vanishing_check needs 0 <= m < n");
  std::vector<RatFunc> terms;
  for (int j = 0; j <= m + 1; ++j)
    terms.push_back(qp(static_cast<int>(choose2(j)), j % 2 ? -1 : 1) * RatFunc(gauss_binomial(m + 1, j)) *
                    f_norm(n - j).subst(Var::s, qp(2 * m + 1)));
  return compare("recurrence-vanishing", {{"m", m}, {"n", n}}, RatFunc::sum(terms), 0);
}

int vanishing_start(Family f, int m) {
  if (m < 0) throw std::invalid_argument("vanishing_start needs m >= 0");
  switch (f) {
    case Family::f: return m + 1;
    case Family::F: return m == 0 ? 2 : m % 2 ? m : m + 1;
    case Family::F_even: return m / 2 + 1;
    case Family::F_odd: return (m + 1) / 2;
    default: throw UnknownFamily("no vanishing statement for family " + family_name(f));
  }
}

Check vanishing_check(Family f, int m, int n) {
  const int start = vanishing_start(f, m);
  const RatFunc s = f == Family::f ? qp(2 * m + 1) : qp(m);
  std::vector<RatFunc> a;
  for (int k = 0; k <= 2 * n; ++k) a.push_back(moment(f, k).subst(Var::s, s));
  const RatFunc det = hankel_det(a, n);
  Check c;
  c.id = "vanish-" + family_name(f);
  c.params = {{"m", m}, {"n", n}};
  c.expected = n >= start ? "zero" : "nonzero";
  c.computed = to_json(det);
  c.pass = det.is_zero() == (n >= start);
  c.extra["vanishing_start"] = start;
  return c;
}

Check root_structure_check(Family f, int n) {
  if (f != Family::f && f != Family::F) throw UnknownFamily("no root statement for family " + family_name(f));
  const RatFunc det = hankel_det(f, n);
  Check c;
  c.id = "roots-" + family_name(f);
  c.params = {{"n", n}};
  c.expected = f == Family::f ? "roots q^(+-(2m+1))" : "roots q^(+-m)";
  if (det.is_zero() || !det.has_q_only_den()) {
    c.computed = to_json(det);
    return c;
  }
  ZPoly rest = det.num();
  const ZPoly s = ZPoly::var(Var::s);
  Json roots = Json::array();
  const int bound = 2 * static_cast<int>(rest.degree(Var::s)) + 4;
  for (int e = f == Family::f ? 1 : 0; e <= bound; e += f == Family::f ? 2 : 1) {
    const ZPoly q_e = UPoly::monomial(1, 2 * e);
    for (int sign : {1, -1}) {
      if (e == 0 && sign == -1) continue;
      // s - q^e for the root q^e, 1 - q^e s for q^-e.
      const ZPoly factor = sign == 1 ? s - q_e : 1 - s * q_e;
      int mult = 0;
      ZPoly quotient;
      while (try_divexact(rest, factor, quotient)) {
        rest = std::move(quotient);
        ++mult;
      }
      if (mult > 0) roots.push_back({{"exponent", sign * e}, {"multiplicity", mult}});
    }
  }
  c.computed = roots;
  c.pass = rest.degree(Var::s) == 0;
  if (!c.pass) c.witness = to_json(rest);
  return c;
}

Check tau_nonzero_check(Family f, int j_max) {
  const RecSystem rec = sigma_tau(f);
  Check c;
  c.id = "tau-nonzero-" + family_name(f);
  c.params = {{"n", j_max}};
  c.expected = "nonzero";
  c.pass = true;
  for (int j = 0; j <= j_max && c.pass; ++j)
    if (rec.tau(j).is_zero()) {
      c.pass = false;
      c.witness = j;
    }
  c.computed = c.pass ? "nonzero" : "zero";
  return c;
}

namespace {

Check spot(const std::string& id) {
  if (id == "spot-d1") return compare(id, {{"n", 1}}, hankel_det(Family::rs, 1), -kS * (1 - qp(1)));
  return compare(id, {{"n", 1}}, hankel_det(Family::F, 1), -(qp(1) - kS) * (1 - qp(1) * kS) / (1 - qp(1)).pow(2));
}

Check H_printed_sign(int n) {
  const XPoly p = orth_polys(sigma_tau(Family::H), n).back();
  const XPoly printed = explicit_H(n, 1, kT, true);
  Check c;
  c.id = "orth-H-printed-sign";
  c.params = {{"n", n}};
  c.pass = x_equal(p, printed);
  c.computed = x_json(printed);
  c.expected = x_json(p);
  return c;
}

Check F_printed_base(int n) {
  return compare("det-F-printed-base", {{"n", n}}, hankel_det(Family::F, n), closed_F(n, true));
}

Check tau_mutated(int n) {
  RecSystem rec = sigma_tau(Family::rs);
  rec.tau = [](int j) { return qp(j) * kS * (qp(j + 2) - 1); };
  return compare("det-rs-tau-mutated", {{"n", n}}, hankel_det(Family::rs, n), tau_product(rec, n));
}

}  // namespace

const std::vector<std::string>& hankel_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (Family f : all_families()) v.push_back("det-" + family_name(f));
    for (Family f : all_families()) v.push_back("moments-" + family_name(f));
    for (Family f : all_families()) v.push_back("orth-" + family_name(f));
    for (Family f : all_families()) v.push_back("orthogonality-" + family_name(f));
    for (const auto& j : jacobi_ids()) v.push_back(j);
    v.push_back("recurrence-vanishing");
    for (Family f : {Family::f, Family::F, Family::F_even, Family::F_odd}) v.push_back("vanish-" + family_name(f));
    v.push_back("spot-d1");
    v.push_back("spot-D1");
    v.push_back("roots-f");
    v.push_back("roots-F");
    for (Family f : all_families()) v.push_back("tau-nonzero-" + family_name(f));
    return v;
  }();
  return ids;
}

const std::vector<std::string>& hankel_negative_controls() {
  static const std::vector<std::string> ids = {"det-rs-tau-mutated", "det-F-printed-base",
                                               "orth-H-printed-sign", "jacobi-f-sum-printed",
                                               "jacobi-F-even-sum-printed"};
  return ids;
}

Check hankel_suite_check(const std::string& id, int n, int m) {
  auto suffix = [&](const std::string& prefix) -> std::optional<Family> {
    if (!id.starts_with(prefix)) return std::nullopt;
    return family_from_name(id.substr(prefix.size()));
  };
  if (id == "det-rs-tau-mutated") return tau_mutated(n);
  if (id == "det-F-printed-base") return F_printed_base(n);
  if (id == "orth-H-printed-sign") return H_printed_sign(n);
  if (id == "spot-d1" || id == "spot-D1") return spot(id);
  if (id == "recurrence-vanishing") return recurrence_vanishing_check(m, n);
  if (auto f = suffix("det-")) return hankel_check(*f, n);
  if (auto f = suffix("moments-")) return moment_identity_check(*f, n);
  if (auto f = suffix("orthogonality-")) return orthogonality_check(*f, n);
  if (auto f = suffix("orth-")) return orth_poly_check(*f, n);
  if (auto f = suffix("vanish-")) return vanishing_check(*f, m, n);
  if (auto f = suffix("roots-")) return root_structure_check(*f, n);
  if (auto f = suffix("tau-nonzero-")) return tau_nonzero_check(*f, n);
  if (id.starts_with("jacobi-")) return jacobi_check(id, n);
  throw UnknownIdentity("unknown Hankel check: " + id);
}

}  // namespace qrs
