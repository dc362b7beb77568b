#include "qrs/series.hpp"

#include "qrs/normalized.hpp"
#include "qrs/qfun.hpp"
#include "qrs/rogers.hpp"

#include <functional>
#include <map>

namespace qrs {

TruncSeries::TruncSeries(int order) : order_(order), c_(static_cast<size_t>(order + 1)) {}

TruncSeries::TruncSeries(int order, std::vector<RatFunc> coeffs) : order_(order), c_(std::move(coeffs)) {
  c_.resize(static_cast<size_t>(order + 1));
}

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
  TruncSeries r(std::min(a.order_, b.order_));
  for (int n = 0; n <= r.order_; ++n) r[n] = a[n] + b[n];
  return r;
}

TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
  TruncSeries r(std::min(a.order_, b.order_));
  for (int n = 0; n <= r.order_; ++n) r[n] = a[n] - b[n];
  return r;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  TruncSeries r(std::min(a.order_, b.order_));
  for (int n = 0; n <= r.order_; ++n) {
    std::vector<RatFunc> terms;
    for (int i = 0; i <= n; ++i)
      if (!a[i].is_zero() && !b[n - i].is_zero()) terms.push_back(a[i] * b[n - i]);
    r[n] = RatFunc::sum(terms);
  }
  return r;
}

TruncSeries TruncSeries::scale(const RatFunc& k) const {
  TruncSeries r(order_);
  for (int n = 0; n <= order_; ++n) r[n] = c_[static_cast<size_t>(n)] * k;
  return r;
}

TruncSeries TruncSeries::reciprocal() const {
  if (!(c_[0] == RatFunc(1))) throw NonUnitConstantTerm("reciprocal needs constant term 1");
  TruncSeries r(order_);
  r[0] = 1;
  for (int n = 1; n <= order_; ++n) {
    std::vector<RatFunc> terms;
    for (int i = 1; i <= n; ++i)
      if (!c_[static_cast<size_t>(i)].is_zero() && !r[n - i].is_zero()) terms.push_back(c_[static_cast<size_t>(i)] * r[n - i]);
    r[n] = -RatFunc::sum(terms);
  }
  return r;
}

int first_difference(const TruncSeries& a, const TruncSeries& b) {
  const int n = std::min(a.order_, b.order_);
  for (int i = 0; i <= n; ++i)
    if (!(a[i] == b[i])) return i;
  return -1;
}

TruncSeries q_exp_series(QExpKind kind, HalfInt base, const RatFunc& c, int power, int order) {
  TruncSeries r(order);
  const UPoly one_minus_base = UPoly::one_minus(base);
  UPoly scale(1);
  RatFunc cn(1);
  for (int n = 0; n * power <= order; ++n) {
    RatFunc coeff = q_pochhammer_inv(1, base, base, n) * cn;
    if (kind != QExpKind::e) coeff *= RatFunc(scale);
    if (kind == QExpKind::Exp) coeff *= RatFunc(UPoly::q_pow(base * (n * (n - 1) / 2)));
    r[n * power] = coeff;
    scale *= one_minus_base;
    cn *= c;
  }
  return r;
}

namespace {

const RatFunc kS = RatFunc::var(Var::s);
const RatFunc kT = RatFunc::var(Var::t);

TruncSeries e_q(HalfInt base, const RatFunc& c, int order, int power = 1) {
  return q_exp_series(QExpKind::e, base, c, power, order);
}

/// Series whose n-th coefficient is coeff(n).
TruncSeries from_coeffs(int order, const std::function<RatFunc(int)>& coeff) {
  TruncSeries r(order);
  for (int n = 0; n <= order; ++n) r[n] = coeff(n);
  return r;
}

struct GfIdentity {
  std::function<TruncSeries(int)> lhs;
  std::function<TruncSeries(int)> rhs;
};

const std::map<std::string, GfIdentity>& registry() {
  static const std::map<std::string, GfIdentity> table = {
      {"exp-Exp-inverse",
       {[](int N) {
          return q_exp_series(QExpKind::exp, 1, 1, 1, N) * q_exp_series(QExpKind::Exp, 1, -1, 1, N);
        },
        [](int N) { return from_coeffs(N, [](int n) { return RatFunc(n == 0 ? 1 : 0); }); }}},
      {"e-q2-square",
       {[](int N) { return e_q(2, 1, N, 2); }, [](int N) { return e_q(1, -1, N) * e_q(1, 1, N); }}},
      {"rs-gf",
       {[](int N) {
          return from_coeffs(N, [](int n) { return RatFunc(rs(n)) * q_pochhammer_inv(1, 1, 1, n); });
        },
        [](int N) { return e_q(1, 1, N) * e_q(1, kS, N); }}},
      {"q-binomial-theorem",
       {[](int N) {
          return from_coeffs(N, [](int n) { return q_pochhammer(kS, 1, n) * q_pochhammer_inv(1, 1, 1, n); });
        },
        [](int N) { return e_q(1, 1, N) * e_q(1, kS, N).reciprocal(); }}},
      {"exp-exp-gauss",
       {[](int N) {
          return q_exp_series(QExpKind::exp, 1, 1, 1, N) * q_exp_series(QExpKind::exp, 1, -1, 1, N);
        },
        [](int N) {
          return from_coeffs(N, [](int n) {
            if (n % 2) return RatFunc(0);
            // (q;q^2)_m / [2m]! = (q;q^2)_m (1-q)^(2m) / (q;q)_(2m)
            const int m = n / 2;
            return RatFunc(q_pochhammer(1, 1, 2, m) * UPoly::one_minus(1).pow(static_cast<unsigned>(n))) *
                   q_pochhammer_inv(1, 1, 1, n);
          });
        }}},
      {"e-q2-halves",
       {[](int N) { return e_q(2, RatFunc::q_pow(1), N) * e_q(2, 1, N); }, [](int N) { return e_q(1, 1, N); }}},
      {"e-q2-halves-mutated",
       {[](int N) { return e_q(2, RatFunc::q_pow(2), N) * e_q(2, 1, N); }, [](int N) { return e_q(1, 1, N); }}},
      {"rs-even-gf",
       {[](int N) {
          return from_coeffs(N, [](int n) { return RatFunc(rs(2 * n)) * q_pochhammer_inv(1, 2, 2, n); });
        },
        [](int N) { return e_q(1, -kS, N).reciprocal() * e_q(2, kS * kS, N) * e_q(2, 1, N); }}},
      {"rs-odd-gf",
       {[](int N) {
          return from_coeffs(N, [](int n) { return RatFunc(rs(2 * n + 1)) * q_pochhammer_inv(1, 2, 2, n); });
        },
        [](int N) {
          return (e_q(1, -RatFunc::q_pow(1) * kS, N).reciprocal() * e_q(2, kS * kS, N) * e_q(2, 1, N))
              .scale(1 + kS);
        }}},
      {"rs-q2-gf",
       {[](int N) {
          return from_coeffs(N, [](int n) { return RatFunc(rs(n, 2)) * q_pochhammer_inv(1, 1, 1, n); });
        },
        [](int N) {
          return e_q(1, kS, N) * e_q(1, 1, N) * e_q(2, RatFunc::q_pow(1) * kS, N, 2).reciprocal();
        }}},
      {"h-gf",
       {[](int N) {
          return from_coeffs(N, [](int n) {
            return h_general(n) * q_pochhammer(-RatFunc::q_pow(1) * kT, 1, n) * q_pochhammer_inv(1, 1, 1, n);
          });
        },
        [](int N) {
          return e_q(1, kS, N) * e_q(1, 1, N) * e_q(2, RatFunc::q_pow(1) * kS * kT, N, 2).reciprocal();
        }}},
      {"H-gf",
       {[](int N) {
          return from_coeffs(N, [](int n) {
            return H_general(n) * q_pochhammer(RatFunc::q_pow(1) * kT * kT, 2, n) * q_pochhammer_inv(1, 2, 2, n);
          });
        },
        [](int N) { return e_q(2, kS * kS, N) * e_q(2, 1, N) * e_q(1, kS * kT, N).reciprocal(); }}},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& gf_catalog() {
  static const std::vector<std::string> keys = {"exp-Exp-inverse", "e-q2-square", "rs-gf",     "q-binomial-theorem",
                                                "exp-exp-gauss",   "e-q2-halves", "rs-even-gf", "rs-odd-gf",
                                                "rs-q2-gf",        "h-gf",        "H-gf"};
  return keys;
}

const std::vector<std::string>& gf_negative_controls() {
  static const std::vector<std::string> keys = {"e-q2-halves-mutated"};
  return keys;
}

Check verify_gf_identity(const std::string& id, int order) {
  const auto& table = registry();
  auto it = table.find(id);
  if (it == table.end()) throw UnknownIdentity("unknown generating-function identity: " + id);
  const TruncSeries lhs = it->second.lhs(order);
  const TruncSeries rhs = it->second.rhs(order);
  const int fail = first_difference(lhs, rhs);
  Check c;
  c.id = id;
  c.params = {{"order", order}};
  c.pass = fail < 0;
  const int shown = fail < 0 ? order : fail;
  c.computed = to_json(lhs[shown]);
  c.expected = to_json(rhs[shown]);
  if (!c.pass) c.witness = to_json(lhs[shown] - rhs[shown]);
  c.extra = {{"first_failing_order", fail < 0 ? Json(nullptr) : Json(fail)}};
  return c;
}

}  // namespace qrs
