#include "qrs/zpoly.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace qrs {

Mono Mono::gcd(Mono a, Mono b) {
  return Mono(std::min(a.exp(Var::s), b.exp(Var::s)), std::min(a.exp(Var::t), b.exp(Var::t)),
              std::min(a.exp(Var::x), b.exp(Var::x)));
}

Mono Mono::lcm(Mono a, Mono b) {
  return Mono(std::max(a.exp(Var::s), b.exp(Var::s)), std::max(a.exp(Var::t), b.exp(Var::t)),
              std::max(a.exp(Var::x), b.exp(Var::x)));
}

ZPoly::ZPoly(const UPoly& c) {
  if (!c.is_zero()) terms_.emplace_back(Mono(), c);
}

ZPoly::ZPoly(Mono m, const UPoly& c) {
  if (!c.is_zero()) terms_.emplace_back(m, c);
}

ZPoly ZPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first > b.first; });
  ZPoly r;
  for (auto& t : terms) {
    if (!r.terms_.empty() && r.terms_.back().first == t.first)
      r.terms_.back().second += t.second;
    else
      r.terms_.push_back(std::move(t));
    if (r.terms_.back().second.is_zero()) r.terms_.pop_back();
  }
  return r;
}

const UPoly& ZPoly::coeff(Mono m) const {
  static const UPoly zero;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, Mono key) { return t.first > key; });
  if (it != terms_.end() && it->first == m) return it->second;
  return zero;
}

UPoly ZPoly::to_upoly() const {
  if (!is_upoly()) throw std::domain_error("ZPoly::to_upoly: symbols present");
  return terms_.empty() ? UPoly() : terms_[0].second;
}

unsigned ZPoly::degree(Var v) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.first.exp(v));
  return d;
}

unsigned ZPoly::min_degree(Var v) const {
  if (terms_.empty()) return 0;
  unsigned d = terms_[0].first.exp(v);
  for (const auto& t : terms_) d = std::min(d, t.first.exp(v));
  return d;
}

int ZPoly::u_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.second.degree());
  return d;
}

int ZPoly::u_low_degree() const {
  if (terms_.empty()) return -1;
  int d = terms_[0].second.low_degree();
  for (const auto& t : terms_) d = std::min(d, t.second.low_degree());
  return d;
}

Mono ZPoly::mono_content() const {
  if (terms_.empty()) return Mono();
  Mono g = terms_[0].first;
  for (const auto& t : terms_) g = Mono::gcd(g, t.first);
  return g;
}

BigInt ZPoly::int_content() const {
  BigInt g = 0;
  for (const auto& t : terms_) {
    BigInt c = t.second.content();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

UPoly ZPoly::upoly_content() const {
  UPoly g;
  for (const auto& t : terms_) {
    g = gcd(g, t.second);
    if (g.is_one()) break;
  }
  return g;
}

ZPoly ZPoly::operator-() const {
  ZPoly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

namespace {

template <class Op>
std::vector<ZPoly::Term> merge_terms(const std::vector<ZPoly::Term>& a, const std::vector<ZPoly::Term>& b, Op op) {
  std::vector<ZPoly::Term> out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first > b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first > a[i].first) {
      out.emplace_back(b[j].first, op(UPoly(), b[j].second));
      ++j;
    } else {
      UPoly c = op(a[i].second, b[j].second);
      if (!c.is_zero()) out.emplace_back(a[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

ZPoly& ZPoly::operator+=(const ZPoly& b) {
  terms_ = merge_terms(terms_, b.terms_, [](const UPoly& x, const UPoly& y) { return x + y; });
  return *this;
}

ZPoly& ZPoly::operator-=(const ZPoly& b) {
  terms_ = merge_terms(terms_, b.terms_, [](const UPoly& x, const UPoly& y) { return x - y; });
  return *this;
}

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
  if (a.is_zero() || b.is_zero()) return ZPoly();
  if (a.terms_.size() == 1 && a.terms_[0].first.is_one()) return b.mul_upoly(a.terms_[0].second);
  if (b.terms_.size() == 1 && b.terms_[0].first.is_one()) return a.mul_upoly(b.terms_[0].second);
  std::map<Mono, UPoly, std::greater<>> acc;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) addmul(acc[ma * mb], ca, cb);
  ZPoly r;
  r.terms_.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (!c.is_zero()) r.terms_.emplace_back(m, std::move(c));
  return r;
}

bool operator<(const ZPoly& a, const ZPoly& b) {
  const size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (size_t i = 0; i < n; ++i) {
    const auto& [ma, ca] = a.terms_[i];
    const auto& [mb, cb] = b.terms_[i];
    if (ma != mb) return ma < mb;
    if (ca.degree() != cb.degree()) return ca.degree() < cb.degree();
    for (int e = ca.degree(); e >= 0; --e)
      if (ca.coeff(e) != cb.coeff(e)) return ca.coeff(e) < cb.coeff(e);
  }
  return a.terms_.size() < b.terms_.size();
}

ZPoly ZPoly::mul_upoly(const UPoly& c) const {
  ZPoly r;
  if (c.is_zero()) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& [m, x] : terms_) r.terms_.emplace_back(m, x * c);
  return r;
}

ZPoly ZPoly::mul_mono(Mono m, int u_shift) const {
  ZPoly r;
  r.terms_.reserve(terms_.size());
  for (const auto& [mm, c] : terms_) r.terms_.emplace_back(mm * m, c.shift(u_shift));
  return r;
}

ZPoly ZPoly::div_mono(Mono m, int u_shift) const {
  ZPoly r;
  r.terms_.reserve(terms_.size());
  for (const auto& [mm, c] : terms_) {
    if (!m.divides(mm) || c.low_degree() < u_shift) throw NotDivisible("ZPoly::div_mono: monomial does not divide");
    std::vector<BigInt> cs(c.coeffs().begin() + u_shift, c.coeffs().end());
    r.terms_.emplace_back(mm / m, UPoly(std::move(cs)));
  }
  return r;
}

bool ZPoly::try_div_upoly(const UPoly& c, ZPoly& out) const {
  ZPoly r;
  r.terms_.reserve(terms_.size());
  for (const auto& [m, x] : terms_) {
    UPoly q;
    if (!try_divexact(x, c, q)) return false;
    r.terms_.emplace_back(m, std::move(q));
  }
  out = std::move(r);
  return true;
}

ZPoly ZPoly::div_upoly(const UPoly& c) const {
  ZPoly r;
  if (!try_div_upoly(c, r)) throw NotDivisible("ZPoly::div_upoly: coefficient not divisible by " + c.str());
  return r;
}

ZPoly ZPoly::pow(unsigned e) const {
  ZPoly result(1);
  ZPoly base = *this;
  while (e) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e) base = base * base;
  }
  return result;
}

ZPoly ZPoly::subst(Var v, const ZPoly& value) const {
  std::vector<ZPoly> powers{ZPoly(1)};
  for (unsigned e = 1; e <= degree(v); ++e) powers.push_back(powers.back() * value);
  std::map<unsigned, std::vector<Term>> groups;
  for (const auto& [m, c] : terms_) groups[m.exp(v)].emplace_back(m / Mono::var(v, m.exp(v)), c);
  ZPoly r;
  for (auto& [e, ts] : groups) r += from_terms(std::move(ts)) * powers[e];
  return r;
}

ZPoly ZPoly::stretch(Var v, unsigned k) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [m, c] : terms_) out.emplace_back(m * Mono::var(v, m.exp(v) * (k - 1)), c);
  return from_terms(std::move(out));
}

Rational ZPoly::eval(const Rational& u, const Rational& s, const Rational& t, const Rational& x) const {
  auto ipow = [](const Rational& b, unsigned e) {
    Rational r = 1;
    for (unsigned i = 0; i < e; ++i) r *= b;
    return r;
  };
  Rational acc = 0;
  for (const auto& [m, c] : terms_)
    acc += c.eval_u(u) * ipow(s, m.exp(Var::s)) * ipow(t, m.exp(Var::t)) * ipow(x, m.exp(Var::x));
  acc.canonicalize();
  return acc;
}

std::string ZPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    const bool bare = c.is_one() && !m.is_one();
    if (!bare) os << (m.is_one() ? c.str() : "(" + c.str() + ")");
    const char* names[] = {"s", "t", "x"};
    bool any = !bare;
    for (Var v : {Var::s, Var::t, Var::x}) {
      unsigned e = m.exp(v);
      if (e == 0) continue;
      if (any) os << "*";
      any = true;
      os << names[static_cast<int>(v)];
      if (e > 1) os << "^" << e;
    }
  }
  return os.str();
}

bool try_divexact(const ZPoly& a, const ZPoly& b, ZPoly& quotient) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (a.is_zero()) {
    quotient = ZPoly();
    return true;
  }
  if (b.is_upoly()) return a.try_div_upoly(b.to_upoly(), quotient);
  for (Var v : {Var::s, Var::t, Var::x})
    if (b.degree(v) > a.degree(v) || b.min_degree(v) > a.min_degree(v)) return false;
  if (b.u_low_degree() > a.u_low_degree()) return false;

  std::map<Mono, UPoly, std::greater<>> rem;
  for (const auto& [m, c] : a.terms()) rem.emplace(m, c);
  const auto& [lm, lc] = b.leading();
  std::vector<ZPoly::Term> quo;
  while (!rem.empty()) {
    auto it = rem.begin();
    if (it->second.is_zero()) {
      rem.erase(it);
      continue;
    }
    if (!lm.divides(it->first)) return false;
    UPoly qc;
    if (!try_divexact(it->second, lc, qc)) return false;
    const Mono qm = it->first / lm;
    for (const auto& [bm, bc] : b.terms()) {
      UPoly& slot = rem[qm * bm];
      slot -= qc * bc;
    }
    // The leading slot is now zero by construction; other zeros are dropped
    // lazily when they reach the front.
    rem.erase(rem.begin());
    quo.emplace_back(qm, std::move(qc));
  }
  quotient = ZPoly::from_terms(std::move(quo));
  return true;
}

ZPoly divexact(const ZPoly& a, const ZPoly& b) {
  ZPoly q;
  if (!try_divexact(a, b, q)) throw NotDivisible("multivariate exact division failed");
  return q;
}

}  // namespace qrs
