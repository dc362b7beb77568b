#include "qrs/ratfunc.hpp"

#include <algorithm>
#include <map>

namespace qrs {

std::vector<std::pair<UPoly, int>> factor_cyclotomic(const UPoly& g) {
  std::vector<std::pair<UPoly, int>> out;
  if (g.degree() <= 0) return out;
  const int a = g.degree();
  // u^a - 1 and u^a + 1 factor directly over the divisors of a and 2a.
  int nonzero = 0;
  for (const auto& c : g.coeffs())
    if (c != 0) ++nonzero;
  if (nonzero == 2 && g.leading() == 1 && abs(g.coeff(0)) == 1) {
    const bool minus = g.coeff(0) == -1;
    const int top = minus ? a : 2 * a;
    for (int d = 1; d <= top; ++d) {
      if (top % d != 0) continue;
      if (!minus && a % d == 0) continue;
      out.emplace_back(cyclotomic(d), 1);
    }
    return out;
  }
  UPoly rem = g;
  const int limit = 4 * a + 4;
  for (int d = 1; d <= limit && rem.degree() > 0; ++d) {
    const UPoly& phi = cyclotomic(d);
    if (phi.degree() > rem.degree()) continue;
    int mult = 0;
    UPoly q;
    while (rem.degree() >= phi.degree() && try_divexact(rem, phi, q)) {
      rem = std::move(q);
      ++mult;
    }
    if (mult) out.emplace_back(phi, mult);
  }
  if (rem.degree() > 0) out.emplace_back(rem, 1);
  return out;
}

namespace {

ZPoly mono_poly(Mono m, int u_exp, const BigInt& c) { return ZPoly(m, UPoly::monomial(c, u_exp)); }

ZPoly div_int(const ZPoly& p, const BigInt& g) {
  return p.map_coeffs([&](const UPoly& c) {
    std::vector<BigInt> cs(c.coeffs().begin(), c.coeffs().end());
    for (auto& x : cs) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    return UPoly(std::move(cs));
  });
}

bool leading_negative(const ZPoly& p) { return p.leading().second.leading() < 0; }

}  // namespace

RatFunc::RatFunc(const QRat& c) : num_(c.num()) {
  absorb_den(ZPoly(c.den()), 1);
  normalize();
}

RatFunc::RatFunc(const ZPoly& num, const ZPoly& den) : num_(num) {
  absorb_den(den, 1);
  normalize();
}

RatFunc RatFunc::q_pow(HalfInt k, long c) {
  RatFunc r;
  if (c == 0) return r;
  if (k.twice() >= 0) return RatFunc(UPoly::monomial(BigInt(c), k.twice()));
  r.num_ = ZPoly(c);
  r.den_u_ = -k.twice();
  return r;
}

void RatFunc::add_factor(const ZPoly& p, int mult) {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), p,
                             [](const Factor& f, const ZPoly& key) { return f.poly < key; });
  if (it != factors_.end() && it->poly == p)
    it->mult += mult;
  else
    factors_.insert(it, Factor{p, mult});
}

void RatFunc::absorb_den(const ZPoly& p0, int mult) {
  if (p0.is_zero()) throw std::domain_error("RatFunc: zero denominator");
  const Mono mc = p0.mono_content();
  const int ul = p0.u_low_degree();
  for (int i = 0; i < mult; ++i) den_mono_ = den_mono_ * mc;
  den_u_ += ul * mult;
  ZPoly p = p0.div_mono(mc, ul);
  UPoly content = p.upoly_content();
  if (!p.is_upoly()) {
    if (!content.is_one()) p = p.div_upoly(content);
    if (leading_negative(p)) {
      p = -p;
      if (mult % 2) num_ = -num_;
    }
  } else {
    if (p.to_upoly().leading() < 0 && mult % 2) num_ = -num_;
    p = ZPoly(1);
  }
  BigInt ic = content.content();
  for (int i = 0; i < mult; ++i) den_int_ *= ic;
  for (auto& [f, e] : factor_cyclotomic(content.primitive_part())) add_factor(ZPoly(f), e * mult);
  if (!p.is_upoly()) add_factor(p, mult);
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_int_ = 1;
    den_mono_ = Mono();
    den_u_ = 0;
    factors_.clear();
    return;
  }
  BigInt g = num_.int_content();
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), den_int_.get_mpz_t());
  if (g != 1) {
    num_ = div_int(num_, g);
    mpz_divexact(den_int_.get_mpz_t(), den_int_.get_mpz_t(), g.get_mpz_t());
  }
  const Mono mc = Mono::gcd(num_.mono_content(), den_mono_);
  const int ul = std::min(num_.u_low_degree(), den_u_);
  if (!mc.is_one() || ul > 0) {
    num_ = num_.div_mono(mc, ul);
    den_mono_ = den_mono_ / mc;
    den_u_ -= ul;
  }
  cancel_factors();
}

void RatFunc::cancel_factors() {
  for (auto& f : factors_) {
    ZPoly q;
    while (f.mult > 0 && try_divexact(num_, f.poly, q)) {
      num_ = std::move(q);
      --f.mult;
    }
  }
  std::erase_if(factors_, [](const Factor& f) { return f.mult == 0; });
}

ZPoly RatFunc::den() const {
  ZPoly d = mono_poly(den_mono_, den_u_, den_int_);
  for (const auto& f : factors_) d *= f.poly.pow(static_cast<unsigned>(f.mult));
  return d;
}

bool RatFunc::is_polynomial() const {
  return den_int_ == 1 && den_mono_.is_one() && den_u_ == 0 && factors_.empty();
}

bool RatFunc::has_q_only_den() const {
  if (!den_mono_.is_one()) return false;
  return std::all_of(factors_.begin(), factors_.end(), [](const Factor& f) { return f.poly.is_upoly(); });
}

bool RatFunc::is_qrat() const { return num_.is_upoly() && has_q_only_den(); }

ZPoly RatFunc::to_zpoly() const {
  if (!is_polynomial()) throw std::domain_error("RatFunc::to_zpoly: nontrivial denominator " + str());
  return num_;
}

UPoly RatFunc::to_upoly() const { return to_zpoly().to_upoly(); }

QRat RatFunc::to_qrat() const {
  if (!is_qrat()) throw std::domain_error("RatFunc::to_qrat: symbols present in " + str());
  return QRat(num_.to_upoly(), den().to_upoly());
}

QRat RatFunc::coeff(Mono m) const {
  if (!has_q_only_den()) throw std::domain_error("RatFunc::coeff: denominator involves symbols");
  return QRat(num_.coeff(m), den().to_upoly());
}

unsigned RatFunc::degree(Var v) const {
  unsigned d = den_mono_.exp(v);
  for (const auto& f : factors_) d += f.poly.degree(v) * static_cast<unsigned>(f.mult);
  const unsigned n = num_.degree(v);
  return n >= d ? n - d : 0;
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::den_lcm(const RatFunc& a, const RatFunc& b) {
  RatFunc l;
  mpz_lcm(l.den_int_.get_mpz_t(), a.den_int_.get_mpz_t(), b.den_int_.get_mpz_t());
  l.den_mono_ = Mono::lcm(a.den_mono_, b.den_mono_);
  l.den_u_ = std::max(a.den_u_, b.den_u_);
  l.factors_ = a.factors_;
  for (const auto& f : b.factors_) {
    auto it = std::lower_bound(l.factors_.begin(), l.factors_.end(), f.poly,
                               [](const Factor& x, const ZPoly& key) { return x.poly < key; });
    if (it != l.factors_.end() && it->poly == f.poly)
      it->mult = std::max(it->mult, f.mult);
    else
      l.factors_.insert(it, f);
  }
  return l;
}

ZPoly RatFunc::lift_num(const RatFunc& l) const {
  BigInt k;
  mpz_divexact(k.get_mpz_t(), l.den_int_.get_mpz_t(), den_int_.get_mpz_t());
  ZPoly n = num_.mul_mono(l.den_mono_ / den_mono_, l.den_u_ - den_u_);
  if (k != 1) n = n.mul_upoly(UPoly(k));
  size_t j = 0;
  for (const auto& f : l.factors_) {
    int have = 0;
    while (j < factors_.size() && factors_[j].poly < f.poly) ++j;
    if (j < factors_.size() && factors_[j].poly == f.poly) have = factors_[j].mult;
    if (f.mult > have) n *= f.poly.pow(static_cast<unsigned>(f.mult - have));
  }
  return n;
}

void RatFunc::set_den_from(const RatFunc& other) {
  den_int_ = other.den_int_;
  den_mono_ = other.den_mono_;
  den_u_ = other.den_u_;
  factors_ = other.factors_;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  RatFunc l = RatFunc::den_lcm(a, b);
  RatFunc r;
  r.num_ = a.lift_num(l) + b.lift_num(l);
  r.set_den_from(l);
  r.normalize();
  return r;
}

RatFunc RatFunc::sum(const std::vector<RatFunc>& terms) {
  RatFunc l;
  for (const auto& t : terms)
    if (!t.is_zero()) l = den_lcm(l, t);
  RatFunc r;
  for (const auto& t : terms)
    if (!t.is_zero()) r.num_ += t.lift_num(l);
  r.set_den_from(l);
  r.normalize();
  return r;
}

namespace {

// Removes from n every factor of den that divides it, lowering the local
// multiplicity copy accordingly.
void cross_cancel(ZPoly& n, std::vector<RatFunc::Factor>& den) {
  for (auto& f : den) {
    ZPoly q;
    while (f.mult > 0 && try_divexact(n, f.poly, q)) {
      n = std::move(q);
      --f.mult;
    }
  }
}

}  // namespace

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return RatFunc();
  ZPoly an = a.num_, bn = b.num_;
  std::vector<RatFunc::Factor> af = a.factors_, bf = b.factors_;
  cross_cancel(an, bf);
  cross_cancel(bn, af);
  RatFunc r;
  r.num_ = an * bn;
  r.den_int_ = a.den_int_ * b.den_int_;
  r.den_mono_ = a.den_mono_ * b.den_mono_;
  r.den_u_ = a.den_u_ + b.den_u_;
  r.factors_ = std::move(af);
  for (const auto& f : bf)
    if (f.mult > 0) r.add_factor(f.poly, f.mult);
  std::erase_if(r.factors_, [](const RatFunc::Factor& f) { return f.mult == 0; });
  // Integer and monomial parts may still cancel; the factor parts already did.
  std::vector<RatFunc::Factor> keep = std::move(r.factors_);
  r.factors_.clear();
  r.normalize();
  r.factors_ = std::move(keep);
  return r;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw std::domain_error("RatFunc: inverse of zero");
  RatFunc r;
  r.num_ = den();
  r.absorb_den(num_, 1);
  r.normalize();
  return r;
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

bool operator==(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  RatFunc l = RatFunc::den_lcm(a, b);
  return a.lift_num(l) == b.lift_num(l);
}

RatFunc RatFunc::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  RatFunc result(1);
  RatFunc base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

RatFunc RatFunc::product(const std::vector<RatFunc>& factors) {
  RatFunc r(1);
  for (const auto& f : factors) r *= f;
  return r;
}

namespace {

RatFunc subst_poly(const ZPoly& p, Var v, const RatFunc& value) {
  std::map<unsigned, std::vector<ZPoly::Term>> groups;
  for (const auto& [m, c] : p.terms()) {
    const unsigned e = m.exp(v);
    groups[e].emplace_back(m / Mono::var(v, e), c);
  }
  std::vector<RatFunc> parts;
  RatFunc power(1);
  unsigned at = 0;
  for (auto& [e, terms] : groups) {
    while (at < e) {
      power *= value;
      ++at;
    }
    parts.push_back(RatFunc(ZPoly::from_terms(std::move(terms))) * power);
  }
  return RatFunc::sum(parts);
}

// q -> q^k on a polynomial: returns the image as numerator and the power of u
// that was moved into the denominator.
std::pair<ZPoly, int> subst_q_poly(const ZPoly& p, HalfInt k) {
  const int tw = k.twice();
  if (tw > 0) return {p.map_coeffs([&](const UPoly& c) { return c.rescale_exponents(tw, 2); }), 0};
  const int a = -tw;
  int top = std::max(p.u_degree(), 0);
  if ((top * a) % 2) ++top;
  ZPoly img = p.map_coeffs([&](const UPoly& c) { return c.reverse(top).rescale_exponents(a, 2); });
  return {img, top * a / 2};
}

}  // namespace

RatFunc RatFunc::subst(Var v, const RatFunc& value) const {
  RatFunc r = subst_poly(num_, v, value);
  if (r.is_zero()) return r;
  RatFunc d = RatFunc(mono_poly(den_mono_ / Mono::var(v, den_mono_.exp(v)), den_u_, den_int_)) *
              value.pow(static_cast<int>(den_mono_.exp(v)));
  r = r / d;
  for (const auto& f : factors_) {
    RatFunc img = subst_poly(f.poly, v, value);
    if (img.is_zero()) throw std::domain_error("RatFunc::subst: substitution hits a pole");
    r = r / img.pow(f.mult);
  }
  return r;
}

RatFunc RatFunc::subst_q(HalfInt k) const {
  if (k.twice() == 0) throw std::invalid_argument("subst_q: k must be nonzero");
  auto to_rf = [&](const ZPoly& p) {
    auto [img, shift] = subst_q_poly(p, k);
    RatFunc r(img);
    r.den_u_ += shift;
    r.normalize();
    return r;
  };
  RatFunc r = to_rf(num_);
  if (r.is_zero()) return r;
  r = r / to_rf(mono_poly(den_mono_, den_u_, den_int_));
  for (const auto& f : factors_) r = r / to_rf(f.poly).pow(f.mult);
  return r;
}

Rational RatFunc::eval(const Rational& u, const Rational& s, const Rational& t, const Rational& x) const {
  Rational d = den().eval(u, s, t, x);
  if (d == 0) throw std::domain_error("RatFunc::eval: pole");
  Rational r = num_.eval(u, s, t, x) / d;
  r.canonicalize();
  return r;
}

std::string RatFunc::str() const {
  if (is_polynomial()) return num_.str();
  return "(" + num_.str() + ")/(" + den().str() + ")";
}

}  // namespace qrs
