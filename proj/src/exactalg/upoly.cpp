#include "qrs/upoly.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace qrs {

std::string HalfInt::str() const {
  if (is_integer()) return std::to_string(as_integer());
  return std::to_string(twice_) + "/2";
}

UPoly::UPoly(long value) {
  if (value != 0) c_.emplace_back(value);
}

UPoly::UPoly(const BigInt& value) {
  if (value != 0) c_.push_back(value);
}

UPoly::UPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UPoly UPoly::monomial(const BigInt& c, int u_exp) {
  if (u_exp < 0) throw std::invalid_argument("UPoly::monomial: negative exponent");
  UPoly p;
  if (c == 0) return p;
  p.c_.resize(static_cast<size_t>(u_exp) + 1);
  p.c_.back() = c;
  return p;
}

UPoly UPoly::q_pow(HalfInt k, long c) { return monomial(BigInt(c), k.twice()); }

UPoly UPoly::one_minus(HalfInt k, long c) { return UPoly(1) - q_pow(k, c); }

int UPoly::low_degree() const {
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) return static_cast<int>(i);
  return -1;
}

const BigInt& UPoly::coeff(int u_exp) const {
  static const BigInt zero = 0;
  if (u_exp < 0 || u_exp >= static_cast<int>(c_.size())) return zero;
  return c_[static_cast<size_t>(u_exp)];
}

bool UPoly::is_q_poly() const {
  for (size_t i = 1; i < c_.size(); i += 2)
    if (c_[i] != 0) return false;
  return true;
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

UPoly& UPoly::operator+=(const UPoly& other) {
  if (other.c_.size() > c_.size()) c_.resize(other.c_.size());
  for (size_t i = 0; i < other.c_.size(); ++i) c_[i] += other.c_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& other) {
  if (other.c_.size() > c_.size()) c_.resize(other.c_.size());
  for (size_t i = 0; i < other.c_.size(); ++i) c_[i] -= other.c_[i];
  trim();
  return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  UPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.c_.resize(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j] == 0) continue;
      mpz_addmul(r.c_[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
    }
  }
  r.trim();
  return r;
}

void addmul(UPoly& acc, const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return;
  const size_t need = a.c_.size() + b.c_.size() - 1;
  if (acc.c_.size() < need) acc.c_.resize(need);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j] == 0) continue;
      mpz_addmul(acc.c_[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
    }
  }
  acc.trim();
}

UPoly& UPoly::operator*=(const UPoly& other) { return *this = *this * other; }

UPoly& UPoly::operator*=(const BigInt& k) {
  if (k == 0) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= k;
  return *this;
}

UPoly UPoly::pow(unsigned e) const {
  UPoly result(1);
  UPoly base = *this;
  while (e) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e) base = base * base;
  }
  return result;
}

UPoly UPoly::shift(int k) const {
  if (k < 0) throw std::invalid_argument("UPoly::shift: negative shift");
  if (is_zero() || k == 0) return *this;
  UPoly r;
  r.c_.resize(c_.size() + static_cast<size_t>(k));
  std::copy(c_.begin(), c_.end(), r.c_.begin() + k);
  return r;
}

Rational UPoly::eval_u(const Rational& point) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * point + Rational(*it);
  return acc;
}

Rational UPoly::eval_q(const Rational& point) const {
  if (!is_q_poly()) throw OddUExponent("q-point evaluation of a polynomial with odd u-exponents");
  Rational acc = 0;
  for (int i = degree() - degree() % 2; i >= 0; i -= 2) acc = acc * point + Rational(coeff(i));
  return acc;
}

UPoly UPoly::compose_u_power(int k) const {
  if (k < 1) throw std::invalid_argument("UPoly::compose_u_power: k must be positive");
  if (k == 1 || is_zero()) return *this;
  UPoly r;
  r.c_.resize(static_cast<size_t>(degree()) * static_cast<size_t>(k) + 1);
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i * static_cast<size_t>(k)] = c_[i];
  return r;
}

UPoly UPoly::rescale_exponents(int num, int den) const {
  if (num <= 0 || den <= 0) throw std::invalid_argument("UPoly::rescale_exponents: positive ratio required");
  UPoly r;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    long e = static_cast<long>(i) * num;
    if (e % den != 0) throw std::domain_error("exponent rescaling leaves the u-grid");
    r += monomial(c_[i], static_cast<int>(e / den));
  }
  return r;
}

UPoly UPoly::reverse(int top) const {
  if (top < degree()) throw std::invalid_argument("UPoly::reverse: top below degree");
  UPoly r;
  if (is_zero()) return r;
  r.c_.assign(static_cast<size_t>(top) + 1, BigInt(0));
  for (size_t i = 0; i < c_.size(); ++i) r.c_[static_cast<size_t>(top) - i] = c_[i];
  r.trim();
  return r;
}

UPoly UPoly::derivative_u() const {
  UPoly r;
  if (c_.size() <= 1) return r;
  r.c_.resize(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = c_[i] * static_cast<long>(i);
  r.trim();
  return r;
}

BigInt UPoly::content() const {
  BigInt g = 0;
  for (const auto& c : c_) {
    if (c == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

UPoly UPoly::primitive_part() const {
  if (is_zero()) return *this;
  BigInt g = content();
  if (leading() < 0) g = -g;
  UPoly r = *this;
  for (auto& c : r.c_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return r;
}

std::string UPoly::str(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    const BigInt& c = c_[i];
    if (c == 0) continue;
    BigInt a = abs(c);
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    if (i == 0 || a != 1) os << a.get_str();
    if (i > 0) {
      if (a != 1) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

bool try_divexact(const UPoly& a, const UPoly& b, UPoly& quotient) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (a.is_zero()) {
    quotient = UPoly();
    return true;
  }
  if (a.degree() < b.degree()) return false;
  std::vector<BigInt> rem(a.coeffs().begin(), a.coeffs().end());
  const int db = b.degree();
  const BigInt& lb = b.leading();
  std::vector<BigInt> quo(static_cast<size_t>(a.degree() - db) + 1);
  BigInt t;
  for (int i = a.degree(); i >= db; --i) {
    BigInt& lead = rem[static_cast<size_t>(i)];
    if (lead == 0) continue;
    if (!mpz_divisible_p(lead.get_mpz_t(), lb.get_mpz_t())) return false;
    mpz_divexact(t.get_mpz_t(), lead.get_mpz_t(), lb.get_mpz_t());
    const int shift = i - db;
    for (int j = 0; j <= db; ++j) {
      const BigInt& bj = b.coeff(j);
      if (bj != 0) mpz_submul(rem[static_cast<size_t>(shift + j)].get_mpz_t(), t.get_mpz_t(), bj.get_mpz_t());
    }
    quo[static_cast<size_t>(shift)] = t;
  }
  for (int i = 0; i < db; ++i)
    if (rem[static_cast<size_t>(i)] != 0) return false;
  quotient = UPoly(std::move(quo));
  return true;
}

UPoly divexact(const UPoly& a, const UPoly& b) {
  UPoly q;
  if (!try_divexact(a, b, q)) throw NotDivisible("(" + a.str() + ") is not divisible by (" + b.str() + ")");
  return q;
}

UPoly rem_monic(const UPoly& a, const UPoly& m) {
  if (m.is_zero() || m.leading() != 1) throw std::invalid_argument("rem_monic: divisor must be monic");
  if (a.degree() < m.degree()) return a;
  std::vector<BigInt> rem(a.coeffs().begin(), a.coeffs().end());
  const int dm = m.degree();
  for (int i = a.degree(); i >= dm; --i) {
    BigInt t = rem[static_cast<size_t>(i)];
    if (t == 0) continue;
    const int shift = i - dm;
    for (int j = 0; j <= dm; ++j) {
      const BigInt& mj = m.coeff(j);
      if (mj != 0) mpz_submul(rem[static_cast<size_t>(shift + j)].get_mpz_t(), t.get_mpz_t(), mj.get_mpz_t());
    }
  }
  rem.resize(static_cast<size_t>(dm));
  return UPoly(std::move(rem));
}

namespace {

// Pseudo-remainder of a by b: lc(b)^(deg a - deg b + 1) * a mod b.
UPoly pseudo_rem(UPoly a, const UPoly& b) {
  const int db = b.degree();
  const BigInt& lb = b.leading();
  while (!a.is_zero() && a.degree() >= db) {
    BigInt la = a.leading();
    UPoly scaled = a;
    scaled *= lb;
    scaled -= UPoly::monomial(la, a.degree() - db) * b;
    a = std::move(scaled);
  }
  return a;
}

}  // namespace

UPoly gcd(const UPoly& a, const UPoly& b) {
  if (a.is_zero()) return (!b.is_zero() && b.leading() < 0) ? -b : b;
  if (b.is_zero()) return a.leading() < 0 ? -a : a;
  BigInt cg;
  BigInt ca = a.content(), cb = b.content();
  mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  UPoly A = a.primitive_part(), B = b.primitive_part();
  if (A.degree() < B.degree()) std::swap(A, B);
  while (!B.is_zero()) {
    if (B.degree() == 0) {
      A = UPoly(1);
      break;
    }
    UPoly r = pseudo_rem(A, B);
    A = std::move(B);
    B = r.is_zero() ? r : r.primitive_part();
  }
  A = A.primitive_part();
  A *= cg;
  return A;
}

const UPoly& cyclotomic(int d) {
  if (d < 1) throw std::invalid_argument("cyclotomic: index must be positive");
  static std::mutex mu;
  static std::map<int, UPoly> memo;
  {
    std::lock_guard lock(mu);
    if (auto it = memo.find(d); it != memo.end()) return it->second;
  }
  UPoly p = UPoly::monomial(1, d) - UPoly(1);
  for (int e = 1; e < d; ++e)
    if (d % e == 0) p = divexact(p, cyclotomic(e));
  std::lock_guard lock(mu);
  return memo.emplace(d, std::move(p)).first->second;
}

}  // namespace qrs
