#include "qrs/qfun.hpp"

#include <map>
#include <mutex>

namespace qrs {

QRat q_number(int m) {
  if (m >= 0) return QRat(UPoly::one_minus(m), UPoly::one_minus(1));
  // (1 - q^m)/(1 - q) = -(1 - q^|m|) / (q^|m| (1 - q))
  return QRat(-UPoly::one_minus(-m), UPoly::q_pow(-m) * UPoly::one_minus(1));
}

namespace {

struct BinomTable {
  std::vector<std::vector<UPoly>> rows;
};

}  // namespace

const UPoly& gauss_binomial(int n, int j, HalfInt base) {
  static const UPoly zero;
  if (base.twice() <= 0) throw std::invalid_argument("gauss_binomial: base must be positive");
  if (n < 0 || j < 0 || j > n) return zero;
  static std::mutex mu;
  static std::map<int, BinomTable> tables;
  std::lock_guard lock(mu);
  BinomTable& tab = tables[base.twice()];
  // [m+1 k] = q^(k*base) [m k] + [m k-1]
  while (static_cast<int>(tab.rows.size()) <= n) {
    const int m = static_cast<int>(tab.rows.size());
    std::vector<UPoly> row(static_cast<size_t>(m) + 1);
    row[0] = UPoly(1);
    row[static_cast<size_t>(m)] = UPoly(1);
    for (int k = 1; k < m; ++k) {
      const auto& prev = tab.rows[static_cast<size_t>(m) - 1];
      row[static_cast<size_t>(k)] = prev[static_cast<size_t>(k)].shift(k * base.twice()) + prev[static_cast<size_t>(k) - 1];
    }
    tab.rows.push_back(std::move(row));
  }
  return tab.rows[static_cast<size_t>(n)][static_cast<size_t>(j)];
}

RatFunc gauss_binomial_rf(int n, int j, HalfInt base) {
  if (base.twice() == 0) throw std::invalid_argument("gauss_binomial_rf: base must be nonzero");
  if (base.twice() > 0) return RatFunc(gauss_binomial(n, j, base));
  // [n j]_{1/p} = p^(-j(n-j)) [n j]_p
  if (j < 0 || j > n) return RatFunc();
  return RatFunc(gauss_binomial(n, j, -base)) * RatFunc::q_pow(base * (j * (n - j)));
}

RatFunc q_pochhammer(const RatFunc& arg, HalfInt base, int n) {
  if (n < 0) throw std::invalid_argument("q_pochhammer: negative length");
  RatFunc r(1);
  for (int j = 0; j < n; ++j) r *= RatFunc(1) - RatFunc::q_pow(base * j) * arg;
  return r;
}

UPoly q_pochhammer(int c, HalfInt a, HalfInt base, int n) {
  if (a.twice() < 0 || base.twice() < 0) throw std::invalid_argument("q_pochhammer: negative exponent");
  UPoly r(1);
  for (int j = 0; j < n; ++j) r *= UPoly(1) - UPoly::q_pow(a + base * j, c);
  return r;
}

RatFunc q_pochhammer_inv(int c, HalfInt a, HalfInt base, int n) {
  RatFunc r(1);
  for (int j = 0; j < n; ++j) r = r / RatFunc(UPoly(1) - UPoly::q_pow(a + base * j, c));
  return r;
}

BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

BigInt q_derivative_at_1(const UPoly& p) {
  if (!p.is_q_poly()) throw OddUExponent("q-derivative of a polynomial with odd u-exponents");
  BigInt acc = 0;
  for (int e = 2; e <= p.degree(); e += 2) acc += p.coeff(e) * (e / 2);
  return acc;
}

DerivativeAtOne q_binomial_derivative_at_1(int n, int j, int k) {
  if (j < 0 || j > n) throw std::invalid_argument("q_binomial_derivative_at_1: need 0 <= j <= n");
  return {binomial(j + 1, 2) * binomial(n, j + 1) * k, q_derivative_at_1(gauss_binomial(n, j, HalfInt(k)))};
}

}  // namespace qrs
