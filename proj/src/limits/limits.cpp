#include "qrs/limits.hpp"

#include "qrs/qfun.hpp"

#include <algorithm>
#include <functional>

namespace qrs {

namespace {

const UPoly& root_factor(int point) {
  static const UPoly one_minus_u(std::vector<BigInt>{1, -1});
  static const UPoly one_plus_q = UPoly::one_minus(1, -1);
  if (point == 1) return one_minus_u;
  if (point == -1) return one_plus_q;
  throw std::invalid_argument("limits are taken at q = 1 or q = -1");
}

Rational value_at(const UPoly& p, int point) { return point == 1 ? p.eval_u(1) : p.eval_q(-1); }

UPoly strip(const UPoly& p, int point, int times) {
  UPoly r = p;
  for (int i = 0; i < times; ++i) r = divexact(r, root_factor(point));
  return r;
}

}  // namespace

int vanishing_order(const UPoly& p, int point) {
  if (p.is_zero()) throw ZeroPolynomial("vanishing_order of the zero polynomial");
  if (point == -1 && !p.is_q_poly()) throw OddUExponent("vanishing order at q = -1 needs a polynomial in q");
  const UPoly& f = root_factor(point);
  int order = 0;
  UPoly cur = p, next;
  while (try_divexact(cur, f, next)) {
    cur = std::move(next);
    ++order;
  }
  return order;
}

Rational exact_limit(const LimitProblem& prob) {
  if (prob.denominator.is_zero()) throw ZeroPolynomial("exact_limit: zero denominator");
  if (prob.numerator.is_zero()) return 0;
  const int on = vanishing_order(prob.numerator, prob.point);
  const int od = vanishing_order(prob.denominator, prob.point);
  if (on < od)
    throw OrderDeficit("numerator vanishes to order " + std::to_string(on) + ", denominator to order " +
                       std::to_string(od));
  Rational r = value_at(strip(prob.numerator, prob.point, od), prob.point) /
               value_at(strip(prob.denominator, prob.point, od), prob.point);
  r.canonicalize();
  return r;
}

Rational lhopital_limit(const LimitProblem& prob) {
  // Coefficients in the variable that is differentiated: u at q = 1, q at q = -1.
  auto coeffs = [&](const UPoly& p) {
    std::vector<BigInt> c;
    if (prob.point == 1) return std::vector<BigInt>(p.coeffs().begin(), p.coeffs().end());
    if (!p.is_q_poly()) throw OddUExponent("derivative in q needs a polynomial in q");
    for (int e = 0; e <= p.degree(); e += 2) c.push_back(p.coeff(e));
    return c;
  };
  auto eval = [&](const std::vector<BigInt>& c) {
    Rational acc = 0;
    const Rational x = prob.point;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + Rational(*it);
    return acc;
  };
  auto derive = [](const std::vector<BigInt>& c) {
    std::vector<BigInt> d;
    for (size_t i = 1; i < c.size(); ++i) d.push_back(c[i] * static_cast<long>(i));
    return d;
  };
  std::vector<BigInt> n = coeffs(prob.numerator), d = coeffs(prob.denominator);
  while (eval(d) == 0) {
    if (d.empty()) throw ZeroPolynomial("lhopital_limit: zero denominator");
    if (eval(n) != 0) throw OrderDeficit("numerator stops vanishing before the denominator");
    n = derive(n);
    d = derive(d);
  }
  Rational r = eval(n) / eval(d);
  r.canonicalize();
  return r;
}

UPoly f_sum(int n, HalfInt r, int m, int k) {
  if (r.twice() < 0 || m < 0 || k < 1) throw std::invalid_argument("f_sum needs r, m >= 0 and k >= 1");
  UPoly sum;
  for (int j = 0; j <= n; ++j)
    sum += gauss_binomial(n, j, k) * UPoly::monomial(j % 2 ? -1 : 1, r.twice() * j * j + 2 * m * j);
  return sum;
}

UPoly f_sum_plain(int n, HalfInt r, int m, int k) {
  if (r.twice() < 0 || m < 0 || k < 1) throw std::invalid_argument("f_sum_plain needs r, m >= 0 and k >= 1");
  UPoly sum;
  for (int j = 0; j <= n; ++j) sum += gauss_binomial(n, j, k) * UPoly::monomial(1, r.twice() * j * j + 2 * m * j);
  return sum;
}

PAdic padic(long p, const BigInt& x) {
  if (p < 2 || mpz_probab_prime_p(BigInt(p).get_mpz_t(), 30) == 0) throw NotPrime(std::to_string(p) + " is not prime");
  if (x < 1) throw std::invalid_argument("padic needs a positive integer");
  PAdic r{0, 1};
  BigInt y = x;
  while (mpz_divisible_ui_p(y.get_mpz_t(), static_cast<unsigned long>(p))) {
    y /= p;
    ++r.v;
    r.V *= p;
  }
  return r;
}

namespace {

long v_factorial(long p, long n) {
  long v = 0;
  for (long pk = p; pk <= n; pk *= p) v += n / pk;
  return v;
}

BigInt ipow(long b, long e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(b), static_cast<unsigned long>(e));
  return r;
}

Rational rpow(const Rational& b, int e) {
  Rational r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

BigInt c_p_minus1(long p, int m, int n) {
  if (p % 2 == 0) throw std::invalid_argument("c_p_minus1 needs an odd prime");
  padic(p, 1);
  const int h = n / 2;
  const BigInt value = ipow(p, h + v_factorial(p, n) - v_factorial(p, h));
  return n % 2 ? BigInt((2 * m + 1) * value) : value;
}

namespace {

struct Instance {
  UPoly num;
  UPoly den;
  int point;
  Rational expected;
};

using Builder = std::function<Instance(const LimitParams&)>;

UPoly q_q2(int n) { return q_pochhammer(1, 1, 2, n); }
UPoly mq_q2(int n) { return q_pochhammer(-1, 1, 2, n); }
UPoly mq_q(int n) { return q_pochhammer(-1, 1, 1, n); }

Rational half(HalfInt h) {
  Rational r(h.twice(), 2);
  r.canonicalize();
  return r;
}

const std::vector<std::pair<std::string, Builder>>& table() {
  static const std::vector<std::pair<std::string, Builder>> t = {
      {"p-even",
       [](const LimitParams& a) {
         return Instance{f_sum_plain(2 * a.n, 0, 2 * a.m + 1, 2 * static_cast<int>(a.p)), mq_q(2 * a.n), -1,
                         Rational(ipow(a.p, a.n))};
       }},
      {"p-odd",
       [](const LimitParams& a) {
         return Instance{f_sum_plain(2 * a.n + 1, 0, 2 * a.m + 1, 2 * static_cast<int>(a.p)), mq_q(2 * a.n + 1), -1,
                         Rational(ipow(a.p, a.n) * (2 * a.m + 1))};
       }},
      {"alt-even",
       [](const LimitParams& a) {
         return Instance{f_sum(2 * a.n, 0, a.m, a.k), q_q2(a.n), 1, Rational(ipow(a.k, a.n))};
       }},
      {"alt-odd",
       [](const LimitParams& a) {
         return Instance{f_sum(2 * a.n + 1, 0, a.m, a.k), q_q2(a.n + 1), 1, Rational(ipow(a.k, a.n) * a.m)};
       }},
      {"neg-even",
       [](const LimitParams& a) {
         return Instance{f_sum_plain(2 * a.n, 0, 2 * a.m + 1, 2 * a.k), mq_q2(a.n), -1, Rational(ipow(2 * a.k, a.n))};
       }},
      {"neg-odd",
       [](const LimitParams& a) {
         return Instance{f_sum_plain(2 * a.n + 1, 0, 2 * a.m + 1, 2 * a.k), mq_q2(a.n + 1), -1,
                         Rational(ipow(2 * a.k, a.n) * (2 * a.m + 1))};
       }},
      {"quad-even",
       [](const LimitParams& a) {
         return Instance{f_sum(2 * a.n, a.r, a.m, a.k), q_q2(a.n), 1, rpow(Rational(a.k - a.r.twice()), a.n)};
       }},
      {"quad-odd",
       [](const LimitParams& a) {
         return Instance{f_sum(2 * a.n + 1, a.r, a.m, a.k), q_q2(a.n + 1), 1,
                         (half(a.r) * (2 * a.n + 1) + a.m) * rpow(Rational(a.k - a.r.twice()), a.n)};
       }},
      {"quad-neg-even",
       [](const LimitParams& a) {
         return Instance{f_sum_plain(2 * a.n, a.r, a.m, 2 * a.k), mq_q(2 * a.n), -1, rpow(a.k - half(a.r), a.n)};
       }},
      {"quad-neg-odd",
       [](const LimitParams& a) {
         return Instance{f_sum_plain(2 * a.n + 1, a.r, a.m, 2 * a.k), mq_q(2 * a.n + 1), -1,
                         (half(a.r) * (2 * a.n + 1) + a.m) * rpow(a.k - half(a.r), a.n)};
       }},
      {"quad-critical",
       [](const LimitParams& a) {
         return Instance{f_sum(2 * a.n, HalfInt::from_twice(a.k), a.m, a.k), q_q2(a.n), 1, Rational(a.n == 0 ? 1 : 0)};
       }},
      {"alt-even-mutated",
       [](const LimitParams& a) {
         return Instance{f_sum(2 * a.n, 0, a.m, a.k + 1), q_q2(a.n), 1, Rational(ipow(a.k, a.n))};
       }},
  };
  return t;
}

}  // namespace

const std::vector<std::string>& limit_ids() {
  static const std::vector<std::string> ids = {"p-even",     "p-odd",         "alt-even",     "alt-odd",
                                               "neg-even",   "neg-odd",       "quad-even",    "quad-odd",
                                               "quad-neg-even", "quad-neg-odd", "quad-critical"};
  return ids;
}

const std::vector<std::string>& limit_negative_controls() {
  static const std::vector<std::string> ids = {"alt-even-mutated"};
  return ids;
}

bool limit_params_valid(const std::string& id, const LimitParams& a) {
  if (a.n < 0 || a.m < 0 || a.k < 1 || a.r.twice() < 0) return false;
  if (id.starts_with("p-")) {
    try {
      padic(a.p, 1);
    } catch (const NotPrime&) {
      return false;
    }
  }
  if (id.starts_with("quad-neg")) return a.r.is_integer() && (a.r.as_integer() + a.m) % 2 == 1;
  return true;
}

Check limit_theorem_check(const std::string& id, const LimitParams& a) {
  const auto& t = table();
  auto it = std::find_if(t.begin(), t.end(), [&](const auto& e) { return e.first == id; });
  if (it == t.end()) throw UnknownIdentity("unknown limit theorem: " + id);
  Instance inst = it->second(a);
  inst.expected.canonicalize();
  Check c;
  c.id = id;
  c.params = {{"n", a.n}, {"m", a.m}, {"k", a.k}};
  if (id.starts_with("quad") && id != "quad-critical") c.params["r"] = to_json(half(a.r));
  if (id.starts_with("p-")) c.params["p"] = a.p;
  c.expected = to_json(inst.expected);
  try {
    const Rational got = exact_limit({inst.num, inst.den, inst.point});
    c.computed = to_json(got);
    c.pass = got == inst.expected;
  } catch (const OrderDeficit& e) {
    c.computed = nullptr;
    c.pass = false;
    c.witness = e.what();
  }
  if (id == "quad-critical") {
    // The sum is the product (q^{k/2+m}; q^k)_{2n}.
    const bool product = inst.num == q_pochhammer(1, HalfInt::from_twice(a.k + 2 * a.m), a.k, 2 * a.n);
    c.extra["product_form"] = product;
    c.pass = c.pass && product;
  }
  return c;
}

}  // namespace qrs
