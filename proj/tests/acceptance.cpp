// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 when any
// criterion fails.
#include "qrs/cheb.hpp"
#include "qrs/conjectures.hpp"
#include "qrs/hankel.hpp"
#include "qrs/limits.hpp"
#include "qrs/normalized.hpp"
#include "qrs/rogers.hpp"
#include "qrs/series.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

using namespace qrs;

namespace {

class Tally {
public:
  void add(const Check& c) {
    ++checks_;
    if (!c.pass && first_failure_.empty()) first_failure_ = c.id + " " + c.params.dump();
    failed_ += !c.pass;
  }
  void expect(bool ok, const std::string& what) {
    Check c;
    c.id = what;
    c.pass = ok;
    add(c);
  }
  /// A control counts once: it is detected when any of its rows fails.
  void control(const std::string& id, const std::vector<Check>& rows) {
    bool detected = false;
    for (const auto& c : rows) detected = detected || !c.pass;
    expect(detected, "control " + id + " undetected");
  }
  /// Runs f, turning exceptions into failures.
  void guard(const std::string& what, const std::function<void()>& f) {
    try {
      f();
    } catch (const std::exception& e) {
      expect(false, what + ": " + e.what());
    }
  }
  bool ok() const { return failed_ == 0 && checks_ > 0; }
  std::string summary() const {
    std::string s = std::to_string(checks_) + " checks, " + std::to_string(failed_) + " failed";
    if (!first_failure_.empty()) s += ", first: " + first_failure_;
    return s;
  }

private:
  long checks_ = 0;
  long failed_ = 0;
  std::string first_failure_;
};

void identities(Tally& t) {
  for (const auto& [name, id] : rs_special_ids())
    for (int n = 0; n <= 15; ++n) t.add(rs_special_check(id, n));
  for (const auto& id : rs_expansion_ids())
    for (int n = 0; n <= 10; ++n) t.add(rs_expansion(id, n));
  for (const auto& id : gf_catalog()) t.add(verify_gf_identity(id, 12));
}

void expansions(Tally& t) {
  for (const char* id : {"f-expansion", "F-even-expansion", "F-odd-expansion"})
    for (int n = 0; n <= 10; ++n) t.add(norm_check(id, n, 0));
}

void closed_forms(Tally& t) {
  for (const auto& [name, id] : kupershmidt_ids())
    for (int n = 0; n <= 8; ++n)
      for (int m = 0; m <= 8; ++m) t.add(kupershmidt_check(id, n, m));
  for (const char* id : {"T-factor", "U-factor", "V-factor"})
    for (int n = 1; n <= 8; ++n)
      for (int m = 0; m <= 8; ++m) t.add(cheb_check(id, n, m));
  for (int n = 0; n <= 12; ++n)
    t.expect(kupershmidt_closed(Kupershmidt::f_odd_power, n, 1) == UPoly(1) - UPoly::q_pow(1) + UPoly::q_pow(n + 1),
             "f(n, q^3, q) at n = " + std::to_string(n));
}

void limit_grid(Tally& t, const std::string& id, const LimitParams& p) {
  if (limit_params_valid(id, p)) t.add(limit_theorem_check(id, p));
}

void limits(Tally& t) {
  for (int n = 0; n <= 3; ++n) {
    for (int m = 0; m <= 4; ++m)
      for (int k = 1; k <= 4; ++k)
        for (const char* id : {"alt-even", "alt-odd"}) limit_grid(t, id, {n, m, k, 0, 3});
    for (int m = 0; m <= 3; ++m)
      for (int k = 1; k <= 6; ++k) {
        for (const char* id : {"neg-even", "neg-odd"}) limit_grid(t, id, {n, m, k, 0, 3});
        for (int r2 = 0; r2 <= 6; ++r2) {
          const HalfInt r = HalfInt::from_twice(r2);
          if (k > r2)
            for (const char* id : {"quad-even", "quad-odd"}) limit_grid(t, id, {n, m, k, r, 3});
          if (r2 % 2 == 0 && (r2 / 2 + m) % 2 == 1)
            for (const char* id : {"quad-neg-even", "quad-neg-odd"}) limit_grid(t, id, {n, m, k, r, 3});
        }
      }
    for (long p : {3L, 5L})
      for (int m = 0; m <= 4; ++m)
        for (int k = 1; k <= 4; ++k)
          for (const char* id : {"p-even", "p-odd"}) limit_grid(t, id, {n, m, k, 0, p});
  }
}

void scans(Tally& t) {
  for (int n = 0; n <= 12; ++n)
    for (int m = 0; m <= 6; ++m)
      for (int k = 0; k <= 3; ++k) t.add(to_check(binary_tuple(n, m, k)));
  for (long p : {2L, 3L, 5L, 7L})
    for (int n = 0; n <= 12; ++n)
      for (int m = 0; m <= 6; ++m) t.add(to_check(prime_tuple(p, n, m)));
  for (long p : {3L, 5L, 7L})
    for (int m = 0; m <= 3; ++m)
      for (int n = 0; n <= 10; ++n) {
        const ScanResult r = cofactor_tuple(p, m, n);
        t.add(to_check(r));
        const std::string at = " p=" + std::to_string(p) + " m=" + std::to_string(m) + " n=" + std::to_string(n);
        t.expect(r.holds && r.witness.eval_q(1) == 1, "cofactor at q = 1" + at);
        t.expect(r.holds && r.witness.eval_q(-1) == Rational(c_p_minus1(p, m, n)), "cofactor at q = -1" + at);
      }
  const long listed[] = {1, 5, 3, 45, 27, 135, 81, 405, 243, 5 * 2187};
  for (int n = 0; n <= 9; ++n) {
    const ScanResult r = cofactor_tuple(3, 2, n);
    t.expect(c_p_minus1(3, 2, n) == listed[n] && r.witness.eval_q(-1) == listed[n],
             "listed cofactor value at n = " + std::to_string(n));
  }
}

void hankel(Tally& t) {
  const std::pair<Family, int> grid[] = {{Family::rs, 5}, {Family::f, 4}, {Family::F_even, 3}, {Family::F_odd, 3},
                                         {Family::F, 4}};
  for (const auto& [f, top] : grid)
    for (int n = 0; n <= top; ++n) t.add(hankel_check(f, n));
  t.add(hankel_suite_check("spot-d1", 1));
  t.add(hankel_suite_check("spot-D1", 1));
}

void moments(Tally& t) {
  const std::pair<Family, int> table[] = {{Family::rs, 8}, {Family::h, 6}, {Family::H, 6}};
  for (const auto& [f, top] : table)
    for (int n = 0; n <= top; ++n) t.add(moment_identity_check(f, n));
  for (Family f : all_families())
    for (int n = 0; n <= 5; ++n) t.add(orthogonality_check(f, n));
  for (Family f : {Family::rs, Family::h, Family::H})
    for (int n = 0; n <= 5; ++n) t.add(orth_poly_check(f, n));
}

void vanishing(Tally& t) {
  for (Family f : {Family::f, Family::F, Family::F_even, Family::F_odd})
    for (int m = 0; m <= 3; ++m)
      for (int n = 0; n <= vanishing_start(f, m) + 1; ++n) t.add(vanishing_check(f, m, n));
}

void controls(Tally& t) {
  for (const auto& id : gf_negative_controls()) t.control(id, {verify_gf_identity(id, 12)});
  for (const auto& id : rs_negative_controls()) {
    std::vector<Check> rows;
    for (int n = 0; n <= 10; ++n) rows.push_back(rs_check(id, n));
    t.control(id, rows);
  }
  for (const auto& id : norm_negative_controls()) {
    std::vector<Check> rows;
    for (int n = 0; n <= 8; ++n) rows.push_back(norm_check(id, n, 0));
    t.control(id, rows);
  }
  for (const auto& id : cheb_negative_controls()) {
    std::vector<Check> rows;
    for (int n = 1; n <= 4; ++n)
      for (int m = 2; m <= 6; ++m) rows.push_back(cheb_check(id, n, m));
    t.control(id, rows);
  }
  for (const auto& id : limit_negative_controls()) {
    std::vector<Check> rows;
    for (int n = 0; n <= 3; ++n)
      for (int k = 1; k <= 4; ++k) rows.push_back(limit_theorem_check(id, {n, 1, k, 0, 3}));
    t.control(id, rows);
  }
  {
    std::vector<Check> rows;
    for (int n = 0; n <= 12; ++n)
      for (int m = 1; m <= 6; ++m) rows.push_back(to_check(binary_overreach_tuple(n, m, 1)));
    t.control("binary-overreach", rows);
  }
  for (const auto& id : hankel_negative_controls()) {
    std::vector<Check> rows;
    for (int n = 0; n <= 3; ++n) rows.push_back(hankel_suite_check(id, n));
    t.control(id, rows);
  }
}

}  // namespace

int main() {
  const std::pair<const char*, void (*)(Tally&)> criteria[] = {
      {"Rogers-Szego identities and generating functions", identities},
      {"normalized expansions", expansions},
      {"closed forms and q-Chebyshev factorizations", closed_forms},
      {"exact limits at q = 1 and q = -1", limits},
      {"divisibility scans", scans},
      {"Hankel determinants", hankel},
      {"moments and orthogonal polynomials", moments},
      {"vanishing determinants", vanishing},
      {"negative controls", controls},
  };
  bool all = true;
  int index = 1;
  for (const auto& [name, run] : criteria) {
    Tally t;
    const auto start = std::chrono::steady_clock::now();
    t.guard(name, [&] { run(t); });
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %d: %s %s (%s, %.1f s)\n", index++, t.ok() ? "PASS" : "FAIL", name, t.summary().c_str(),
                secs);
    std::fflush(stdout);
    all = all && t.ok();
  }
  return all ? 0 : 1;
}
