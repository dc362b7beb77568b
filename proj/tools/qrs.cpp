// qrs: identity suites, limit grids, conjecture scans and Hankel reports.
#include "cli_support.hpp"

#include "qrs/cheb.hpp"
#include "qrs/conjectures.hpp"
#include "qrs/hankel.hpp"
#include "qrs/limits.hpp"
#include "qrs/normalized.hpp"
#include "qrs/rogers.hpp"
#include "qrs/series.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <thread>

using namespace qrs;
using namespace qrs::cli;

namespace {

struct Common {
  std::string out;
  std::string format = "json";
  int jobs = 1;
  unsigned long seed = 0;
  size_t sample = 0;
  bool pretty = false;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--out", c.out, "Write the report to this file instead of stdout");
  cmd->add_option("--format", c.format, "Report format")->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--jobs", c.jobs, "Worker threads")->check(CLI::PositiveNumber);
  cmd->add_option("--seed", c.seed, "Seed for --sample");
  cmd->add_option("--sample", c.sample, "Check only this many tuples of the grid, chosen with --seed");
  cmd->add_flag("--pretty", c.pretty, "Render polynomials as readable q-expressions");
}

struct Suite {
  std::vector<std::string> ids;
  std::vector<std::string> controls;

  bool is_control(const std::string& id) const {
    return std::find(controls.begin(), controls.end(), id) != controls.end();
  }
  /// The requested id, or every id and control when none was given.
  std::vector<std::string> select(const std::string& id) const {
    if (id.empty()) {
      std::vector<std::string> all = ids;
      all.insert(all.end(), controls.begin(), controls.end());
      return all;
    }
    if (std::find(ids.begin(), ids.end(), id) == ids.end() && !is_control(id))
      throw UsageError("unknown id '" + id + "'");
    return {id};
  }
};

std::vector<Grid::Tuple> thin(const Common& c, std::vector<Grid::Tuple> tuples) {
  return c.sample ? sample(std::move(tuples), c.sample, c.seed) : tuples;
}

int emit(const std::string& suite, const Common& c, const std::vector<Task>& tasks) {
  const Outcome out = collect(tasks, run_tasks(tasks, c.jobs));
  const std::string text = c.format == "csv" ? csv(out, c.pretty) : report(suite, out, c.pretty).dump(2) + "\n";
  if (c.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(c.out, std::ios::binary);
    if (!f) throw UsageError("cannot write " + c.out);
    f << text;
    const auto failed = std::count_if(out.rows.begin(), out.rows.end(), [](const Check& r) { return !r.pass; });
    std::cout << suite << ": " << out.rows.size() << " rows, " << failed << " failed, " << out.controls.size()
              << " control rows, " << undetected_controls(out.controls).size() << " undetected controls\n";
  }
  return exit_code(out);
}

Json tuple_json(const Grid::Tuple& t) {
  Json j = Json::object();
  for (const auto& [k, v] : t) j[k] = v;
  return j;
}

// verify gf|rs|norm|cheb

struct VerifyArgs {
  std::string id;
  int order = 12;
  std::string n;
  std::string m;
};

int cmd_gf(const VerifyArgs& a, const Common& c) {
  const Suite s{gf_catalog(), gf_negative_controls()};
  std::vector<Task> tasks;
  for (const auto& id : s.select(a.id))
    tasks.push_back({id, {{"order", a.order}}, s.is_control(id), [id, o = a.order] { return verify_gf_identity(id, o); }});
  return emit("gf", c, tasks);
}

std::vector<std::string> rs_ids() {
  std::vector<std::string> ids;
  for (const auto& [name, v] : rs_special_ids()) ids.push_back(name);
  for (const auto& id : rs_expansion_ids()) ids.push_back(id);
  return ids;
}

int cmd_rs(const VerifyArgs& a, const Common& c) {
  const Suite s{rs_ids(), rs_negative_controls()};
  Grid g;
  g.set("n", parse_range(a.n.empty() ? "0..10" : a.n));
  std::vector<Task> tasks;
  for (const auto& id : s.select(a.id))
    for (const auto& t : thin(c, g.tuples())) {
      const int n = static_cast<int>(t.at("n"));
      tasks.push_back({id, tuple_json(t), s.is_control(id), [id, n] { return rs_check(id, n); }});
    }
  return emit("rs", c, tasks);
}

template <class Fn>
int cmd_nm(const std::string& suite, const Suite& s, const VerifyArgs& a, const Common& c, Fn check) {
  Grid g;
  g.set("n", parse_range(a.n.empty() ? "0..8" : a.n));
  g.set("m", parse_range(a.m.empty() ? "0..8" : a.m));
  std::vector<Task> tasks;
  for (const auto& id : s.select(a.id))
    for (const auto& t : thin(c, g.tuples())) {
      const int n = static_cast<int>(t.at("n")), m = static_cast<int>(t.at("m"));
      tasks.push_back({id, tuple_json(t), s.is_control(id), [id, n, m, check] { return check(id, n, m); }});
    }
  return emit(suite, c, tasks);
}

// limits

struct LimitArgs {
  std::string id;
  std::string grid;
};

int cmd_limits(const LimitArgs& a, const Common& c) {
  const Suite s{limit_ids(), limit_negative_controls()};
  Grid g = Grid::parse(a.grid);
  g.require_only({"n", "m", "k", "r", "p"});
  g.default_axis("n", parse_range("0..3"));
  g.default_axis("m", parse_range("0..4"));
  g.default_axis("k", parse_range("1..4"));
  g.default_axis("r", {0});
  g.default_axis("p", {3});
  const auto tuples = thin(c, g.tuples());
  std::vector<Task> tasks;
  for (const auto& id : s.select(a.id)) {
    // Ids that ignore r or p run once, at the first value of that axis.
    const bool uses_r = id.starts_with("quad") && id != "quad-critical";
    const bool uses_p = id.starts_with("p-");
    for (const auto& t : tuples) {
      if ((!uses_r && t.at("r") != tuples.front().at("r")) || (!uses_p && t.at("p") != tuples.front().at("p"))) continue;
      LimitParams lp;
      lp.n = static_cast<int>(t.at("n"));
      lp.m = static_cast<int>(t.at("m"));
      lp.k = static_cast<int>(t.at("k"));
      lp.r = static_cast<int>(t.at("r"));
      lp.p = t.at("p");
      Task task{id, tuple_json(t), s.is_control(id), {}};
      if (!limit_params_valid(id, lp)) {
        task.run = []() -> Check { throw std::invalid_argument("outside the domain of the statement"); };
      } else {
        task.run = [id, lp] { return limit_theorem_check(id, lp); };
      }
      tasks.push_back(std::move(task));
    }
  }
  return emit("limits", c, tasks);
}

// scan

struct ScanArgs {
  std::string conjecture;
  std::string grid;
  std::string p, n, m, k;
};

int cmd_scan(const ScanArgs& a, const Common& c) {
  const Conjecture which = conjecture_from_name(a.conjecture);
  Grid g = Grid::parse(a.grid);
  const std::vector<std::pair<std::string, std::string>> axes = {{"p", a.p}, {"n", a.n}, {"m", a.m}, {"k", a.k}};
  for (const auto& [name, text] : axes)
    if (!text.empty()) g.set(name, parse_range(text));
  std::vector<Task> tasks;
  auto row = [](ScanResult r) {
    Check ch = to_check(r);
    ch.extra["verdict"] = r.holds ? "holds" : "fails";
    return ch;
  };
  switch (which) {
    case Conjecture::binary:
      g.require_only({"n", "m", "k"});
      g.default_axis("n", parse_range("0..12"));
      g.default_axis("m", parse_range("0..6"));
      g.default_axis("k", parse_range("0..3"));
      break;
    case Conjecture::prime:
      g.require_only({"p", "n", "m"});
      g.default_axis("p", {2, 3, 5, 7});
      g.default_axis("n", parse_range("0..12"));
      g.default_axis("m", parse_range("0..6"));
      break;
    case Conjecture::cofactor:
      g.require_only({"p", "m", "n"});
      g.default_axis("p", {3, 5, 7});
      g.default_axis("m", parse_range("0..3"));
      g.default_axis("n", parse_range("0..10"));
      break;
  }
  const auto tuples = thin(c, g.tuples());
  for (const auto& t : tuples) {
    const int n = static_cast<int>(t.at("n")), m = static_cast<int>(t.at("m"));
    const std::string name = conjecture_name(which);
    if (which == Conjecture::binary) {
      const int k = static_cast<int>(t.at("k"));
      tasks.push_back({name, tuple_json(t), false, [=] { return row(binary_tuple(n, m, k)); }});
    } else if (which == Conjecture::prime) {
      const long p = t.at("p");
      tasks.push_back({name, tuple_json(t), false, [=] { return row(prime_tuple(p, n, m)); }});
    } else {
      const long p = t.at("p");
      tasks.push_back({name, tuple_json(t), false, [=] { return row(cofactor_tuple(p, m, n)); }});
    }
  }
  if (which == Conjecture::binary)
    for (const auto& t : tuples) {
      const int n = static_cast<int>(t.at("n")), m = static_cast<int>(t.at("m")), k = static_cast<int>(t.at("k"));
      if (m < 1) continue;
      tasks.push_back({"binary-overreach", tuple_json(t), true, [=] {
                         Check ch = row(binary_overreach_tuple(n, m, k));
                         ch.id = "binary-overreach";
                         return ch;
                       }});
    }
  return emit("scan-" + conjecture_name(which), c, tasks);
}

// hankel

struct HankelArgs {
  std::string family;
  std::string id;
  std::string n;
  std::string m;
  std::string s_val;
  std::string t_val;
};

Check specialized(Family f, int n, const std::optional<RatFunc>& s, const std::optional<RatFunc>& t, const Json& params) {
  auto at = [&](RatFunc r) {
    if (s) r = r.subst(Var::s, *s);
    if (t) r = r.subst(Var::t, *t);
    return r;
  };
  std::vector<RatFunc> moments;
  for (int k = 0; k <= 2 * n; ++k) moments.push_back(at(moment(f, k)));
  const RatFunc det = hankel_det(moments, n);
  Check c;
  c.id = "det-" + family_name(f);
  c.params = params;
  c.computed = to_json(det);
  bool ok = true;
  try {
    const RatFunc prod = at(tau_product(sigma_tau(f), n));
    c.expected = to_json(prod);
    c.extra["product_agrees"] = det == prod;
    ok = det == prod;
    if (!ok) c.witness = to_json(det - prod);
  } catch (const std::domain_error& e) {
    c.extra["product_agrees"] = nullptr;
    c.extra["product_note"] = std::string("undefined at this point: ") + e.what();
  }
  if (has_closed_form(f)) {
    try {
      const RatFunc closed = at(closed_hankel(f, n));
      c.extra["closed"] = to_json(closed);
      c.extra["closed_agrees"] = det == closed;
      ok = ok && det == closed;
    } catch (const std::domain_error& e) {
      c.extra["closed_agrees"] = nullptr;
      c.extra["closed_note"] = std::string("undefined at this point: ") + e.what();
    }
  }
  c.pass = ok;
  return c;
}

int cmd_hankel(const HankelArgs& a, const Common& c) {
  if (a.family.empty() == a.id.empty()) throw UsageError("give exactly one of --family and --id");
  Grid g;
  g.set("n", parse_range(a.n.empty() ? "0..3" : a.n));
  std::vector<Task> tasks;
  if (!a.family.empty()) {
    const Family f = family_from_name(a.family);
    std::optional<RatFunc> s, t;
    if (!a.s_val.empty()) s = parse_q_expr(a.s_val);
    if (!a.t_val.empty()) t = parse_q_expr(a.t_val);
    for (const auto& tup : thin(c, g.tuples())) {
      const int n = static_cast<int>(tup.at("n"));
      Json params = tuple_json(tup);
      if (s) params["s"] = a.s_val;
      if (t) params["t"] = a.t_val;
      const std::string id = "det-" + family_name(f);
      if (s || t)
        tasks.push_back({id, params, false, [=] { return specialized(f, n, s, t, params); }});
      else
        tasks.push_back({id, params, false, [=] { return hankel_check(f, n); }});
    }
    return emit("hankel", c, tasks);
  }
  if (!a.s_val.empty() || !a.t_val.empty()) throw UsageError("--s-val and --t-val need --family");
  const Suite s{hankel_ids(), hankel_negative_controls()};
  const std::string id = s.select(a.id).front();
  const bool uses_m = id.starts_with("vanish-") || id == "recurrence-vanishing";
  if (uses_m) g.set("m", parse_range(a.m.empty() ? "0..3" : a.m));
  for (const auto& tup : thin(c, g.tuples())) {
    const int n = static_cast<int>(tup.at("n"));
    const int m = uses_m ? static_cast<int>(tup.at("m")) : 0;
    tasks.push_back({id, tuple_json(tup), s.is_control(id), [=] { return hankel_suite_check(id, n, m); }});
  }
  return emit("hankel", c, tasks);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of Rogers-Szego identities, limits, divisibility scans and Hankel determinants"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  Common common;
  common.jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));

  auto* verify = app.add_subcommand("verify", "Run an identity suite");
  verify->require_subcommand(1);
  VerifyArgs va;
  LimitArgs la;
  struct Sub {
    const char* name;
    const char* help;
  };
  for (const Sub& sub : {Sub{"gf", "Generating-function catalog"}, Sub{"rs", "Rogers-Szego special values and expansions"},
                         Sub{"norm", "Normalized polynomials f, F, h, H"}, Sub{"cheb", "q-Chebyshev polynomials"}}) {
    auto* cmd = verify->add_subcommand(sub.name, sub.help);
    cmd->add_option("--id", va.id, "Identity id (default: all ids and the negative controls)");
    if (std::string(sub.name) == "gf") {
      cmd->add_option("--order", va.order, "Truncation order")->check(CLI::NonNegativeNumber);
    } else {
      cmd->add_option("--n", va.n, "Range a..b or a single value");
      if (std::string(sub.name) != "rs") cmd->add_option("--m", va.m, "Range a..b or a single value");
    }
    add_common(cmd, common);
  }
  auto add_limits = [&](CLI::App* parent) {
    auto* cmd = parent->add_subcommand("limits", "Limit theorems at q = 1 and q = -1");
    cmd->add_option("--id", la.id, "Limit id (default: all ids and the negative control)");
    cmd->add_option("--grid", la.grid, "Axes n, m, k, r, p as name=a..b, comma-separated");
    add_common(cmd, common);
    return cmd;
  };
  auto* verify_limits = add_limits(verify);
  auto* limits = add_limits(&app);

  ScanArgs sa;
  auto* scan = app.add_subcommand("scan", "Divisibility scans (binary, prime, cofactor)");
  scan->add_option("--conjecture", sa.conjecture, "binary, prime or cofactor")->required();
  scan->add_option("--grid", sa.grid, "Axes as name=a..b, comma-separated");
  scan->add_option("--p", sa.p, "Range for p");
  scan->add_option("--n", sa.n, "Range for n");
  scan->add_option("--m", sa.m, "Range for m");
  scan->add_option("--k", sa.k, "Range for k");
  add_common(scan, common);

  HankelArgs ha;
  auto* hankel = app.add_subcommand("hankel", "Hankel determinants and the moment machinery");
  hankel->add_option("--family", ha.family, "rs, f, h, H, F-even, F-odd or F");
  hankel->add_option("--id", ha.id, "Check id instead of a family determinant");
  hankel->add_option("--n", ha.n, "Range for n (default 0..3)");
  hankel->add_option("--m", ha.m, "Range for m (vanishing checks)");
  hankel->add_option("--s-val", ha.s_val, "Value for s, for example q^3 or -1/2*q");
  hankel->add_option("--t-val", ha.t_val, "Value for t");
  add_common(hankel, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (verify->parsed()) {
      if (verify_limits->parsed()) return cmd_limits(la, common);
      const std::string which = verify->get_subcommands().front()->get_name();
      if (which == "gf") return cmd_gf(va, common);
      if (which == "rs") return cmd_rs(va, common);
      if (which == "norm") return cmd_nm("norm", Suite{norm_ids(), norm_negative_controls()}, va, common, norm_check);
      return cmd_nm("cheb", Suite{cheb_ids(), cheb_negative_controls()}, va, common, cheb_check);
    }
    if (limits->parsed()) return cmd_limits(la, common);
    if (scan->parsed()) return cmd_scan(sa, common);
    if (hankel->parsed()) return cmd_hankel(ha, common);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
