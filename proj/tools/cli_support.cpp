#include "cli_support.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <charconv>
#include <random>
#include <set>
#include <sstream>
#include <thread>

namespace qrs::cli {

namespace {

long parse_long(const std::string& s) {
  long v = 0;
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (s.empty() || ec != std::errc() || ptr != end) throw UsageError("not an integer: '" + s + "'");
  return v;
}

}  // namespace

std::vector<long> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) return {parse_long(text)};
  const long a = parse_long(text.substr(0, dots));
  const long b = parse_long(text.substr(dots + 2));
  if (b - a > 100000) throw UsageError("range too long: " + text);
  std::vector<long> v;
  for (long x = a; x <= b; ++x) v.push_back(x);
  return v;
}

Grid Grid::parse(const std::string& text) {
  Grid g;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("grid axis must be name=a..b: '" + item + "'");
    const std::string name = item.substr(0, eq);
    std::vector<long> values = parse_range(item.substr(eq + 1));
    auto it = std::find_if(g.axes_.begin(), g.axes_.end(), [&](const auto& a) { return a.first == name; });
    if (it == g.axes_.end())
      g.axes_.emplace_back(name, std::move(values));
    else
      it->second.insert(it->second.end(), values.begin(), values.end());
  }
  return g;
}

bool Grid::has(const std::string& name) const {
  return std::any_of(axes_.begin(), axes_.end(), [&](const auto& a) { return a.first == name; });
}

void Grid::set(const std::string& name, std::vector<long> values) {
  for (auto& a : axes_)
    if (a.first == name) {
      a.second = std::move(values);
      return;
    }
  axes_.emplace_back(name, std::move(values));
}

void Grid::default_axis(const std::string& name, std::vector<long> values) {
  if (!has(name)) axes_.emplace_back(name, std::move(values));
}

void Grid::require_only(const std::vector<std::string>& allowed) const {
  for (const auto& a : axes_)
    if (std::find(allowed.begin(), allowed.end(), a.first) == allowed.end())
      throw UsageError("unknown grid axis '" + a.first + "'");
}

std::vector<Grid::Tuple> Grid::tuples() const {
  std::vector<Tuple> out = {Tuple{}};
  for (const auto& [name, values] : axes_) {
    std::vector<Tuple> next;
    for (const auto& t : out)
      for (long v : values) {
        Tuple u = t;
        u[name] = v;
        next.push_back(std::move(u));
      }
    out = std::move(next);
  }
  if (axes_.empty()) out.clear();
  return out;
}

std::vector<Grid::Tuple> sample(std::vector<Grid::Tuple> tuples, size_t k, unsigned long seed) {
  if (k >= tuples.size()) return tuples;
  std::mt19937_64 rng(seed);
  std::vector<size_t> idx(tuples.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::shuffle(idx.begin(), idx.end(), rng);
  idx.resize(k);
  std::sort(idx.begin(), idx.end());
  std::vector<Grid::Tuple> out;
  for (size_t i : idx) out.push_back(std::move(tuples[i]));
  return out;
}

std::vector<Check> run_tasks(const std::vector<Task>& tasks, int jobs) {
  std::vector<Check> out(tasks.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next++; i < tasks.size(); i = next++) {
      try {
        out[i] = tasks[i].run();
      } catch (const std::invalid_argument& e) {
        out[i] = Check{};
        out[i].id = tasks[i].id;
        out[i].params = tasks[i].params;
        out[i].extra["skipped"] = e.what();
      } catch (const std::exception& e) {
        out[i] = Check{};
        out[i].id = tasks[i].id;
        out[i].params = tasks[i].params;
        out[i].pass = false;
        out[i].witness = std::string("error: ") + e.what();
      }
    }
  };
  const int n = std::max(1, std::min<int>(jobs, static_cast<int>(tasks.size())));
  std::vector<std::thread> pool;
  for (int i = 1; i < n; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

std::vector<Check> dedupe(std::vector<Check> rows) {
  std::set<std::string> seen;
  std::vector<Check> out;
  for (auto& c : rows)
    if (seen.insert(c.id + "\n" + c.params.dump()).second) out.push_back(std::move(c));
  return out;
}

Outcome collect(const std::vector<Task>& tasks, std::vector<Check> results) {
  Outcome out;
  for (size_t i = 0; i < tasks.size(); ++i) {
    Check& c = results[i];
    if (c.extra.contains("skipped")) {
      out.skipped.push_back({{"id", c.id}, {"params", c.params}, {"reason", c.extra["skipped"]}});
      continue;
    }
    (tasks[i].control ? out.controls : out.rows).push_back(std::move(c));
  }
  out.rows = dedupe(std::move(out.rows));
  out.controls = dedupe(std::move(out.controls));
  return out;
}

std::vector<std::string> undetected_controls(const std::vector<Check>& controls) {
  std::vector<std::string> ids;
  std::set<std::string> detected;
  for (const auto& c : controls) {
    if (std::find(ids.begin(), ids.end(), c.id) == ids.end()) ids.push_back(c.id);
    if (!c.pass) detected.insert(c.id);
  }
  std::vector<std::string> out;
  for (const auto& id : ids)
    if (!detected.count(id)) out.push_back(id);
  return out;
}

int exit_code(const Outcome& out) { return all_pass(out.rows) && undetected_controls(out.controls).empty() ? 0 : 1; }

RatFunc parse_q_expr(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw UsageError("empty expression");
  size_t i = 0;
  auto fail = [&] { return UsageError("cannot parse q-expression '" + text + "'"); };
  auto number = [&]() -> long {
    const size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (start == i) throw fail();
    return parse_long(s.substr(start, i - start));
  };
  std::vector<RatFunc> terms;
  while (i < s.size()) {
    long sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (!terms.empty()) {
      throw fail();
    }
    RatFunc c = sign;
    bool coeff = false;
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      c = c * RatFunc(number());
      if (i < s.size() && s[i] == '/') {
        ++i;
        const long d = number();
        if (d == 0) throw fail();
        c = c / RatFunc(d);
      }
      coeff = true;
      if (i < s.size() && s[i] == '*') ++i;
    }
    if (i < s.size() && s[i] == 'q') {
      ++i;
      long twice = 2;
      if (i < s.size() && s[i] == '^') {
        ++i;
        const bool paren = i < s.size() && s[i] == '(';
        if (paren) ++i;
        long esign = 1;
        if (i < s.size() && s[i] == '-') {
          esign = -1;
          ++i;
        }
        const long e = number();
        twice = 2 * esign * e;
        if (paren) {
          if (i + 2 < s.size() && s[i] == '/' && s[i + 1] == '2') {
            twice = esign * e;
            i += 2;
          }
          if (i >= s.size() || s[i] != ')') throw fail();
          ++i;
        }
      }
      c = c * RatFunc::q_pow(HalfInt::from_twice(static_cast<int>(twice)));
    } else if (!coeff) {
      throw fail();
    }
    terms.push_back(c);
  }
  return RatFunc::sum(terms);
}

Json prettify(const Json& j) {
  auto is_poly = [](const Json& a) {
    if (!a.is_array() || a.empty()) return false;
    return std::all_of(a.begin(), a.end(), [](const Json& r) { return r.is_array() && r.size() == 5 && r[4].is_string(); });
  };
  auto poly = [&](const Json& a) { return a.is_array() && (a.empty() || is_poly(a)); };
  if (j.is_object() && j.size() == 2 && j.contains("num") && j.contains("den") && poly(j["num"]) && poly(j["den"]))
    return pretty(RatFunc(zpoly_from_json(j["num"]), zpoly_from_json(j["den"])));
  if (is_poly(j)) return pretty(zpoly_from_json(j));
  if (j.is_object()) {
    Json out = Json::object();
    for (const auto& [k, v] : j.items()) out[k] = prettify(v);
    return out;
  }
  if (j.is_array()) {
    Json out = Json::array();
    for (const auto& v : j) out.push_back(prettify(v));
    return out;
  }
  return j;
}

Json report(const std::string& suite, const Outcome& out, bool pretty_values) {
  auto rows = [&](const std::vector<Check>& v) {
    Json a = Json::array();
    for (const auto& c : v) a.push_back(pretty_values ? prettify(to_json(c)) : to_json(c));
    return a;
  };
  Json j = {{"tool_version", kToolVersion}, {"suite", suite}, {"rows", rows(out.rows)}};
  if (!out.controls.empty()) {
    Json undetected = Json::array();
    for (const auto& id : undetected_controls(out.controls)) undetected.push_back(id);
    j["controls"] = {{"rows", rows(out.controls)}, {"undetected", undetected}};
  }
  const auto passed = std::count_if(out.rows.begin(), out.rows.end(), [](const Check& c) { return c.pass; });
  j["summary"] = {{"rows", out.rows.size()},
                  {"passed", passed},
                  {"failed", static_cast<long>(out.rows.size()) - passed},
                  {"controls", out.controls.size()},
                  {"skipped", out.skipped.size()}};
  if (!out.skipped.empty()) j["skipped"] = out.skipped;
  return j;
}

namespace {

std::string csv_field(const Json& v) {
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  return q + "\"";
}

std::string params_text(const Json& p) {
  std::string s;
  for (const auto& [k, v] : p.items()) {
    if (!s.empty()) s += ";";
    s += k + "=" + (v.is_string() ? v.get<std::string>() : v.dump());
  }
  return s;
}

}  // namespace

std::string csv(const Outcome& out, bool pretty_values) {
  std::ostringstream os;
  os << "id,params,pass,control,expected,computed,witness\n";
  auto emit = [&](const Check& c, bool control) {
    auto value = [&](const Json& v) { return csv_field(pretty_values ? prettify(v) : v); };
    os << csv_field(c.id) << ',' << csv_field(params_text(c.params)) << ',' << (c.pass ? "true" : "false") << ','
       << (control ? "true" : "false") << ',' << value(c.expected) << ',' << value(c.computed) << ','
       << value(c.witness) << '\n';
  };
  for (const auto& c : out.rows) emit(c, false);
  for (const auto& c : out.controls) emit(c, true);
  return os.str();
}

}  // namespace qrs::cli
