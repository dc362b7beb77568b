// Grid parsing, the worker pool and report emission shared by the qrs
// subcommands.
#pragma once

#include "qrs/report.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace qrs::cli {

inline constexpr const char* kToolVersion = "1.0.0";

class UsageError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// "a..b" or "a"; an empty range (b < a) is allowed.
std::vector<long> parse_range(const std::string& text);

/// Comma-separated name=range axes; a repeated name appends values.
class Grid {
public:
  static Grid parse(const std::string& text);

  bool has(const std::string& name) const;
  void set(const std::string& name, std::vector<long> values);
  /// Fills an axis that was not given.
  void default_axis(const std::string& name, std::vector<long> values);
  /// Throws UsageError for axes outside allowed.
  void require_only(const std::vector<std::string>& allowed) const;

  using Tuple = std::map<std::string, long>;
  /// Cartesian product, first axis outermost, values in the order given.
  std::vector<Tuple> tuples() const;

private:
  std::vector<std::pair<std::string, std::vector<long>>> axes_;
};

/// Keeps k tuples chosen by a seeded generator, in their original order.
std::vector<Grid::Tuple> sample(std::vector<Grid::Tuple> tuples, size_t k, unsigned long seed);

struct Task {
  std::string id;
  Json params = Json::object();
  bool control = false;
  std::function<Check()> run;
};

/// Runs the tasks on jobs threads; the result order is the task order.  A
/// task that throws becomes a failed check carrying the message, except
/// std::invalid_argument (parameters outside the statement's domain), which
/// marks the row with extra.skipped.
std::vector<Check> run_tasks(const std::vector<Task>& tasks, int jobs);

/// Drops rows whose (id, params) repeat an earlier row.
std::vector<Check> dedupe(std::vector<Check> rows);

struct Outcome {
  std::vector<Check> rows;
  std::vector<Check> controls;
  /// {id, params, reason} of tuples outside the domain of their statement.
  std::vector<Json> skipped;
};

/// Splits task results into rows, controls and skipped tuples.
Outcome collect(const std::vector<Task>& tasks, std::vector<Check> results);

/// A control id is detected when at least one of its rows fails.
std::vector<std::string> undetected_controls(const std::vector<Check>& controls);

/// 0 when every row passes and every control is detected, 1 otherwise.
int exit_code(const Outcome& out);

Json report(const std::string& suite, const Outcome& out, bool pretty);
std::string csv(const Outcome& out, bool pretty);

/// Sums of terms c, c*q^e and q^e with integer or rational c and e an
/// integer or a half-integer written (a/2); for example "-q^3", "1/2*q^(1/2)".
RatFunc parse_q_expr(const std::string& text);

/// Replaces serialized polynomials and quotients by readable strings.
Json prettify(const Json& j);

}  // namespace qrs::cli
