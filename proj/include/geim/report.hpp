#pragma once

// Check records, suite reports, and the Checker helper the suites use to
// assert chains, monotonicity, curvature, and containment with a uniform
// slack policy.

#include <cstddef>
#include <functional>
#include <limits>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace geim::harness {

using Inputs = std::vector<std::pair<std::string, double>>;

struct CheckRecord {
  std::string suite_id;
  Inputs inputs;
  std::vector<double> sides;
  double margin = 0.0;
  bool pass = true;
  double slack_used = 0.0;
  std::string note;
};

struct SuiteReport {
  std::string suite_id;
  std::size_t total = 0;           // points checked
  std::size_t failure_count = 0;
  std::vector<CheckRecord> failures;  // stored failures (capped)
  double min_margin = std::numeric_limits<double>::infinity();
  double wall_seconds = 0.0;
  std::vector<std::string> notes;  // non-failing findings

  bool passed() const { return failure_count == 0; }
};

// Accumulates checks for one suite. Strict inequalities are asserted up to
// slack * max(1, |lhs|, |rhs|); margins are recorded so near-equalities stay
// visible.
class Checker {
 public:
  Checker(std::string suite_id, double slack);

  double slack() const { return slack_; }

  // sides must be ascending; margin is the smallest adjacent gap.
  void chain(const Inputs& in, const std::vector<double>& sides);
  // |lhs - rhs| <= tol * max(1, |lhs|, |rhs|).
  void equality(const Inputs& in, double lhs, double rhs, double tol, const char* what);
  // |value - reference| <= tol * max(1, |reference|) (absolute when the
  // reference magnitude is below 1).
  void close(const Inputs& in, double value, double reference, double tol, const char* what);
  void monotone(const Inputs& in, const std::vector<double>& vals, bool increasing);
  // Sign of the second divided difference on an arbitrary grid.
  void curvature(const Inputs& in, const std::vector<double>& xs,
                 const std::vector<double>& vals, bool convex);
  // Open-interval containment, never crossed beyond slack.
  void bounded(const Inputs& in, double value, double lo, double hi);
  void check(const Inputs& in, bool condition, double margin, const char* what);
  void note(std::string text);

  // Runs fn, recording any thrown evaluation error as a failure.
  void guard(const Inputs& in, const std::function<void()>& fn);

  // Counts sign changes with hysteresis: values within tol of zero do not
  // flip the state.
  static int sign_changes(const std::vector<double>& vals, double tol);

  SuiteReport finish(double wall_seconds);

 private:
  void record(const Inputs& in, const std::vector<double>& sides, double margin, bool pass,
              double slack_used, std::string note);

  std::string suite_id_;
  double slack_;
  SuiteReport report_;
};

// Serialization used by the CLI. Numeric fields carry 17 significant digits;
// wall time is deliberately excluded so identical runs emit identical bytes.
void write_reports_csv(std::ostream& os, const std::vector<SuiteReport>& reports);
void write_reports_json(std::ostream& os, const std::vector<SuiteReport>& reports);

std::string format_double(double v);  // %.17g

}  // namespace geim::harness
