#include "geim/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>

#include "json.hpp"

namespace geim::harness {

namespace {

constexpr std::size_t kMaxStoredFailures = 50;

double pair_slack(double slack, double lo, double hi) {
  return slack * std::max({1.0, std::abs(lo), std::abs(hi)});
}

}  // namespace

Checker::Checker(std::string suite_id, double slack)
    : suite_id_(std::move(suite_id)), slack_(slack) {
  report_.suite_id = suite_id_;
}

void Checker::record(const Inputs& in, const std::vector<double>& sides, double margin,
                     bool pass, double slack_used, std::string note) {
  ++report_.total;
  if (std::isfinite(margin)) report_.min_margin = std::min(report_.min_margin, margin);
  if (!pass) {
    ++report_.failure_count;
    if (report_.failures.size() < kMaxStoredFailures) {
      report_.failures.push_back(
          CheckRecord{suite_id_, in, sides, margin, false, slack_used, std::move(note)});
    }
  }
}

void Checker::chain(const Inputs& in, const std::vector<double>& sides) {
  double margin = std::numeric_limits<double>::infinity();
  double used = 0.0;
  bool pass = true;
  for (std::size_t i = 0; i + 1 < sides.size(); ++i) {
    const double gap = sides[i + 1] - sides[i];
    const double tol = pair_slack(slack_, sides[i], sides[i + 1]);
    if (!std::isfinite(gap)) {
      pass = false;
      margin = -std::numeric_limits<double>::infinity();
      break;
    }
    if (gap < margin) {
      margin = gap;
      used = tol;
    }
    if (gap < -tol) pass = false;
  }
  record(in, sides, margin, pass, used, pass ? "" : "chain out of order");
}

void Checker::equality(const Inputs& in, double lhs, double rhs, double tol, const char* what) {
  const double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
  const double diff = std::abs(lhs - rhs);
  const double margin = tol * scale - diff;
  record(in, {lhs, rhs}, margin, margin >= 0.0, tol * scale,
         margin >= 0.0 ? "" : std::string("equality violated: ") + what);
}

void Checker::close(const Inputs& in, double value, double reference, double tol,
                    const char* what) {
  const double scale = std::max(1.0, std::abs(reference));
  const double margin = tol * scale - std::abs(value - reference);
  record(in, {value, reference}, margin, margin >= 0.0, tol * scale,
         margin >= 0.0 ? "" : std::string("not close: ") + what);
}

void Checker::monotone(const Inputs& in, const std::vector<double>& vals, bool increasing) {
  double margin = std::numeric_limits<double>::infinity();
  double used = 0.0;
  bool pass = true;
  for (std::size_t i = 0; i + 1 < vals.size(); ++i) {
    const double gap = increasing ? vals[i + 1] - vals[i] : vals[i] - vals[i + 1];
    const double tol = pair_slack(slack_, vals[i], vals[i + 1]);
    if (!std::isfinite(gap)) {
      pass = false;
      margin = -std::numeric_limits<double>::infinity();
      break;
    }
    if (gap < margin) {
      margin = gap;
      used = tol;
    }
    if (gap < -tol) pass = false;
  }
  record(in, {}, margin, pass, used, pass ? "" : "monotonicity violated");
}

void Checker::curvature(const Inputs& in, const std::vector<double>& xs,
                        const std::vector<double>& vals, bool convex) {
  double margin = std::numeric_limits<double>::infinity();
  double used = 0.0;
  bool pass = true;
  for (std::size_t i = 1; i + 1 < vals.size(); ++i) {
    const double h1 = xs[i] - xs[i - 1];
    const double h2 = xs[i + 1] - xs[i];
    const double dd =
        2.0 * ((vals[i + 1] - vals[i]) / h2 - (vals[i] - vals[i - 1]) / h1) / (h1 + h2);
    const double signed_dd = convex ? dd : -dd;
    // Divided differences amplify evaluation noise by ~1/(h1 h2).
    const double tol = slack_ * std::max(1.0, std::abs(vals[i])) * 8.0 / (h1 * h2);
    if (!std::isfinite(signed_dd)) {
      pass = false;
      margin = -std::numeric_limits<double>::infinity();
      break;
    }
    if (signed_dd < margin) {
      margin = signed_dd;
      used = tol;
    }
    if (signed_dd < -tol) pass = false;
  }
  record(in, {}, margin, pass, used, pass ? "" : (convex ? "not convex" : "not concave"));
}

void Checker::bounded(const Inputs& in, double value, double lo, double hi) {
  const double lo_gap = value - lo;
  const double hi_gap = hi - value;
  const double margin = std::min(lo_gap, hi_gap);
  const double tol = pair_slack(slack_, value, std::abs(margin) > 1.0 ? value : margin);
  const bool pass = std::isfinite(value) && lo_gap >= -tol && hi_gap >= -tol;
  record(in, {lo, value, hi}, margin, pass, tol, pass ? "" : "value escaped its range");
}

void Checker::check(const Inputs& in, bool condition, double margin, const char* what) {
  record(in, {}, margin, condition, slack_, condition ? "" : what);
}

void Checker::note(std::string text) { report_.notes.push_back(std::move(text)); }

void Checker::guard(const Inputs& in, const std::function<void()>& fn) {
  try {
    fn();
  } catch (const std::exception& e) {
    record(in, {}, -std::numeric_limits<double>::infinity(), false, slack_,
           std::string("evaluation error: ") + e.what());
  }
}

int Checker::sign_changes(const std::vector<double>& vals, double tol) {
  int changes = 0;
  int state = 0;  // -1, 0 (undetermined), +1
  for (double v : vals) {
    int s = 0;
    if (v > tol) s = 1;
    else if (v < -tol) s = -1;
    if (s == 0) continue;
    if (state != 0 && s != state) ++changes;
    state = s;
  }
  return changes;
}

SuiteReport Checker::finish(double wall_seconds) {
  report_.wall_seconds = wall_seconds;
  return std::move(report_);
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

std::string inputs_string(const Inputs& in) {
  std::string out;
  for (std::size_t i = 0; i < in.size(); ++i) {
    if (i) out += ';';
    out += in[i].first + "=" + format_double(in[i].second);
  }
  return out;
}

std::string sides_string(const std::vector<double>& sides) {
  std::string out;
  for (std::size_t i = 0; i < sides.size(); ++i) {
    if (i) out += ';';
    out += format_double(sides[i]);
  }
  return out;
}

}  // namespace

void write_reports_csv(std::ostream& os, const std::vector<SuiteReport>& reports) {
  os << "record,suite_id,points,failures,min_margin,inputs,sides,margin,verdict,slack,note\n";
  for (const auto& rep : reports) {
    os << "summary," << rep.suite_id << ',' << rep.total << ',' << rep.failure_count << ','
       << format_double(rep.min_margin) << ",,,,"
       << (rep.passed() ? "pass" : "fail") << ",,\n";
    for (const auto& f : rep.failures) {
      os << "failure," << rep.suite_id << ",,,," << '"' << inputs_string(f.inputs)
         << '"' << ',' << '"' << sides_string(f.sides) << '"' << ',' << format_double(f.margin)
         << ',' << (f.pass ? "pass" : "fail") << ',' << format_double(f.slack_used) << ','
         << '"' << f.note << '"' << '\n';
    }
  }
}

void write_reports_json(std::ostream& os, const std::vector<SuiteReport>& reports) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& rep : reports) {
    nlohmann::json jr;
    jr["suite_id"] = rep.suite_id;
    jr["points"] = rep.total;
    jr["failures"] = rep.failure_count;
    jr["min_margin"] = format_double(rep.min_margin);
    jr["verdict"] = rep.passed() ? "pass" : "fail";
    jr["notes"] = rep.notes;
    nlohmann::json records = nlohmann::json::array();
    for (const auto& f : rep.failures) {
      nlohmann::json jf;
      nlohmann::json in;
      for (const auto& [k, v] : f.inputs) in[k] = format_double(v);
      jf["suite_id"] = f.suite_id;
      jf["inputs"] = in;
      nlohmann::json sides = nlohmann::json::array();
      for (double s : f.sides) sides.push_back(format_double(s));
      jf["sides"] = sides;
      jf["margin"] = format_double(f.margin);
      jf["verdict"] = f.pass ? "pass" : "fail";
      jf["slack"] = format_double(f.slack_used);
      jf["note"] = f.note;
      records.push_back(std::move(jf));
    }
    jr["records"] = std::move(records);
    out.push_back(std::move(jr));
  }
  os << out.dump(2) << '\n';
}

}  // namespace geim::harness
