#pragma once

// Rectangular sampling grids for the check suites and figure emitters.

#include <map>
#include <string>
#include <vector>

namespace geim::harness {

struct Axis {
  double lo = 0.0;
  double hi = 0.0;
  int count = 0;
  bool geometric = false;
  std::vector<double> explicit_values;

  static Axis range(double lo, double hi, int count, bool geometric = false);
  static Axis list(std::vector<double> values);
  bool is_list() const { return !explicit_values.empty(); }
  std::vector<double> values() const;
};

// Named axes with per-variable domain validation. Unlisted axes fall back to
// the library defaults, so a caller only overrides what it cares about.
class GridSpec {
 public:
  static GridSpec defaults();

  GridSpec& set(const std::string& name, Axis axis);
  bool has(const std::string& name) const;
  std::vector<double> values(const std::string& name) const;

  double endpoint_margin() const { return margin_; }
  void set_endpoint_margin(double m);

  // Parses "var=lo:hi:count[:log]" or "var=v1,v2,...".
  void apply_clause(const std::string& clause);

  // Validates every axis against its variable's domain; throws
  // std::invalid_argument on violation (including ranges that leave the
  // open domain after endpoint margins).
  void validate() const;

 private:
  std::map<std::string, Axis> axes_;
  double margin_ = 1e-3;
};

}  // namespace geim::harness
