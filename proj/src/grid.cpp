#include "geim/grid.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace geim::harness {

Axis Axis::range(double lo, double hi, int count, bool geometric) {
  Axis a;
  a.lo = lo;
  a.hi = hi;
  a.count = count;
  a.geometric = geometric;
  return a;
}

Axis Axis::list(std::vector<double> values) {
  Axis a;
  a.explicit_values = std::move(values);
  return a;
}

std::vector<double> Axis::values() const {
  if (is_list()) return explicit_values;
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(count));
  if (geometric) {
    const double ratio = std::pow(hi / lo, 1.0 / (count - 1));
    double v = lo;
    for (int i = 0; i < count; ++i) {
      out.push_back(i + 1 == count ? hi : v);
      v *= ratio;
    }
  } else {
    const double step = (hi - lo) / (count - 1);
    for (int i = 0; i < count; ++i) out.push_back(i + 1 == count ? hi : lo + i * step);
  }
  return out;
}

GridSpec GridSpec::defaults() {
  GridSpec g;
  g.set("a", Axis::list({0.05, 0.1, 0.2, 1.0 / 3.0, 0.5}));
  g.set("K", Axis::list({1.1, 1.5, 2.0, 4.0, 10.0}));
  g.set("r", Axis::range(1e-3, 1.0 - 1e-3, 41, true));
  g.set("s", Axis::range(1e-3, 1.0 - 1e-3, 9, true));
  g.set("x", Axis::range(0.01, 100.0, 21, true));
  g.set("p", Axis::list({2.0, 2.5, 3.0, 5.0}));
  g.set("q", Axis::list({1.0, 1.5, 2.0, 4.0}));   // powers for the mean chains
  g.set("w", Axis::list({0.25, 0.5, 0.75}));      // convex-combination weights
  g.set("c", Axis::list({0.6, 0.8, 1.0}));        // three-parameter c
  g.set("y", Axis::range(0.05, 20.0, 81, true));  // mu-inverse targets
  return g;
}

GridSpec& GridSpec::set(const std::string& name, Axis axis) {
  axes_[name] = std::move(axis);
  return *this;
}

bool GridSpec::has(const std::string& name) const { return axes_.count(name) != 0; }

std::vector<double> GridSpec::values(const std::string& name) const {
  auto it = axes_.find(name);
  if (it == axes_.end()) throw std::invalid_argument("GridSpec: unknown axis '" + name + "'");
  return it->second.values();
}

void GridSpec::set_endpoint_margin(double m) {
  if (!(m > 0.0 && m < 0.5)) throw std::invalid_argument("GridSpec: bad endpoint margin");
  margin_ = m;
}

void GridSpec::apply_clause(const std::string& clause) {
  const auto eq = clause.find('=');
  if (eq == std::string::npos)
    throw std::invalid_argument("grid clause must look like var=lo:hi:count[:log]");
  const std::string name = clause.substr(0, eq);
  const std::string body = clause.substr(eq + 1);
  if (body.find(',') != std::string::npos) {
    std::vector<double> vals;
    std::stringstream ss(body);
    std::string tok;
    while (std::getline(ss, tok, ',')) vals.push_back(std::stod(tok));
    set(name, Axis::list(std::move(vals)));
    return;
  }
  std::vector<std::string> parts;
  std::stringstream ss(body);
  std::string tok;
  while (std::getline(ss, tok, ':')) parts.push_back(tok);
  if (parts.size() < 3 || parts.size() > 4)
    throw std::invalid_argument("grid clause must look like var=lo:hi:count[:log]");
  const double lo = std::stod(parts[0]);
  const double hi = std::stod(parts[1]);
  const int count = std::stoi(parts[2]);
  bool log_spaced = false;
  if (parts.size() == 4) {
    if (parts[3] != "log" && parts[3] != "lin")
      throw std::invalid_argument("grid clause spacing must be 'log' or 'lin'");
    log_spaced = parts[3] == "log";
  }
  set(name, Axis::range(lo, hi, count, log_spaced));
}

void GridSpec::validate() const {
  for (const auto& [name, axis] : axes_) {
    if (!axis.is_list()) {
      if (axis.count < 2) throw std::invalid_argument("axis '" + name + "': count must be >= 2");
      if (!(axis.lo < axis.hi)) throw std::invalid_argument("axis '" + name + "': empty range");
      if (axis.geometric && !(axis.lo > 0.0))
        throw std::invalid_argument("axis '" + name + "': geometric spacing needs lo > 0");
    } else if (axis.explicit_values.empty()) {
      throw std::invalid_argument("axis '" + name + "': empty value list");
    }
    const auto vals = axis.values();
    auto in = [&](double lo, double hi) {
      for (double v : vals)
        if (!(v >= lo && v <= hi))
          throw std::invalid_argument("axis '" + name + "': value outside its domain");
    };
    if (name == "a") {
      in(1e-6, 0.5);
    } else if (name == "r" || name == "s") {
      in(margin_, 1.0 - margin_);
    } else if (name == "K" || name == "x" || name == "y") {
      in(1e-12, 1e12);
    } else if (name == "p") {
      in(1.0, 1e6);
    } else if (name == "q") {
      in(1.0, 1e6);
    } else if (name == "w") {
      in(1e-6, 1.0 - 1e-6);
    } else if (name == "c") {
      in(1e-6, 1.0);
    } else {
      throw std::invalid_argument("GridSpec: unknown axis '" + name + "'");
    }
  }
}

}  // namespace geim::harness
