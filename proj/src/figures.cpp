#include "geim/figures.hpp"

#include <stdexcept>

#include "json.hpp"
#include "geim/bounds.hpp"
#include "geim/modular.hpp"
#include "geim/report.hpp"

namespace geim::harness {

namespace {

using elliptic::OrderParam;
using elliptic::Radius;

// g of the figure-2 caption: the power-mean lower bound of the distortion sum.
double fig2_g(const OrderParam& a, double K, double p, double r, double s,
              const hyp::EvalConfig& cfg) {
  const double fr = modular::phi(a, K, std::pow(r, p), {}, cfg);
  const double fs = modular::phi(a, K, std::pow(s, p), {}, cfg);
  return (std::pow(fr, 1.0 / p) + std::pow(fs, 1.0 / p)) /
         (1.0 + std::pow(fr * fs, 1.0 / p));
}

// h of the figure-2 caption: the addition-formula lower bound.
double fig2_h(const OrderParam& a, double K, double r, double s,
              const hyp::EvalConfig& cfg) {
  return modular::phi(a, K, (r + s) / (1.0 + r * s), {}, cfg);
}

}  // namespace

FigureTable figure_table(int figure_id, const GridSpec& grid, bool grid_has_r_override,
                         const hyp::EvalConfig& cfg) {
  FigureTable table;
  if (figure_id == 1) {
    std::vector<double> rs = grid_has_r_override
                                 ? grid.values("r")
                                 : Axis::range(0.01, 0.999, 100, false).values();
    table.columns = {"r", "thm17_upper_p2", "aq_upper", "K_half"};
    const OrderParam half(0.5);
    for (double r : rs) {
      const auto chain17 = bounds::thm17_chain(2.0, r, cfg);
      const auto aq = bounds::aq_bounds(r);
      table.rows.push_back({r, chain17.upper, aq.upper,
                            elliptic::ellK(half, Radius::from_r(r), cfg)});
    }
    return table;
  }
  if (figure_id == 2) {
    std::vector<double> rs = grid_has_r_override
                                 ? grid.values("r")
                                 : Axis::range(0.005, 0.98, 196, false).values();
    table.columns = {"r", "g", "h"};
    const OrderParam a(0.2);
    const double K = 1.5, p = 1.3, s = 0.5;
    for (double r : rs)
      table.rows.push_back({r, fig2_g(a, K, p, r, s, cfg), fig2_h(a, K, r, s, cfg)});
    return table;
  }
  throw std::domain_error("figure_table: unknown figure id");
}

void write_figure(std::ostream& os, const FigureTable& table, Format format) {
  if (format == Format::csv) {
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
      if (i) os << ',';
      os << table.columns[i];
    }
    os << '\n';
    for (const auto& row : table.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) os << ',';
        os << format_double(row[i]);
      }
      os << '\n';
    }
    return;
  }
  nlohmann::json out = nlohmann::json::array();
  for (const auto& row : table.rows) {
    nlohmann::json jr;
    for (std::size_t i = 0; i < row.size(); ++i) jr[table.columns[i]] = format_double(row[i]);
    out.push_back(std::move(jr));
  }
  os << out.dump(2) << '\n';
}

}  // namespace geim::harness
