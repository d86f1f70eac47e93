#pragma once

// Figure-data emitters: tabulated bound comparisons, no plot rendering.

#include <ostream>
#include <string>
#include <vector>

#include "geim/grid.hpp"
#include "geim/hypergeometric.hpp"

namespace geim::harness {

struct FigureTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

enum class Format { csv, json };

// Figure 1: r, upper bound of the artanh_p chain at p = 2, the classical
// artanh upper bound, and K_{1/2}(r).
// Figure 2: r, the two lower bounds g and h of the distortion sum at
// a = 0.2, K = 1.5, p = 1.3, s = 0.5.
// The grid's "r" axis is used when the caller overrode it; otherwise each
// figure applies its own default sampling.
FigureTable figure_table(int figure_id, const GridSpec& grid, bool grid_has_r_override,
                         const hyp::EvalConfig& cfg = {});

void write_figure(std::ostream& os, const FigureTable& table, Format format);

}  // namespace geim::harness
