#pragma once

// Registry of inequality / derivative / shape certification suites and the
// runners behind the `check` subcommand.

#include <optional>
#include <string>
#include <vector>

#include "geim/grid.hpp"
#include "geim/hypergeometric.hpp"
#include "geim/report.hpp"

namespace geim::harness {

inline constexpr double kDefaultSlack = 1e-11;
inline constexpr double kFdThreshold = 1e-5;

struct SuiteInfo {
  std::string id;
  std::string title;
};

const std::vector<SuiteInfo>& suite_registry();
bool has_suite(const std::string& id);

SuiteReport run_suite(const std::string& id, const GridSpec& grid,
                      double slack = kDefaultSlack, const hyp::EvalConfig& cfg = {});

// Central-difference certification of one derivative formula; formula_id in
// {dK_dr, dE_dr, dmu_dr, dphi_dr, dphi_dK, deta_dx, deta_dK}.
SuiteReport finite_difference_check(const std::string& formula_id, const GridSpec& grid,
                                    double threshold = kFdThreshold,
                                    const hyp::EvalConfig& cfg = {});

// Monotonicity/convexity/range certification by property id; accepts the
// registry ids of shape suites plus a few descriptive aliases.
SuiteReport shape_check(const std::string& property_id, const GridSpec& grid,
                        double slack = kDefaultSlack, const hyp::EvalConfig& cfg = {});

namespace detail {
// thm_1_7 with an injected pi_p constant; lets tests demonstrate that a
// corrupted bound constant is caught.
SuiteReport run_thm17_with_pi_p(const GridSpec& grid, double slack,
                                const hyp::EvalConfig& cfg,
                                std::optional<double> pi_p_override);
}  // namespace detail

}  // namespace geim::harness
