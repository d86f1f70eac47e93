#pragma once

// Gaussian hypergeometric function F(l, m; n; z) on [0, 1), including the
// logarithmic regimes near z = 1 needed by the elliptic integrals:
// zero-balanced (n = l + m) and unit-balanced (n = l + m + 1).

namespace geim::hyp {

struct EvalConfig {
  double series_tol = 1e-15;
  int max_terms = 10000;
  double near_one_switch = 0.95;  // series used for z <= switch (tie: series)
  double newton_tol = 1e-13;
  int max_newton_iters = 60;
};

// Parameter/argument bundle; n must not be zero or a negative integer,
// z must lie in [0, 1).
struct HypArgs {
  double l, m, n, z;
  HypArgs(double l, double m, double n, double z);
};

double gauss_2f1(const HypArgs& args, const EvalConfig& cfg = {});

// (l*m/n) * F(1+l, 1+m; 1+n; z).
double gauss_2f1_derivative(const HypArgs& args, const EvalConfig& cfg = {});

// (F(a,b;a+b;x) - 1) / log(1/(1-x)) for x in (0, 1); strictly increasing
// from ab/(a+b) to 1/B(a,b).
double zero_balanced_ratio(double a, double b, double x, const EvalConfig& cfg = {});

// Core evaluator taking 1 - z explicitly so callers that know the
// complement exactly (e.g. r'^2) do not lose accuracy near z = 1.
double gauss_2f1_c(double l, double m, double n, double z, double one_minus_z,
                   const EvalConfig& cfg = {});

// F(a, b; a+b; 1-w) via the logarithmic expansion; a, b > 0, 0 < w < 1.
double gauss_2f1_zero_balanced_near_one(double a, double b, double w,
                                        const EvalConfig& cfg = {});

// F(A, B; A+B+1; 1-w) via the logarithmic expansion; A > -1, B > -1,
// 0 <= w < 1. Finite at w = 0.
double gauss_2f1_unit_balance_near_one(double A, double B, double w,
                                       const EvalConfig& cfg = {});

// F(l, m; n; z) - 1 summed without cancellation; requires z <= near_one_switch.
double gauss_2f1_minus_one(double l, double m, double n, double z,
                           const EvalConfig& cfg = {});

}  // namespace geim::hyp
