#include "geim/hypergeometric.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "geim/errors.hpp"
#include "geim/scalar_special.hpp"

namespace geim::hyp {

namespace {

constexpr double kBalanceTol = 1e-9;

bool near_nonpositive_integer(double x) {
  if (x > 0.5) return false;
  const double r = std::round(x);
  return r <= 0.0 && std::abs(x - r) < 1e-12;
}

// Forward series via the term-ratio recurrence. start_at_one selects whether
// the n = 0 term is included (F) or not (F - 1).
double series_sum(double l, double m, double n, double z, const EvalConfig& cfg,
                  bool start_at_one) {
  double term = 1.0;
  double sum = start_at_one ? 1.0 : 0.0;
  const double tail_guard = 1.0 - z;
  for (int k = 0; k < cfg.max_terms; ++k) {
    term *= (l + k) * (m + k) / ((n + k) * (k + 1.0)) * z;
    sum += term;
    if (std::abs(term) <= cfg.series_tol * std::max(std::abs(sum), 1e-300) * tail_guard)
      return sum;
  }
  throw NonConvergenceError("gauss_2f1: series term cap reached at z = " + std::to_string(z));
}

// 1/Gamma(x) for x > -1, using Gamma(x) = Gamma(x+1)/x below zero.
double recip_gamma(double x) {
  if (x == 0.0) return 0.0;
  if (x > 0.0) return std::exp(-special::log_gamma(x));
  return x * std::exp(-special::log_gamma(x + 1.0));
}

}  // namespace

HypArgs::HypArgs(double l_, double m_, double n_, double z_) : l(l_), m(m_), n(n_), z(z_) {
  if (near_nonpositive_integer(n))
    throw std::domain_error("HypArgs: lower parameter is zero or a negative integer");
  if (!(z >= 0.0 && z < 1.0)) throw std::domain_error("HypArgs: z must lie in [0, 1)");
}

double gauss_2f1_zero_balanced_near_one(double a, double b, double w, const EvalConfig& cfg) {
  if (!(a > 0.0) || !(b > 0.0))
    throw UnsupportedRegimeError("zero-balanced expansion requires positive upper parameters");
  if (!(w > 0.0 && w < 1.0))
    throw std::domain_error("zero-balanced expansion requires 0 < w < 1");
  const double log_term = -std::log(w);
  double rn = special::ramanujan_r(a, b);
  double c = 1.0;
  double wn = 1.0;
  double sum = 0.0;
  for (int k = 0; k < cfg.max_terms; ++k) {
    const double term = c * wn * (rn + log_term);
    sum += term;
    if (k >= 2 && std::abs(term) <= cfg.series_tol * std::abs(sum))
      return sum / special::beta_fn(a, b);
    c *= (a + k) * (b + k) / ((k + 1.0) * (k + 1.0));
    rn += 2.0 / (k + 1.0) - 1.0 / (a + k) - 1.0 / (b + k);
    wn *= w;
  }
  throw NonConvergenceError("zero-balanced near-one expansion did not converge");
}

double gauss_2f1_unit_balance_near_one(double A, double B, double w, const EvalConfig& cfg) {
  if (!(A > -1.0) || !(B > -1.0))
    throw UnsupportedRegimeError("unit-balance expansion requires parameters > -1");
  if (!(w >= 0.0 && w < 1.0))
    throw std::domain_error("unit-balance expansion requires 0 <= w < 1");
  const double g1 =
      std::exp(special::log_gamma(A + B + 1.0) - special::log_gamma(A + 1.0) -
               special::log_gamma(B + 1.0));
  if (w == 0.0) return g1;
  if (A == 0.0 || B == 0.0) return 1.0;  // F(0, ., ., z) = 1
  const double g2 = std::exp(special::log_gamma(A + B + 1.0)) * recip_gamma(A) * recip_gamma(B);
  const double log_w = std::log(w);
  double hn = special::digamma(A + 1.0) + special::digamma(B + 1.0) +
              2.0 * special::euler_gamma - 1.0;
  double c = 1.0;
  double wn = 1.0;
  double sum = 0.0;
  for (int k = 0; k < cfg.max_terms; ++k) {
    const double term = c * wn * (hn + log_w);
    sum += term;
    if (k >= 2 && std::abs(term) <= cfg.series_tol * std::abs(sum))
      return g1 + g2 * w * sum;
    c *= (A + 1.0 + k) * (B + 1.0 + k) / ((k + 1.0) * (k + 2.0));
    hn += 1.0 / (A + 1.0 + k) + 1.0 / (B + 1.0 + k) - 1.0 / (k + 1.0) - 1.0 / (k + 2.0);
    wn *= w;
  }
  throw NonConvergenceError("unit-balance near-one expansion did not converge");
}

double gauss_2f1_c(double l, double m, double n, double z, double one_minus_z,
                   const EvalConfig& cfg) {
  if (near_nonpositive_integer(n))
    throw std::domain_error("gauss_2f1: lower parameter is zero or a negative integer");
  if (!(z >= 0.0) || !(one_minus_z > 0.0))
    throw std::domain_error("gauss_2f1: argument must lie in [0, 1)");
  if (z == 0.0 || l == 0.0 || m == 0.0) return 1.0;
  if (z <= cfg.near_one_switch) return series_sum(l, m, n, z, cfg, true);
  const double balance = n - l - m;
  if (std::abs(balance) <= kBalanceTol)
    return gauss_2f1_zero_balanced_near_one(l, m, one_minus_z, cfg);
  if (std::abs(balance - 1.0) <= kBalanceTol)
    return gauss_2f1_unit_balance_near_one(l, m, one_minus_z, cfg);
  throw UnsupportedRegimeError(
      "gauss_2f1: z > switch requires a zero- or unit-balanced parameter triple");
}

double gauss_2f1(const HypArgs& args, const EvalConfig& cfg) {
  return gauss_2f1_c(args.l, args.m, args.n, args.z, 1.0 - args.z, cfg);
}

double gauss_2f1_derivative(const HypArgs& args, const EvalConfig& cfg) {
  const double factor = args.l * args.m / args.n;
  if (factor == 0.0) return 0.0;
  return factor * gauss_2f1_c(1.0 + args.l, 1.0 + args.m, 1.0 + args.n, args.z,
                              1.0 - args.z, cfg);
}

double gauss_2f1_minus_one(double l, double m, double n, double z, const EvalConfig& cfg) {
  if (!(z >= 0.0 && z <= cfg.near_one_switch))
    throw std::domain_error("gauss_2f1_minus_one: requires 0 <= z <= near_one_switch");
  if (z == 0.0) return 0.0;
  return series_sum(l, m, n, z, cfg, false);
}

double zero_balanced_ratio(double a, double b, double x, const EvalConfig& cfg) {
  if (!(a > 0.0) || !(b > 0.0))
    throw std::domain_error("zero_balanced_ratio: requires a, b > 0");
  if (!(x > 0.0 && x < 1.0))
    throw std::domain_error("zero_balanced_ratio: requires x in (0, 1)");
  double numerator;
  if (x <= cfg.near_one_switch) {
    numerator = gauss_2f1_minus_one(a, b, a + b, x, cfg);
  } else {
    numerator = gauss_2f1_zero_balanced_near_one(a, b, 1.0 - x, cfg) - 1.0;
  }
  return numerator / (-std::log1p(-x));
}

}  // namespace geim::hyp
