#include "geim/modular.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "geim/errors.hpp"
#include "geim/scalar_special.hpp"

namespace geim::modular {

namespace {

constexpr double kPi = std::numbers::pi;
const double kInvSqrt2 = std::numbers::sqrt2 / 2.0;

// Below this root size the asymptotic inverse mu^{-1}(t) ~ exp(R/2 - t) is
// exact to double precision (the correction is O(q^2 log q)).
constexpr double kAsymptoticRoot = 1e-13;

void require_open(const char* fn, const Radius& r) {
  if (!(r.r() > 0.0 && r.r() < 1.0))
    throw std::domain_error(std::string(fn) + ": requires r in (0, 1)");
}

struct SmallSideResult {
  double q;         // root in (0, 1/sqrt(2)]
  double mu_q;      // mu evaluated at the root (or its asymptotic value)
  int iterations;
  bool saturated;
};

// Solves kernel(q) = target for q in (0, 1/sqrt(2)], where the kernel is a
// decreasing zero-balanced mu-type function with kernel(1/sqrt(2)) = c_sym
// and kernel(q) = log(1/q) + half_r + o(1) as q -> 0. `target >= c_sym`.
// Newton steps are used when a derivative is supplied, secant steps
// otherwise; both stay inside a maintained bracket.
template <class MuFn, class DmuFn>
SmallSideResult solve_small_side(double target, double c_sym, double half_r,
                                 MuFn&& mu_fn, DmuFn&& dmu_fn, bool has_derivative,
                                 const ModularSolveConfig& scfg) {
  SmallSideResult out{0.0, 0.0, 0, false};
  double guess = std::exp(half_r - target);
  if (guess < kAsymptoticRoot) {
    if (!(guess >= std::numeric_limits<double>::min())) {
      guess = std::numeric_limits<double>::min();
      out.saturated = true;
    }
    out.q = guess;
    // mu at the root, by the asymptote (exact at this scale when not saturated)
    out.mu_q = out.saturated ? half_r - std::log(guess) : target;
    return out;
  }

  double hi = kInvSqrt2;
  double lo = std::clamp(guess * 0.25, scfg.bracket_floor, hi * 0.5);
  double f_lo = mu_fn(lo) - target;
  int expansions = 0;
  while (f_lo < 0.0 && expansions < 40) {
    hi = lo;
    lo = std::max(lo * 0.0625, scfg.bracket_floor);
    f_lo = mu_fn(lo) - target;
    ++expansions;
  }
  if (f_lo < 0.0) throw NonConvergenceError("mu_inv: failed to bracket the root");

  double q = std::clamp(guess, lo, hi);
  double f_prev = f_lo;
  double q_prev = lo;
  for (int it = 1; it <= scfg.max_iters; ++it) {
    ++out.iterations;
    const double f = mu_fn(q) - target;
    if (f > 0.0) {
      lo = q;
    } else {
      hi = q;
    }
    double q_next;
    if (has_derivative) {
      q_next = q - f / dmu_fn(q);
    } else {
      const double denom = f - f_prev;
      q_next = (denom != 0.0) ? q - f * (q - q_prev) / denom : 0.5 * (lo + hi);
    }
    if (!(q_next > lo && q_next < hi)) q_next = 0.5 * (lo + hi);
    q_prev = q;
    f_prev = f;
    const bool done = std::abs(q_next - q) <= scfg.abs_tol || f == 0.0;
    q = q_next;
    if (done) {
      out.q = q;
      out.mu_q = mu_fn(q);
      return out;
    }
  }
  throw NonConvergenceError("mu_inv: no convergence within max_iters");
}

template <class MuFn, class DmuFn>
ModularSolution invert_decreasing(double y, double c_sym, double half_r, MuFn&& mu_fn,
                                  DmuFn&& dmu_fn, bool has_derivative,
                                  const ModularSolveConfig& scfg) {
  if (!(y > 0.0) || !std::isfinite(y))
    throw std::domain_error("mu_inv: target must be a positive real");
  if (y >= c_sym) {
    const auto sol = solve_small_side(y, c_sym, half_r, mu_fn, dmu_fn, has_derivative, scfg);
    return ModularSolution{Radius::from_r(sol.q), std::abs(sol.mu_q - y), sol.iterations,
                           sol.saturated};
  }
  // Small target: solve for the complement via mu(r) mu(r') = c_sym^2.
  const double target = c_sym * c_sym / y;
  const auto sol = solve_small_side(target, c_sym, half_r, mu_fn, dmu_fn, has_derivative, scfg);
  const double mu_s = c_sym * c_sym / sol.mu_q;
  return ModularSolution{Radius::from_complement(sol.q), std::abs(mu_s - y), sol.iterations,
                         sol.saturated};
}

}  // namespace

double mu_symmetric_value(const OrderParam& a) {
  return kPi / (2.0 * std::sin(kPi * a.a()));
}

double mu(const OrderParam& a, const Radius& r, const EvalConfig& cfg) {
  require_open("mu", r);
  return mu_symmetric_value(a) * ellK(a, r.complement(), cfg) / ellK(a, r, cfg);
}

double mu(const OrderParam& a, double r, const EvalConfig& cfg) {
  return mu(a, Radius::from_r(r), cfg);
}

double dmu_dr(const OrderParam& a, const Radius& r, const EvalConfig& cfg) {
  require_open("dmu_dr", r);
  const double K = ellK(a, r, cfg);
  return -kPi * kPi / (4.0 * r.r() * r.rc2() * K * K);
}

double dmu_dr(const OrderParam& a, double r, const EvalConfig& cfg) {
  return dmu_dr(a, Radius::from_r(r), cfg);
}

ModularSolution mu_inv(const OrderParam& a, double y, const ModularSolveConfig& scfg,
                       const EvalConfig& cfg) {
  const double c_sym = mu_symmetric_value(a);
  const double half_r = 0.5 * special::ramanujan_r(a.a());
  auto mu_fn = [&](double q) { return mu(a, Radius::from_r(q), cfg); };
  auto dmu_fn = [&](double q) { return dmu_dr(a, Radius::from_r(q), cfg); };
  return invert_decreasing(y, c_sym, half_r, mu_fn, dmu_fn, true, scfg);
}

Radius phi_radius(const OrderParam& a, double K, const Radius& r,
                  const ModularSolveConfig& scfg, const EvalConfig& cfg) {
  if (!(K > 0.0) || !std::isfinite(K))
    throw std::domain_error("phi: requires K in (0, inf)");
  return mu_inv(a, mu(a, r, cfg) / K, scfg, cfg).root;
}

double phi(const OrderParam& a, double K, double r, const ModularSolveConfig& scfg,
           const EvalConfig& cfg) {
  return phi_radius(a, K, Radius::from_r(r), scfg, cfg).r();
}

std::array<double, 3> dphi_dr_forms(const OrderParam& a, double K, const Radius& r,
                                    const ModularSolveConfig& scfg, const EvalConfig& cfg) {
  const Radius s = phi_radius(a, K, r, scfg, cfg);
  const double Kr = ellK(a, r, cfg);
  const double Krc = ellK(a, r.complement(), cfg);
  const double Ks = ellK(a, s, cfg);
  const double Ksc = ellK(a, s.complement(), cfg);
  const double base = s.r() * s.rc2() / (r.r() * r.rc2());
  return {base * Ks * Ks / (K * Kr * Kr), base * Ks * Ksc / (Kr * Krc),
          K * base * Ksc * Ksc / (Krc * Krc)};
}

double dphi_dr(const OrderParam& a, double K, double r, const ModularSolveConfig& scfg,
               const EvalConfig& cfg) {
  return dphi_dr_forms(a, K, Radius::from_r(r), scfg, cfg)[0];
}

double dphi_dK(const OrderParam& a, double K, double r, const ModularSolveConfig& scfg,
               const EvalConfig& cfg) {
  const Radius rad = Radius::from_r(r);
  const Radius s = phi_radius(a, K, rad, scfg, cfg);
  const double Ks = ellK(a, s, cfg);
  return 4.0 * s.r() * s.rc2() * Ks * Ks * mu(a, rad, cfg) / (kPi * kPi * K * K);
}

namespace {

Radius radius_from_x(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) throw std::domain_error("eta: requires x in (0, inf)");
  return Radius::from_parts(std::sqrt(x / (1.0 + x)), std::sqrt(1.0 / (1.0 + x)));
}

}  // namespace

double eta(const OrderParam& a, double K, double x, const ModularSolveConfig& scfg,
           const EvalConfig& cfg) {
  const Radius s = phi_radius(a, K, radius_from_x(x), scfg, cfg);
  return s.r2() / s.rc2();
}

double log_eta(const OrderParam& a, double K, double x, const ModularSolveConfig& scfg,
               const EvalConfig& cfg) {
  const Radius s = phi_radius(a, K, radius_from_x(x), scfg, cfg);
  return 2.0 * (std::log(s.r()) - std::log(s.rc()));
}

std::array<double, 3> deta_dx_forms(const OrderParam& a, double K, double x,
                                    const ModularSolveConfig& scfg, const EvalConfig& cfg) {
  const Radius r = radius_from_x(x);
  const Radius s = phi_radius(a, K, r, scfg, cfg);
  const double Kr = ellK(a, r, cfg);
  const double Krc = ellK(a, r.complement(), cfg);
  const double Ks = ellK(a, s, cfg);
  const double Ksc = ellK(a, s.complement(), cfg);
  const double q = (r.rc() * s.r()) / (r.r() * s.rc());
  const double q2 = q * q;
  const double f1 = q * Ks / Kr;
  const double f2 = q * Ksc / Krc;
  return {f1 * f1 / K, K * f2 * f2, q2 * Ks * Ksc / (Kr * Krc)};
}

double deta_dx(const OrderParam& a, double K, double x, const ModularSolveConfig& scfg,
               const EvalConfig& cfg) {
  return deta_dx_forms(a, K, x, scfg, cfg)[0];
}

double deta_dK(const OrderParam& a, double K, double x, const ModularSolveConfig& scfg,
               const EvalConfig& cfg) {
  const Radius r = radius_from_x(x);
  const Radius s = phi_radius(a, K, r, scfg, cfg);
  const double Ks = ellK(a, s, cfg);
  const double eta_val = s.r2() / s.rc2();
  return 8.0 * eta_val * mu(a, r, cfg) * Ks * Ks / (kPi * kPi * K * K);
}

std::pair<double, double> lambda_forms(const OrderParam& a, double K,
                                       const ModularSolveConfig& scfg, const EvalConfig& cfg) {
  if (!(K > 0.0) || !std::isfinite(K))
    throw std::domain_error("lambda_fn: requires K in (0, inf)");
  const Radius sym = Radius::from_parts(kInvSqrt2, kInvSqrt2);
  const Radius s1 = phi_radius(a, K, sym, scfg, cfg);
  const Radius s2 = phi_radius(a, 1.0 / K, sym, scfg, cfg);
  const double form1 = (s1.r() / s2.r()) * (s1.r() / s2.r());
  const double c_sym = mu_symmetric_value(a);
  const double n1 = mu_inv(a, c_sym / K, scfg, cfg).s();
  const double n2 = mu_inv(a, c_sym * K, scfg, cfg).s();
  const double form2 = (n1 / n2) * (n1 / n2);
  return {form1, form2};
}

double lambda_fn(const OrderParam& a, double K, const ModularSolveConfig& scfg,
                 const EvalConfig& cfg) {
  return lambda_forms(a, K, scfg, cfg).first;
}

double log_lambda(const OrderParam& a, double K, const ModularSolveConfig& scfg,
                  const EvalConfig& cfg) {
  const Radius sym = Radius::from_parts(kInvSqrt2, kInvSqrt2);
  const Radius s1 = phi_radius(a, K, sym, scfg, cfg);
  const Radius s2 = phi_radius(a, 1.0 / K, sym, scfg, cfg);
  return 2.0 * (std::log(s1.r()) - std::log(s2.r()));
}

double mu3(const TriParam& t, const Radius& r, const EvalConfig& cfg) {
  t.require_mu_form("mu3");
  require_open("mu3", r);
  const double num = hyp::gauss_2f1_c(t.a(), t.b(), t.c(), r.rc2(), r.r2(), cfg);
  const double den = hyp::gauss_2f1_c(t.a(), t.b(), t.c(), r.r2(), r.rc2(), cfg);
  return 0.5 * special::beta_fn(t.a(), t.b()) * num / den;
}

double mu3(const TriParam& t, double r, const EvalConfig& cfg) {
  return mu3(t, Radius::from_r(r), cfg);
}

ModularSolution mu3_inv(const TriParam& t, double y, const ModularSolveConfig& scfg,
                        const EvalConfig& cfg) {
  t.require_mu_form("mu3_inv");
  if (!t.zero_balanced())
    throw UnsupportedRegimeError(
        "mu3_inv: inversion requires the zero-balanced case c = a + b");
  const double c_sym = 0.5 * special::beta_fn(t.a(), t.b());
  const double half_r = 0.5 * special::ramanujan_r(t.a(), t.b());
  auto mu_fn = [&](double q) { return mu3(t, Radius::from_r(q), cfg); };
  auto no_dmu = [](double) { return 0.0; };
  return invert_decreasing(y, c_sym, half_r, mu_fn, no_dmu, false, scfg);
}

Radius phi3_radius(const TriParam& t, double K, const Radius& r,
                   const ModularSolveConfig& scfg, const EvalConfig& cfg) {
  if (!(K > 0.0) || !std::isfinite(K))
    throw std::domain_error("phi3: requires K in (0, inf)");
  return mu3_inv(t, mu3(t, r, cfg) / K, scfg, cfg).root;
}

double phi3(const TriParam& t, double K, double r, const ModularSolveConfig& scfg,
            const EvalConfig& cfg) {
  return phi3_radius(t, K, Radius::from_r(r), scfg, cfg).r();
}

double artanh_radius(const Radius& s) {
  if (!(s.r() > 0.0 && s.r() < 1.0))
    throw std::domain_error("artanh_radius: requires s in (0, 1)");
  return std::log1p(s.r()) - std::log(s.rc());
}

}  // namespace geim::modular
