#pragma once

// The Grotzsch-type homeomorphism mu_a, its numerical inverse, the modular
// functions phi_K^a, eta_K^a, lambda_a, their derivative formulas, and the
// three-parameter mu_{a,b,c} / phi_K^{a,b,c}.

#include <array>
#include <utility>

#include "geim/elliptic.hpp"

namespace geim::modular {

using elliptic::EvalConfig;
using elliptic::OrderParam;
using elliptic::Radius;
using elliptic::TriParam;

struct ModularSolveConfig {
  double abs_tol = 1e-12;  // tolerance on the root r
  int max_iters = 80;
  double bracket_floor = 1e-15;
};

struct ModularSolution {
  Radius root;       // solution with its complement carried exactly
  double residual;   // |mu(s) - y|
  int iterations;
  bool saturated;    // target beyond the binary64-representable range of mu

  double s() const noexcept { return root.r(); }
};

// mu_a(1/sqrt(2)) = pi/(2 sin(pi a)); also the constant C in
// mu_a(r) mu_a(r') = C^2.
double mu_symmetric_value(const OrderParam& a);

// mu_a(r) = (pi/(2 sin(pi a))) K_a(r')/K_a(r), decreasing on (0, 1).
double mu(const OrderParam& a, const Radius& r, const EvalConfig& cfg = {});
double mu(const OrderParam& a, double r, const EvalConfig& cfg = {});

// dmu_a/dr = -pi^2 / (4 r r'^2 K_a(r)^2).
double dmu_dr(const OrderParam& a, const Radius& r, const EvalConfig& cfg = {});
double dmu_dr(const OrderParam& a, double r, const EvalConfig& cfg = {});

// Inverse of mu_a: bracketed Newton with bisection fallback; extreme targets
// are solved in the complement variable through mu(r) mu(r') = C^2.
ModularSolution mu_inv(const OrderParam& a, double y,
                       const ModularSolveConfig& scfg = {}, const EvalConfig& cfg = {});

// phi_K^a(r) = mu_a^{-1}(mu_a(r)/K).
Radius phi_radius(const OrderParam& a, double K, const Radius& r,
                  const ModularSolveConfig& scfg = {}, const EvalConfig& cfg = {});
double phi(const OrderParam& a, double K, double r,
           const ModularSolveConfig& scfg = {}, const EvalConfig& cfg = {});

// The three equal closed forms of dphi/dr; callers needing one value use
// dphi_dr which returns the first form.
std::array<double, 3> dphi_dr_forms(const OrderParam& a, double K, const Radius& r,
                                    const ModularSolveConfig& scfg = {},
                                    const EvalConfig& cfg = {});
double dphi_dr(const OrderParam& a, double K, double r,
               const ModularSolveConfig& scfg = {}, const EvalConfig& cfg = {});
double dphi_dK(const OrderParam& a, double K, double r,
               const ModularSolveConfig& scfg = {}, const EvalConfig& cfg = {});

// eta_K^a(x) = (s/s')^2 with s = phi_K^a(r), r = sqrt(x/(1+x)).
double eta(const OrderParam& a, double K, double x,
           const ModularSolveConfig& scfg = {}, const EvalConfig& cfg = {});
// log(eta_K^a(x)), computed from the complement-carrying solution so that it
// stays accurate when s' underflows the working precision of plain doubles.
double log_eta(const OrderParam& a, double K, double x,
               const ModularSolveConfig& scfg = {}, const EvalConfig& cfg = {});
std::array<double, 3> deta_dx_forms(const OrderParam& a, double K, double x,
                                    const ModularSolveConfig& scfg = {},
                                    const EvalConfig& cfg = {});
double deta_dx(const OrderParam& a, double K, double x,
               const ModularSolveConfig& scfg = {}, const EvalConfig& cfg = {});
double deta_dK(const OrderParam& a, double K, double x,
               const ModularSolveConfig& scfg = {}, const EvalConfig& cfg = {});

// lambda_a(K) via its two printed routes: (phi_K/phi_{1/K})^2 at 1/sqrt(2),
// and the mu_a^{-1} quotient form. lambda_fn returns the first.
std::pair<double, double> lambda_forms(const OrderParam& a, double K,
                                       const ModularSolveConfig& scfg = {},
                                       const EvalConfig& cfg = {});
double lambda_fn(const OrderParam& a, double K,
                 const ModularSolveConfig& scfg = {}, const EvalConfig& cfg = {});
double log_lambda(const OrderParam& a, double K,
                  const ModularSolveConfig& scfg = {}, const EvalConfig& cfg = {});

// mu_{a,b,c}(r) = B(a,b) F(a,b;c;r'^2) / (2 F(a,b;c;r^2)); requires a+b >= c.
double mu3(const TriParam& t, const Radius& r, const EvalConfig& cfg = {});
double mu3(const TriParam& t, double r, const EvalConfig& cfg = {});

// Inversion is defined only in the zero-balanced case c = a + b, where the
// range is (0, inf); other triples are rejected.
ModularSolution mu3_inv(const TriParam& t, double y,
                        const ModularSolveConfig& scfg = {}, const EvalConfig& cfg = {});

Radius phi3_radius(const TriParam& t, double K, const Radius& r,
                   const ModularSolveConfig& scfg = {}, const EvalConfig& cfg = {});
double phi3(const TriParam& t, double K, double r,
            const ModularSolveConfig& scfg = {}, const EvalConfig& cfg = {});

// artanh of a phi-type solution computed from the complement, exact for s
// arbitrarily close to 1.
double artanh_radius(const Radius& s);

}  // namespace geim::modular
