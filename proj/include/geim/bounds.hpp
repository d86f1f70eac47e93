#pragma once

// Closed-form bound evaluators. Each returns every side of a printed
// inequality chain so the harness can assert orderings and measure margins.
// Evaluators never call the quantity they bound; the harness pairs them.

#include <vector>

#include "geim/elliptic.hpp"

namespace geim::bounds {

using elliptic::EvalConfig;
using elliptic::OrderParam;

struct BoundSides {
  double lower;
  std::vector<double> middles;
  double upper;
  std::vector<double> chain() const;  // lower, middles..., upper
};

// Power-mean chains: part 1 is the F chain for arbitrary a, b, c > 0;
// parts 2 and 3 are the K_a and E_a chains (middle entry is the bounded
// quantity itself, as printed).
BoundSides thm15_chain(double a, double b, double c, double r, double p, int part,
                       const EvalConfig& cfg = {});

// Four-term chain around K_{1/p}(r) built from artanh_p and pi_p; p >= 2.
BoundSides thm17_chain(double p, double r, const EvalConfig& cfg = {});
// Variant with an explicit pi_p value, used by the harness to demonstrate
// mutation sensitivity.
BoundSides thm17_chain(double p, double r, double pi_p_value, const EvalConfig& cfg = {});

// Classical two-sided artanh bounds for K = K_{1/2}.
BoundSides aq_bounds(double r);

// l_p(r) and u_p(r) bracketing mu_{1/p}(r); p >= 2.
BoundSides thm19_lu(double p, double r);

// Bracket for mu_{1/p}(r') built from K_{1/p}(r); p >= 2.
BoundSides mu_complement_bounds(double p, double r, const EvalConfig& cfg = {});

// max{exp(pi(K-1)/sin(pi a)), 1 + t(K-1)sin^2(pi a)} and exp(t(K-1)) with
// t = 4 K_a(1/sqrt 2)^2/(pi sin(pi a)); brackets lambda_a(K) for K > 1.
BoundSides remark310_lambda_bounds(const OrderParam& a, double K,
                                   const EvalConfig& cfg = {});

// Part 1 brackets mu_a(r) - mu_a(r'); part 2 brackets 2 mu_a(r);
// 0 < r < 1/sqrt(2).
BoundSides cor313_mu_bounds(const OrderParam& a, double r, int part,
                            const EvalConfig& cfg = {});

// tanh(K artanh r); lies below phi_K^{a,c}(r) for K > 1.
double thm45_tanh_bound(double K, double r);

}  // namespace geim::bounds
