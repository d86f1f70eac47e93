#pragma once

// Scalar special functions shared by the whole library: gamma, beta,
// digamma, the shifted factorial, the Ramanujan constant R, the
// p-generalized inverse hyperbolic tangent and its constant pi_p.

namespace geim::special {

inline constexpr double euler_gamma = 0.57721566490153286060651209008240243;

// Exponent of the p-generalized inverse hyperbolic tangent; requires p > 1.
class PExponent {
 public:
  explicit PExponent(double p);
  double value() const noexcept { return p_; }

 private:
  double p_;
};

// Shifted factorial a(a+1)...(a+n-1); (a,0) = 1 for a != 0.
double pochhammer(double a, int n);

double log_gamma(double x);  // x > 0
double gamma_fn(double x);   // x > 0, overflow signalled past ~171.6
double beta_fn(double x, double y);
double digamma(double x);    // x > 0

// R(a) = -2*gamma - psi(a) - psi(1-a), symmetric under a <-> 1-a.
double ramanujan_r(double a);
// Two-parameter form -psi(a) - psi(b) - 2*gamma; controls the
// zero-balanced logarithmic regime of F(a,b;a+b;z) near z = 1.
double ramanujan_r(double a, double b);

// artanh_p(x) = integral_0^x dt/(1 - t^p) for 0 <= x < 1.
double artanh_p(const PExponent& p, double x);

// pi_p = 2*pi / (p*sin(pi/p)).
double pi_p(const PExponent& p);

}  // namespace geim::special
