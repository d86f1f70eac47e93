#pragma once

// Generalized complete elliptic integrals K_a, E_a with complements and
// derivatives, their three-parameter extensions, and the Legendre
// M-function.

#include "geim/hypergeometric.hpp"

namespace geim::elliptic {

using hyp::EvalConfig;

// Order parameter a in (0, 1/2].
class OrderParam {
 public:
  explicit OrderParam(double a);
  double a() const noexcept { return a_; }

 private:
  double a_;
};

// Modulus r in [0, 1] carried together with its complement r' = sqrt(1-r^2)
// so that quantities like 1 - r^2 never cancel near the endpoints.
class Radius {
 public:
  static Radius from_r(double r);
  static Radius from_complement(double rc);
  // Both parts known accurately by the caller (must satisfy r^2 + rc^2 = 1).
  static Radius from_parts(double r, double rc);

  double r() const noexcept { return r_; }
  double rc() const noexcept { return rc_; }
  double r2() const noexcept { return r_ * r_; }
  double rc2() const noexcept { return rc_ * rc_; }
  Radius complement() const noexcept { return Radius(rc_, r_); }

 private:
  Radius(double r, double rc) : r_(r), rc_(rc) {}
  double r_, rc_;
};

// Parameters (a, b, c) of the three-parameter theory. Construction checks
// positivity only; the per-use constraints are checked by the operations.
class TriParam {
 public:
  TriParam(double a, double b, double c);
  // Shorthand (a, c) meaning b = c - a; requires 0 < a < c <= 1.
  static TriParam two_param(double a, double c);

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  double c() const noexcept { return c_; }
  bool zero_balanced() const noexcept;

  // 0 < a < min(c, 1) and 0 < b < c <= a + b.
  void require_integral_form(const char* who) const;
  // a + b >= c.
  void require_mu_form(const char* who) const;

 private:
  double a_, b_, c_;
};

// K_a(r) = (pi/2) F(a, 1-a; 1; r^2); K_a(0) = pi/2, K_a(1) = +infinity.
double ellK(const OrderParam& a, const Radius& r, const EvalConfig& cfg = {});
// K'_a(r) = K_a(r').
double ellKc(const OrderParam& a, const Radius& r, const EvalConfig& cfg = {});
// E_a(r) = (pi/2) F(a-1, 1-a; 1; r^2); E_a(1) = sin(pi a)/(2(1-a)).
double ellE(const OrderParam& a, const Radius& r, const EvalConfig& cfg = {});
double ellEc(const OrderParam& a, const Radius& r, const EvalConfig& cfg = {});

double ellK(const OrderParam& a, double r, const EvalConfig& cfg = {});
double ellKc(const OrderParam& a, double r, const EvalConfig& cfg = {});
double ellE(const OrderParam& a, double r, const EvalConfig& cfg = {});
double ellEc(const OrderParam& a, double r, const EvalConfig& cfg = {});

// dK_a/dr = 2(1-a)(E_a - r'^2 K_a)/(r r'^2), r in (0, 1).
double dK_dr(const OrderParam& a, const Radius& r, const EvalConfig& cfg = {});
// dE_a/dr = 2(a-1)(K_a - E_a)/r, r in (0, 1).
double dE_dr(const OrderParam& a, const Radius& r, const EvalConfig& cfg = {});

// K_{a,b,c}(r) = (B(a,b)/2) F(a, b; c; r^2), r in [0, 1).
double ellK3(const TriParam& t, const Radius& r, const EvalConfig& cfg = {});
// E_{a,b,c}(r) = (B(a,b)/2) F(a-1, b; c; r^2).
double ellE3(const TriParam& t, const Radius& r, const EvalConfig& cfg = {});

// Legendre M-function of the (a, c) shorthand,
// M(r^2) = (2/B(a,b))^2 b (K E' + K' E - K K'); strictly positive on (0,1).
double legendre_M(const TriParam& t, const Radius& r, const EvalConfig& cfg = {});

}  // namespace geim::elliptic
