#include "geim/elliptic.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "geim/errors.hpp"
#include "geim/scalar_special.hpp"

namespace geim::elliptic {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = kPi / 2.0;

[[noreturn]] void domain_fail(const char* fn, const char* what) {
  throw std::domain_error(std::string(fn) + ": " + what);
}

void require_open_radius(const char* fn, const Radius& r) {
  if (!(r.r() > 0.0 && r.r() < 1.0)) domain_fail(fn, "requires r in (0, 1)");
}

}  // namespace

OrderParam::OrderParam(double a) : a_(a) {
  if (!(a > 0.0 && a <= 0.5)) throw std::domain_error("OrderParam: requires a in (0, 1/2]");
}

Radius Radius::from_r(double r) {
  if (!(r >= 0.0 && r <= 1.0)) throw std::domain_error("Radius: requires r in [0, 1]");
  return Radius(r, std::sqrt((1.0 - r) * (1.0 + r)));
}

Radius Radius::from_complement(double rc) {
  if (!(rc >= 0.0 && rc <= 1.0)) throw std::domain_error("Radius: requires r' in [0, 1]");
  return Radius(std::sqrt((1.0 - rc) * (1.0 + rc)), rc);
}

Radius Radius::from_parts(double r, double rc) {
  if (!(r >= 0.0 && r <= 1.0 && rc >= 0.0 && rc <= 1.0))
    throw std::domain_error("Radius: parts must lie in [0, 1]");
  if (std::abs(r * r + rc * rc - 1.0) > 64.0 * std::numeric_limits<double>::epsilon())
    throw std::domain_error("Radius: parts violate r^2 + r'^2 = 1");
  return Radius(r, rc);
}

TriParam::TriParam(double a, double b, double c) : a_(a), b_(b), c_(c) {
  if (!(a > 0.0 && b > 0.0 && c > 0.0))
    throw std::domain_error("TriParam: requires a, b, c > 0");
}

TriParam TriParam::two_param(double a, double c) {
  if (!(a > 0.0 && a < c && c <= 1.0))
    throw std::domain_error("TriParam::two_param: requires 0 < a < c <= 1");
  return TriParam(a, c - a, c);
}

bool TriParam::zero_balanced() const noexcept { return std::abs(c_ - a_ - b_) <= 1e-12; }

void TriParam::require_integral_form(const char* who) const {
  if (!(a_ < std::min(c_, 1.0) && b_ < c_ && c_ <= a_ + b_ + 1e-12))
    throw std::domain_error(std::string(who) +
                            ": requires 0 < a < min(c,1) and 0 < b < c <= a+b");
}

void TriParam::require_mu_form(const char* who) const {
  if (a_ + b_ + 1e-12 < c_)
    throw std::domain_error(std::string(who) + ": requires a + b >= c");
}

double ellK(const OrderParam& a, const Radius& r, const EvalConfig& cfg) {
  if (r.r() == 1.0) return std::numeric_limits<double>::infinity();
  if (r.r() == 0.0) return kHalfPi;
  return kHalfPi * hyp::gauss_2f1_c(a.a(), 1.0 - a.a(), 1.0, r.r2(), r.rc2(), cfg);
}

double ellKc(const OrderParam& a, const Radius& r, const EvalConfig& cfg) {
  return ellK(a, r.complement(), cfg);
}

double ellE(const OrderParam& a, const Radius& r, const EvalConfig& cfg) {
  if (r.r() == 0.0) return kHalfPi;
  if (r.r() == 1.0) return std::sin(kPi * a.a()) / (2.0 * (1.0 - a.a()));
  return kHalfPi * hyp::gauss_2f1_c(a.a() - 1.0, 1.0 - a.a(), 1.0, r.r2(), r.rc2(), cfg);
}

double ellEc(const OrderParam& a, const Radius& r, const EvalConfig& cfg) {
  return ellE(a, r.complement(), cfg);
}

double ellK(const OrderParam& a, double r, const EvalConfig& cfg) {
  return ellK(a, Radius::from_r(r), cfg);
}
double ellKc(const OrderParam& a, double r, const EvalConfig& cfg) {
  return ellKc(a, Radius::from_r(r), cfg);
}
double ellE(const OrderParam& a, double r, const EvalConfig& cfg) {
  return ellE(a, Radius::from_r(r), cfg);
}
double ellEc(const OrderParam& a, double r, const EvalConfig& cfg) {
  return ellEc(a, Radius::from_r(r), cfg);
}

double dK_dr(const OrderParam& a, const Radius& r, const EvalConfig& cfg) {
  require_open_radius("dK_dr", r);
  const double K = ellK(a, r, cfg);
  const double E = ellE(a, r, cfg);
  return 2.0 * (1.0 - a.a()) * (E - r.rc2() * K) / (r.r() * r.rc2());
}

double dE_dr(const OrderParam& a, const Radius& r, const EvalConfig& cfg) {
  require_open_radius("dE_dr", r);
  const double K = ellK(a, r, cfg);
  const double E = ellE(a, r, cfg);
  return 2.0 * (a.a() - 1.0) * (K - E) / r.r();
}

double ellK3(const TriParam& t, const Radius& r, const EvalConfig& cfg) {
  t.require_integral_form("ellK3");
  if (r.r() >= 1.0) domain_fail("ellK3", "requires r in [0, 1)");
  return 0.5 * special::beta_fn(t.a(), t.b()) *
         hyp::gauss_2f1_c(t.a(), t.b(), t.c(), r.r2(), r.rc2(), cfg);
}

double ellE3(const TriParam& t, const Radius& r, const EvalConfig& cfg) {
  t.require_integral_form("ellE3");
  if (r.r() >= 1.0) domain_fail("ellE3", "requires r in [0, 1)");
  return 0.5 * special::beta_fn(t.a(), t.b()) *
         hyp::gauss_2f1_c(t.a() - 1.0, t.b(), t.c(), r.r2(), r.rc2(), cfg);
}

double legendre_M(const TriParam& t, const Radius& r, const EvalConfig& cfg) {
  if (!t.zero_balanced() || !(t.a() < t.c() && t.c() <= 1.0))
    domain_fail("legendre_M", "requires the (a, c) shorthand with a < c <= 1");
  require_open_radius("legendre_M", r);
  const double K = ellK3(t, r, cfg);
  const double Kc = ellK3(t, r.complement(), cfg);
  const double E = ellE3(t, r, cfg);
  const double Ec = ellE3(t, r.complement(), cfg);
  const double scale = 2.0 / special::beta_fn(t.a(), t.b());
  return scale * scale * t.b() * (K * Ec + Kc * E - K * Kc);
}

}  // namespace geim::elliptic
