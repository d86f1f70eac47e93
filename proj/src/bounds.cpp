#include "geim/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "geim/hypergeometric.hpp"
#include "geim/scalar_special.hpp"

namespace geim::bounds {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = kPi / 2.0;
const double kInvSqrt2 = std::numbers::sqrt2 / 2.0;

using elliptic::Radius;

// log(r^2) and log(r'^2) without cancellation near the endpoints.
double log_r2(double r) { return 2.0 * std::log(r); }
double log_rc2(double r) { return std::log1p(-r) + std::log1p(r); }

void require_r_open(const char* fn, double r) {
  if (!(r > 0.0 && r < 1.0)) throw std::domain_error(std::string(fn) + ": r must lie in (0, 1)");
}

}  // namespace

std::vector<double> BoundSides::chain() const {
  std::vector<double> out;
  out.reserve(middles.size() + 2);
  out.push_back(lower);
  out.insert(out.end(), middles.begin(), middles.end());
  out.push_back(upper);
  return out;
}

BoundSides thm15_chain(double a, double b, double c, double r, double p, int part,
                       const EvalConfig& cfg) {
  require_r_open("thm15_chain", r);
  if (!(p >= 1.0)) throw std::domain_error("thm15_chain: requires p >= 1");
  const double r_lo = std::pow(r, p);
  const double r_hi = std::pow(r, 1.0 / p);
  switch (part) {
    case 1: {
      if (!(a > 0.0 && b > 0.0 && c > 0.0))
        throw std::domain_error("thm15_chain: requires a, b, c > 0");
      auto F = [&](double z) { return hyp::gauss_2f1_c(a, b, c, z, 1.0 - z, cfg); };
      return {std::pow(F(r_lo), 1.0 / p), {F(r)}, std::pow(F(r_hi), p)};
    }
    case 2: {
      const OrderParam ord(a);
      const double lo = std::pow(kHalfPi, 1.0 - 1.0 / p) *
                        std::pow(ellK(ord, Radius::from_r(r_lo), cfg), 1.0 / p);
      const double hi = std::pow(kHalfPi, 1.0 - p) *
                        std::pow(ellK(ord, Radius::from_r(r_hi), cfg), p);
      return {lo, {ellK(ord, Radius::from_r(r), cfg)}, hi};
    }
    case 3: {
      const OrderParam ord(a);
      const double lo = std::pow(kHalfPi, 1.0 - p) *
                        std::pow(ellE(ord, Radius::from_r(r_hi), cfg), p);
      const double hi = std::pow(kHalfPi, 1.0 - 1.0 / p) *
                        std::pow(ellE(ord, Radius::from_r(r_lo), cfg), 1.0 / p);
      return {lo, {ellE(ord, Radius::from_r(r), cfg)}, hi};
    }
    default:
      throw std::domain_error("thm15_chain: part must be 1, 2, or 3");
  }
}

BoundSides thm17_chain(double p, double r, const EvalConfig& cfg) {
  const special::PExponent pe(p);
  return thm17_chain(p, r, special::pi_p(pe), cfg);
}

BoundSides thm17_chain(double p, double r, double pi_p_value, const EvalConfig& cfg) {
  if (!(p >= 2.0)) throw std::domain_error("thm17_chain: requires p >= 2");
  require_r_open("thm17_chain", r);
  const special::PExponent pe(p);
  const double lrc2 = log_rc2(r);
  const double lower = kHalfPi * std::sqrt(special::artanh_p(pe, r) / r);
  const double mid1 = kHalfPi * (1.0 - (p - 1.0) / (p * p) * lrc2);
  const double K = ellK(OrderParam(1.0 / p), Radius::from_r(r), cfg);
  const double upper = kHalfPi * (1.0 - 2.0 / (p * pi_p_value) * lrc2);
  return {lower, {mid1, K}, upper};
}

BoundSides aq_bounds(double r) {
  require_r_open("aq_bounds", r);
  const double ratio = std::atanh(r) / r;
  return {kHalfPi * std::pow(ratio, 0.75), {}, kHalfPi * ratio};
}

BoundSides thm19_lu(double p, double r) {
  if (!(p >= 2.0)) throw std::domain_error("thm19_lu: requires p >= 2");
  require_r_open("thm19_lu", r);
  const double pip = special::pi_p(special::PExponent(p));
  const double lr2 = log_r2(r);
  const double lrc2 = log_rc2(r);
  const double l = (pip / 2.0) * (pip / 2.0) * (p * p - (p - 1.0) * lr2) /
                   (p * pip - 2.0 * lrc2);
  const double u = (p / 2.0) * (p / 2.0) * (p * pip - 2.0 * lr2) /
                   (p * p - (p - 1.0) * lrc2);
  return {l, {}, u};
}

BoundSides mu_complement_bounds(double p, double r, const EvalConfig& cfg) {
  if (!(p >= 2.0)) throw std::domain_error("mu_complement_bounds: requires p >= 2");
  require_r_open("mu_complement_bounds", r);
  const double pip = special::pi_p(special::PExponent(p));
  const double K = ellK(OrderParam(1.0 / p), Radius::from_r(r), cfg);
  const double pref = p * pip / (2.0 * kPi);
  const double lr2 = log_r2(r);
  const double lower = pref * K / (1.0 - (2.0 / (p * pip)) * lr2);
  const double upper = pref * K / (1.0 - ((p - 1.0) / p) * lr2 / p);
  return {lower, {}, upper};
}

BoundSides remark310_lambda_bounds(const OrderParam& a, double K, const EvalConfig& cfg) {
  if (!(K > 1.0)) throw std::domain_error("remark310_lambda_bounds: requires K > 1");
  const double sin_pa = std::sin(kPi * a.a());
  const double Ksym = ellK(a, Radius::from_parts(kInvSqrt2, kInvSqrt2), cfg);
  const double t = 4.0 * Ksym * Ksym / (kPi * sin_pa);
  const double lower = std::max(std::exp(kPi * (K - 1.0) / sin_pa),
                                1.0 + t * (K - 1.0) * sin_pa * sin_pa);
  return {lower, {}, std::exp(t * (K - 1.0))};
}

BoundSides cor313_mu_bounds(const OrderParam& a, double r, int part, const EvalConfig& cfg) {
  if (!(r > 0.0 && r < kInvSqrt2))
    throw std::domain_error("cor313_mu_bounds: requires r in (0, 1/sqrt(2))");
  const Radius rad = Radius::from_r(r);
  const double g = std::log(rad.rc() / rad.r());
  const double Ksym = ellK(a, Radius::from_parts(kInvSqrt2, kInvSqrt2), cfg);
  const double t = kPi * kPi / (2.0 * Ksym * Ksym);
  switch (part) {
    case 1:
      return {g, {}, t * g};
    case 2: {
      const double P = kPi / std::sin(kPi * a.a());
      return {g + std::hypot(P, g), {}, t * g + std::hypot(P, t * g)};
    }
    default:
      throw std::domain_error("cor313_mu_bounds: part must be 1 or 2");
  }
}

double thm45_tanh_bound(double K, double r) {
  if (!(K > 0.0)) throw std::domain_error("thm45_tanh_bound: requires K > 0");
  require_r_open("thm45_tanh_bound", r);
  return std::tanh(K * std::atanh(r));
}

}  // namespace geim::bounds
