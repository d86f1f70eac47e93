#include <cstdio>
#include "geim/modular.hpp"
using namespace geim;
int main() {
  elliptic::OrderParam a(0.5);
  std::printf("K(1/sqrt2) = %.15g\n", elliptic::ellK(a, 0.7071067811865476));
  std::printf("mu(0.5)    = %.15g\n", modular::mu(a, 0.5));
  std::printf("phi2(sym)  = %.15g\n", modular::phi(a, 2.0, 0.7071067811865476));
  std::printf("lambda(2)  = %.15g\n", modular::lambda_fn(a, 2.0));
  std::printf("eta roundtrip eta(1,x)=x: %.15g\n", modular::eta(a, 1.0, 3.5));
  std::printf("mu_inv(1e6): s=%.6g res=%.6g sat=%d\n",
              modular::mu_inv(a, 1e6).s(), modular::mu_inv(a, 1e6).residual,
              (int)modular::mu_inv(a, 1e6).saturated);
  std::printf("mu_inv(1e-6): s=%.17g res=%.6g\n",
              modular::mu_inv(a, 1e-6).s(), modular::mu_inv(a, 1e-6).residual);
  std::printf("E(0.999)   = %.15g\n", elliptic::ellE(a, 0.999));
  return 0;
}
