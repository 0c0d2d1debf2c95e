#include "armsrace/params.hpp"

#include <cmath>
#include <string>

namespace armsrace {

namespace {

void check(bool ok, const char* msg) {
  if (!ok) throw ValidationError(msg);
}

bool finite_nonneg(double x) { return std::isfinite(x) && x >= 0.0; }

}  // namespace

ModelParams::ModelParams(double q0, AmplificationSpec h, ErosionSpec delta,
                         double s, double V, double B, double c_d, double c_a,
                         double F)
    : q0(q0), h(h), delta(delta), s(s), V(V), B(B), c_d(c_d), c_a(c_a), F(F) {
  check(std::isfinite(q0) && q0 > 0.0 && q0 < 1.0, "q0 must lie in (0, 1)");
  check(finite_nonneg(s), "s must be >= 0");
  check(finite_nonneg(V), "V must be >= 0");
  check(finite_nonneg(B), "B must be >= 0");
  check(std::isfinite(c_d) && c_d > 0.0, "c_d must be > 0");
  check(std::isfinite(c_a) && c_a > 0.0, "c_a must be > 0");
  check(finite_nonneg(F), "F must be >= 0");
}

ModelParams ModelParams::with_h(const AmplificationSpec& repl) const {
  ModelParams copy = *this;
  copy.h = repl;
  return copy;
}

ModelParams ModelParams::with_delta_beta(double beta) const {
  ModelParams copy = *this;
  switch (delta.family) {
    case ErosionFamily::Hyperbolic:
      copy.delta = ErosionSpec::hyperbolic(delta.delta0, beta);
      break;
    case ErosionFamily::PowerLaw:
      copy.delta = ErosionSpec::power_law(delta.delta0, beta, delta.k,
                                          /*allow_k_above_one=*/true);
      break;
    case ErosionFamily::Exponential:
      copy.delta = ErosionSpec::exponential(delta.delta0, beta);
      break;
  }
  return copy;
}

SurfaceConfig::SurfaceConfig(int N, double rho, double gamma, double s)
    : N(N), rho(rho), gamma(gamma), s(s) {
  check(N >= 1, "N must be an integer >= 1");
  check(std::isfinite(rho) && rho >= 0.0 && rho <= 1.0,
        "rho must lie in [0, 1]");
  check(std::isfinite(gamma) && gamma >= 0.0 && gamma <= 1.0,
        "gamma must lie in [0, 1]");
  check(finite_nonneg(s), "s must be >= 0");
}

}  // namespace armsrace
