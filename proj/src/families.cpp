#include "armsrace/families.hpp"

#include <cmath>

namespace armsrace {

namespace {

void require_nonneg(double a, const char* name) {
  if (!(a >= 0.0)) {  // also rejects NaN
    throw std::domain_error(std::string(name) + " must be >= 0");
  }
}

void require_finite_positive(double x, const char* name) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw ValidationError(std::string(name) + " must be a positive real");
  }
}

}  // namespace

AmplificationSpec AmplificationSpec::logarithmic(double alpha) {
  require_finite_positive(alpha, "alpha");
  return {AmplificationFamily::Logarithmic, alpha, 1.0};
}

AmplificationSpec AmplificationSpec::saturating(double alpha,
                                                double saturation) {
  require_finite_positive(alpha, "alpha");
  require_finite_positive(saturation, "saturation");
  return {AmplificationFamily::Saturating, alpha, saturation};
}

double eval_h(const AmplificationSpec& h, double a) {
  require_nonneg(a, "a");
  switch (h.family) {
    case AmplificationFamily::Logarithmic:
      return 1.0 + h.alpha * std::log1p(a);
    case AmplificationFamily::Saturating:
      return 1.0 + h.alpha * a / (1.0 + h.saturation * a);
  }
  throw ValidationError("unknown amplification family");
}

double h_prime(const AmplificationSpec& h, double a) {
  require_nonneg(a, "a");
  switch (h.family) {
    case AmplificationFamily::Logarithmic:
      return h.alpha / (1.0 + a);
    case AmplificationFamily::Saturating: {
      const double u = 1.0 + h.saturation * a;
      return h.alpha / (u * u);
    }
  }
  throw ValidationError("unknown amplification family");
}

double h_second(const AmplificationSpec& h, double a) {
  require_nonneg(a, "a");
  switch (h.family) {
    case AmplificationFamily::Logarithmic: {
      const double u = 1.0 + a;
      return -h.alpha / (u * u);
    }
    case AmplificationFamily::Saturating: {
      const double u = 1.0 + h.saturation * a;
      return -2.0 * h.alpha * h.saturation / (u * u * u);
    }
  }
  throw ValidationError("unknown amplification family");
}

ErosionSpec ErosionSpec::hyperbolic(double delta0, double beta) {
  if (!(delta0 > 0.0 && delta0 <= 1.0)) {
    throw ValidationError("delta0 must lie in (0, 1]");
  }
  require_finite_positive(beta, "beta");
  return {ErosionFamily::Hyperbolic, delta0, beta, 1.0, true};
}

ErosionSpec ErosionSpec::power_law(double delta0, double beta, double k,
                                   bool allow_k_above_one) {
  if (!(delta0 > 0.0 && delta0 <= 1.0)) {
    throw ValidationError("delta0 must lie in (0, 1]");
  }
  require_finite_positive(beta, "beta");
  require_finite_positive(k, "k");
  if (k > 1.0 && !allow_k_above_one) {
    throw ValidationError(
        "PowerLaw exponent k must lie in (0, 1]; k > 1 drops the uniqueness "
        "guarantee and requires the explicit override");
  }
  return {ErosionFamily::PowerLaw, delta0, beta, k, k <= 1.0};
}

ErosionSpec ErosionSpec::exponential(double delta0, double beta) {
  if (!(delta0 > 0.0 && delta0 <= 1.0)) {
    throw ValidationError("delta0 must lie in (0, 1]");
  }
  require_finite_positive(beta, "beta");
  return {ErosionFamily::Exponential, delta0, beta, 1.0, false};
}

double eval_delta(const ErosionSpec& d, double a) {
  require_nonneg(a, "a");
  switch (d.family) {
    case ErosionFamily::Hyperbolic:
      return d.delta0 / (1.0 + d.beta * a);
    case ErosionFamily::PowerLaw:
      return d.delta0 * std::pow(1.0 + d.beta * a, -d.k);
    case ErosionFamily::Exponential:
      return d.delta0 * std::exp(-d.beta * a);
  }
  throw ValidationError("unknown erosion family");
}

double delta_prime(const ErosionSpec& d, double a) {
  require_nonneg(a, "a");
  switch (d.family) {
    case ErosionFamily::Hyperbolic: {
      const double u = 1.0 + d.beta * a;
      return -d.delta0 * d.beta / (u * u);
    }
    case ErosionFamily::PowerLaw:
      return -d.delta0 * d.k * d.beta * std::pow(1.0 + d.beta * a, -d.k - 1.0);
    case ErosionFamily::Exponential:
      return -d.delta0 * d.beta * std::exp(-d.beta * a);
  }
  throw ValidationError("unknown erosion family");
}

double delta_second(const ErosionSpec& d, double a) {
  require_nonneg(a, "a");
  switch (d.family) {
    case ErosionFamily::Hyperbolic: {
      const double u = 1.0 + d.beta * a;
      return 2.0 * d.delta0 * d.beta * d.beta / (u * u * u);
    }
    case ErosionFamily::PowerLaw:
      return d.delta0 * d.k * (d.k + 1.0) * d.beta * d.beta *
             std::pow(1.0 + d.beta * a, -d.k - 2.0);
    case ErosionFamily::Exponential:
      return d.delta0 * d.beta * d.beta * std::exp(-d.beta * a);
  }
  throw ValidationError("unknown erosion family");
}

double adversarial_discount(const ErosionSpec& d, double a) {
  return eval_delta(d, a) / d.delta0;
}

}  // namespace armsrace
