#pragma once

#include "armsrace/errors.hpp"

namespace armsrace {

// Capability amplification h(a): h(0) = 1, h' > 0, h'' < 0, alpha = h'(0).
enum class AmplificationFamily { Logarithmic, Saturating };

struct AmplificationSpec {
  AmplificationFamily family = AmplificationFamily::Logarithmic;
  double alpha = 1.0;       // initial marginal gain h'(0)
  double saturation = 1.0;  // Saturating only: h -> 1 + alpha/saturation

  // h(a) = 1 + alpha * ln(1 + a)
  static AmplificationSpec logarithmic(double alpha);
  // h(a) = 1 + alpha * a / (1 + saturation * a)
  static AmplificationSpec saturating(double alpha, double saturation);
};

double eval_h(const AmplificationSpec& h, double a);
double h_prime(const AmplificationSpec& h, double a);
double h_second(const AmplificationSpec& h, double a);

// Detection erosion delta(a): delta(0) = delta0, strictly decreasing to 0.
// uniqueness_guarantee marks families satisfying delta*delta'' >= 2*delta'^2,
// which makes sqrt(h/delta) strictly concave for every admissible h.
enum class ErosionFamily { Hyperbolic, PowerLaw, Exponential };

struct ErosionSpec {
  ErosionFamily family = ErosionFamily::Hyperbolic;
  double delta0 = 1.0;  // baseline per-unit detection effectiveness, in (0, 1]
  double beta = 1.0;    // erosion steepness
  double k = 1.0;       // PowerLaw exponent
  bool uniqueness_guarantee = true;

  // delta(a) = delta0 / (1 + beta a); satisfies the condition with equality.
  static ErosionSpec hyperbolic(double delta0, double beta);
  // delta(a) = delta0 / (1 + beta a)^k; condition holds iff k <= 1.
  // k > 1 is rejected unless allow_k_above_one is set, and then the
  // uniqueness guarantee is dropped.
  static ErosionSpec power_law(double delta0, double beta, double k,
                               bool allow_k_above_one = false);
  // delta(a) = delta0 * exp(-beta a); never satisfies the condition.
  static ErosionSpec exponential(double delta0, double beta);
};

double eval_delta(const ErosionSpec& d, double a);
double delta_prime(const ErosionSpec& d, double a);
double delta_second(const ErosionSpec& d, double a);

// Fraction of defender effectiveness retained at attacker investment a:
// D(a) = delta(a)/delta0 in (0, 1]. The discount itself is 1 - D(a).
double adversarial_discount(const ErosionSpec& d, double a);

}  // namespace armsrace
