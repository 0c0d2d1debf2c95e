#include "armsrace/contest.hpp"

#include <cmath>

namespace armsrace {

namespace {

void require_nonneg(double x, const char* name) {
  if (!(x >= 0.0)) {
    throw std::domain_error(std::string(name) + " must be >= 0");
  }
}

void guard_denominator(double phi) {
  if (!(phi >= 1e-300)) {
    throw ComputationError("contest denominator below 1e-300");
  }
}

}  // namespace

double contest_denominator(const ModelParams& p, double a, double d,
                           double s_eff) {
  require_nonneg(a, "a");
  require_nonneg(d, "d");
  require_nonneg(s_eff, "s_eff");
  const double defense = eval_delta(p.delta, a) * d * s_eff;
  return p.q0 * eval_h(p.h, a) + (1.0 - p.q0) * (1.0 + defense);
}

double breach_probability(const ModelParams& p, double a, double d,
                          double s_eff) {
  require_nonneg(a, "a");
  require_nonneg(d, "d");
  require_nonneg(s_eff, "s_eff");
  const double hv = eval_h(p.h, a);
  const double defense = eval_delta(p.delta, a) * d * s_eff;
  if (hv == 1.0 && defense == 0.0) return p.q0;  // status quo, exactly
  const double num = p.q0 * hv;
  const double phi = num + (1.0 - p.q0) * (1.0 + defense);
  guard_denominator(phi);
  const double q = num / phi;
  // Projection onto [0, 1) if the division rounds up to 1 (q0 within one
  // ulp of 1 combined with huge amplification).
  return q < 1.0 ? q : std::nextafter(1.0, 0.0);
}

double adversarial_leverage(const ModelParams& p, double a) {
  return eval_h(p.h, a) / eval_delta(p.delta, a);
}

double payoff_defender(const ModelParams& p, double a, double d,
                       double s_eff) {
  return -p.V * breach_probability(p, a, d, s_eff) - p.c_d * d;
}

double payoff_attacker(const ModelParams& p, double a, double d,
                       double s_eff) {
  const double fixed = a > 0.0 ? p.F : 0.0;
  return p.B * breach_probability(p, a, d, s_eff) - p.c_a * a - fixed;
}

ChannelBreakdown attacker_marginal_breakdown(const ModelParams& p, double a,
                                             double d, double s_eff) {
  const double phi = contest_denominator(p, a, d, s_eff);
  guard_denominator(phi);
  const double phi2 = phi * phi;
  const double common = p.q0 * (1.0 - p.q0);
  const double ds = d * s_eff;
  ChannelBreakdown out;
  out.amplification_term =
      common * h_prime(p.h, a) * (1.0 + eval_delta(p.delta, a) * ds) / phi2;
  out.erosion_term = common * eval_h(p.h, a) *
                     std::fabs(delta_prime(p.delta, a)) * ds / phi2;
  out.total = out.amplification_term + out.erosion_term;
  return out;
}

double defender_marginal(const ModelParams& p, double a, double d,
                         double s_eff) {
  const double phi = contest_denominator(p, a, d, s_eff);
  guard_denominator(phi);
  return p.q0 * (1.0 - p.q0) * eval_h(p.h, a) * eval_delta(p.delta, a) *
         s_eff / (phi * phi);
}

}  // namespace armsrace
