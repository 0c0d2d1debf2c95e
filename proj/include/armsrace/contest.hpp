#pragma once

#include "armsrace/params.hpp"

namespace armsrace {

// Attacker marginal d(q)/d(a) split into its two channels.
struct ChannelBreakdown {
  double amplification_term;  // q0(1-q0) h'(a) (1 + delta d s) / Phi^2
  double erosion_term;        // q0(1-q0) h(a) |delta'(a)| d s / Phi^2
  double total;               // sum of the two channels
};

// Contest denominator Phi = q0 h(a) + (1-q0)(1 + delta(a) d s_eff).
double contest_denominator(const ModelParams& p, double a, double d,
                           double s_eff);

// Breach probability q = q0 h(a) / Phi, in [0, 1). Returns exactly q0 at the
// status quo (a = 0 and zero defense term).
double breach_probability(const ModelParams& p, double a, double d,
                          double s_eff);

// h(a)/delta(a): joint advantage from one unit of AI adoption.
double adversarial_leverage(const ModelParams& p, double a);

// U_D = -V q - c_d d
double payoff_defender(const ModelParams& p, double a, double d, double s_eff);
// U_A = B q - c_a a - F [a > 0]
double payoff_attacker(const ModelParams& p, double a, double d, double s_eff);

ChannelBreakdown attacker_marginal_breakdown(const ModelParams& p, double a,
                                             double d, double s_eff);

// -d(q)/d(d) = q0(1-q0) h(a) delta(a) s_eff / Phi^2, always >= 0.
double defender_marginal(const ModelParams& p, double a, double d,
                         double s_eff);

}  // namespace armsrace
