#include "armsrace/strategic.hpp"

#include <algorithm>
#include <cmath>

#include "armsrace/optimize.hpp"

namespace armsrace {

namespace {

// Overall breach probability of an attack touching n surfaces that each
// breach independently with probability q.
double aggregate_breach(double q, double n) {
  return -std::expm1(n * std::log1p(-q));
}

// Best attacker investment against fixed posture d on an n-surface attack,
// together with the achieved gross-minus-variable-cost payoff. The fixed
// adoption cost is intentionally excluded here.
struct AttackOptimum {
  double a = 0.0;
  double payoff = 0.0;  // B * P(a*) - c_a * a*
  double breach = 0.0;  // P(a*)
};

AttackOptimum optimal_attack(const ModelParams& p, double d, double s_eff,
                             double n_surfaces) {
  const auto breach = [&](double a) {
    return aggregate_breach(breach_probability(p, a, d, s_eff), n_surfaces);
  };
  const auto objective = [&](double a) {
    return p.B * breach(a) - p.c_a * a;
  };
  const double a_max = p.B / p.c_a;
  AttackOptimum opt;
  if (a_max <= 0.0) {
    opt.breach = breach(0.0);
    opt.payoff = p.B * opt.breach;
    return opt;
  }
  const ScalarMaximum m = scan_maximize(objective, 0.0, a_max, 129, 1e-12, 400);
  opt.a = m.arg;
  opt.payoff = m.value;
  opt.breach = breach(m.arg);
  return opt;
}

// Defender posture numerically best-responding to a fixed attack profile
// (used by the optional mode; the aggregate objective has no closed form).
double numeric_defender_response(const ModelParams& p, double a, double s_eff,
                                 double n_surfaces) {
  const double d_max = p.V / p.c_d;
  if (d_max <= 0.0) return 0.0;
  const auto objective = [&](double d) {
    const double P =
        aggregate_breach(breach_probability(p, a, d, s_eff), n_surfaces);
    return -p.V * P - p.c_d * d;
  };
  return scan_maximize(objective, 0.0, d_max, 129, 1e-12, 400).arg;
}

// Fixed point of (defender posture, attacker investment) for one attack type.
AttackOptimum solve_attack_with_defense(const ModelParams& p, double d_fixed,
                                        double s_eff, double n_surfaces,
                                        bool defender_best_responds,
                                        double* d_used) {
  if (!defender_best_responds) {
    *d_used = d_fixed;
    return optimal_attack(p, d_fixed, s_eff, n_surfaces);
  }
  double d = d_fixed;
  AttackOptimum opt = optimal_attack(p, d, s_eff, n_surfaces);
  for (int i = 0; i < 2000; ++i) {
    const double d_br = numeric_defender_response(p, opt.a, s_eff, n_surfaces);
    const double d_next = d + 0.5 * (d_br - d);
    const AttackOptimum next = optimal_attack(p, d_next, s_eff, n_surfaces);
    const double move =
        std::max(std::fabs(d_next - d), std::fabs(next.a - opt.a));
    d = d_next;
    opt = next;
    if (move < 1e-9) break;
  }
  *d_used = d;
  return opt;
}

}  // namespace

DeterrenceScenario::DeterrenceScenario(ModelParams base, double d_fixed,
                                       AmplificationSpec h_simple,
                                       AmplificationSpec h_complex, int N_a,
                                       double gamma_a, double rho,
                                       bool simple_attack_diluted,
                                       bool defender_best_responds)
    : base(std::move(base)),
      d_fixed(d_fixed),
      h_simple(h_simple),
      h_complex(h_complex),
      N_a(N_a),
      gamma_a(gamma_a),
      rho(rho),
      simple_attack_diluted(simple_attack_diluted),
      defender_best_responds(defender_best_responds) {
  if (!(d_fixed >= 0.0)) throw ValidationError("d_fixed must be >= 0");
  if (N_a < 1) throw ValidationError("N_a must be an integer >= 1");
  if (!(gamma_a > 0.0 && gamma_a <= 1.0)) {
    throw ValidationError("gamma_a must lie in (0, 1]");
  }
  if (!(rho >= 0.0 && rho <= 1.0)) throw ValidationError("rho must lie in [0, 1]");
  // A genuine complex attack (N_a >= 2) must carry strictly more
  // amplification everywhere; the degenerate single-surface probe only needs
  // h_complex to not fall below h_simple.
  for (int i = 1; i <= 64; ++i) {
    const double a = 0.25 * static_cast<double>(i);
    const double hc = eval_h(h_complex, a);
    const double hs = eval_h(h_simple, a);
    if (N_a >= 2 ? !(hc > hs) : !(hc >= hs)) {
      throw ValidationError(
          "h_complex must dominate h_simple pointwise on a > 0");
    }
  }
}

DeltaPiReport delta_pi_report(const DeterrenceScenario& sc, double gamma_d) {
  if (!(gamma_d >= 0.0 && gamma_d <= 1.0)) {
    throw std::domain_error("gamma_d must lie in [0, 1]");
  }
  const double realized = std::min(sc.gamma_a, gamma_d);
  const double N = static_cast<double>(sc.N_a);
  const double s = sc.base.s;

  const double s_complex = effective_signal_at(s, N, sc.rho, realized);
  const double s_simple =
      sc.simple_attack_diluted ? s / std::pow(N, sc.rho) : s;

  // The complex campaign splits its total investment a over N_a surfaces, so
  // each surface contests with per-surface effort e = a / N_a. Optimizing in
  // e with the unit cost scaled to N_a * c_a is the same problem: the clamp
  // a <= B/c_a maps to e <= B/(N_a c_a) and the variable cost c_a a = N_a c_a e.
  const ModelParams base_c = sc.base.with_h(sc.h_complex);
  const ModelParams p_complex(base_c.q0, base_c.h, base_c.delta, base_c.s,
                              base_c.V, base_c.B, base_c.c_d, base_c.c_a * N,
                              base_c.F);
  const ModelParams p_simple = sc.base.with_h(sc.h_simple);

  DeltaPiReport rep;
  const AttackOptimum complex_opt = solve_attack_with_defense(
      p_complex, sc.d_fixed, s_complex, N, sc.defender_best_responds,
      &rep.d_complex);
  const AttackOptimum simple_opt = solve_attack_with_defense(
      p_simple, sc.d_fixed, s_simple, 1.0, sc.defender_best_responds,
      &rep.d_simple);

  rep.p_complex = complex_opt.breach;
  rep.p_simple = simple_opt.breach;
  rep.a_complex = N * complex_opt.a;  // back to total campaign investment
  rep.a_simple = simple_opt.a;
  rep.value = complex_opt.payoff - simple_opt.payoff;
  return rep;
}

double delta_pi(const DeterrenceScenario& sc, double gamma_d) {
  return delta_pi_report(sc, gamma_d).value;
}

DeterrenceThreshold deterrence_threshold(const DeterrenceScenario& sc) {
  DeterrenceThreshold out;
  out.delta_pi_at_zero = delta_pi(sc, 0.0);
  out.delta_pi_at_gamma_a = delta_pi(sc, sc.gamma_a);
  if (out.delta_pi_at_zero <= 0.0) {
    out.status = DeterrenceStatus::ComplexNeverProfitable;
    return out;
  }
  if (out.delta_pi_at_gamma_a >= 0.0) {
    out.status = DeterrenceStatus::ComplexAlwaysProfitable;
    return out;
  }

  // Scan for the first crossing and check monotone decrease along the way.
  constexpr int kScan = 128;
  double prev_g = out.delta_pi_at_zero;
  double prev_x = 0.0;
  double lo = 0.0, hi = sc.gamma_a;
  bool found = false;
  bool monotone = true;
  for (int i = 1; i < kScan; ++i) {
    const double x =
        sc.gamma_a * static_cast<double>(i) / static_cast<double>(kScan - 1);
    const double g = delta_pi(sc, x);
    if (g > prev_g + 1e-12) monotone = false;
    if (!found && g <= 0.0) {
      found = true;
      lo = prev_x;
      hi = x;
    }
    prev_x = x;
    prev_g = g;
  }
  if (!found) {
    lo = prev_x;
    hi = sc.gamma_a;
  }
  const auto g = [&](double x) { return delta_pi(sc, x); };
  out.gamma_d_star = bisect_root(g, lo, hi, 1e-9, 1e-15, 200);
  out.status = DeterrenceStatus::Threshold;
  out.monotonicity_violated = !monotone;
  return out;
}

namespace {

DeterrenceScenario perturbed(const DeterrenceScenario& sc,
                             ThresholdParameter param, double delta) {
  ModelParams base = sc.base;
  AmplificationSpec h_complex = sc.h_complex;
  double d_fixed = sc.d_fixed;
  switch (param) {
    case ThresholdParameter::SignalBudget:
      base = ModelParams(base.q0, base.h, base.delta, base.s + delta, base.V,
                         base.B, base.c_d, base.c_a, base.F);
      break;
    case ThresholdParameter::ComplexAlpha:
      h_complex = h_complex.family == AmplificationFamily::Logarithmic
                      ? AmplificationSpec::logarithmic(h_complex.alpha + delta)
                      : AmplificationSpec::saturating(
                            h_complex.alpha + delta, h_complex.saturation);
      break;
    case ThresholdParameter::AttackerBenefit:
      base = ModelParams(base.q0, base.h, base.delta, base.s, base.V,
                         base.B + delta, base.c_d, base.c_a, base.F);
      break;
    case ThresholdParameter::AttackerUnitCost:
      base = ModelParams(base.q0, base.h, base.delta, base.s, base.V, base.B,
                         base.c_d, base.c_a + delta, base.F);
      break;
    case ThresholdParameter::DefenderInvestment:
      d_fixed += delta;
      break;
  }
  return DeterrenceScenario(base, d_fixed, sc.h_simple, h_complex, sc.N_a,
                            sc.gamma_a, sc.rho, sc.simple_attack_diluted,
                            sc.defender_best_responds);
}

}  // namespace

double threshold_sensitivity(const DeterrenceScenario& sc,
                             ThresholdParameter parameter, double step) {
  if (!(step > 0.0)) throw std::domain_error("step must be > 0");
  const DeterrenceThreshold base = deterrence_threshold(sc);
  if (base.status != DeterrenceStatus::Threshold) {
    throw ComputationError(
        "threshold_sensitivity: scenario has no interior threshold");
  }

  // (i) central difference of the re-solved threshold.
  const DeterrenceThreshold up = deterrence_threshold(perturbed(sc, parameter, step));
  const DeterrenceThreshold dn =
      deterrence_threshold(perturbed(sc, parameter, -step));
  if (up.status != DeterrenceStatus::Threshold ||
      dn.status != DeterrenceStatus::Threshold) {
    throw ComputationError(
        "threshold_sensitivity: perturbation left the threshold regime");
  }
  const double fd = (up.gamma_d_star - dn.gamma_d_star) / (2.0 * step);

  // (ii) implicit-function ratio at the unperturbed root.
  const double g_star = base.gamma_d_star;
  const double dpi_dx = (delta_pi(perturbed(sc, parameter, step), g_star) -
                         delta_pi(perturbed(sc, parameter, -step), g_star)) /
                        (2.0 * step);
  double hg = 1e-5 * sc.gamma_a;
  hg = std::min(hg, 0.5 * std::min(g_star, sc.gamma_a - g_star));
  if (!(hg > 0.0)) {
    throw DegenerateSensitivityError(
        "threshold_sensitivity: root sits at the bracket edge");
  }
  const double dpi_dg =
      (delta_pi(sc, g_star + hg) - delta_pi(sc, g_star - hg)) / (2.0 * hg);
  if (std::fabs(dpi_dg) < 1e-12) {
    throw DegenerateSensitivityError(
        "threshold_sensitivity: delta_pi is locally flat in gamma_d");
  }
  const double ratio = -dpi_dx / dpi_dg;

  const double tol =
      1e-3 * std::max({std::fabs(fd), std::fabs(ratio), 1e-9});
  if (std::fabs(fd - ratio) > tol) {
    throw ComputationError(
        "threshold_sensitivity: finite-difference and implicit-function "
        "estimates disagree");
  }
  return fd;
}

TargetSelection select_target(const ModelParams& base,
                              const std::vector<DefenderProfile>& profiles,
                              TargetingMode mode, double fixed_a, double rho) {
  if (profiles.empty()) {
    throw ValidationError("select_target requires at least one defender");
  }
  if (!(rho >= 0.0 && rho <= 1.0)) {
    throw ValidationError("rho must lie in [0, 1]");
  }
  if (mode == TargetingMode::FixedA && !(fixed_a >= 0.0)) {
    throw std::domain_error("fixed_a must be >= 0");
  }

  TargetSelection sel;
  double best_score = 0.0;
  for (std::size_t k = 0; k < profiles.size(); ++k) {
    const DefenderProfile& prof = profiles[k];
    if (prof.N < 1) throw ValidationError("profile N must be >= 1");
    if (!(prof.d >= 0.0)) throw ValidationError("profile d must be >= 0");
    if (!(prof.gamma >= 0.0 && prof.gamma <= 1.0)) {
      throw ValidationError("profile gamma must lie in [0, 1]");
    }
    const double N = static_cast<double>(prof.N);
    const double s_eff = effective_signal_at(prof.s, N, rho, prof.gamma);
    // This defender's stakes, the shared attacker cost side.
    const ModelParams pk(base.q0, base.h, base.delta, prof.s, prof.V, prof.B,
                         base.c_d, base.c_a, base.F);

    TargetRow row;
    row.index = static_cast<int>(k);
    if (mode == TargetingMode::FixedA) {
      row.a = fixed_a;
    } else {
      const AttackOptimum opt = optimal_attack(pk, prof.d, s_eff, N);
      // Adoption check with the fixed cost against abstaining.
      const double abstain =
          pk.B * aggregate_breach(breach_probability(pk, 0.0, prof.d, s_eff), N);
      row.a = (opt.a > 0.0 && opt.payoff - pk.F > abstain) ? opt.a : 0.0;
    }
    row.q = aggregate_breach(breach_probability(pk, row.a, prof.d, s_eff), N);
    row.expected_value = prof.B * row.q;
    row.net_payoff = row.expected_value - base.c_a * row.a -
                     (row.a > 0.0 ? base.F : 0.0);
    const double score =
        mode == TargetingMode::FixedA ? row.expected_value : row.net_payoff;
    if (k == 0 || score > best_score) {
      best_score = score;
      sel.selected = row.index;
    }
    sel.table.push_back(row);
  }
  return sel;
}

RedirectionReport redirection_effect(
    const ModelParams& base, const std::vector<DefenderProfile>& profiles,
    int k, double d_step, TargetingMode mode, double fixed_a, double rho) {
  if (k < 0 || static_cast<std::size_t>(k) >= profiles.size()) {
    throw ValidationError("redirection_effect: defender index out of range");
  }
  RedirectionReport rep;
  if (profiles.size() < 2) return rep;  // nothing to redirect to

  const TargetSelection before = select_target(base, profiles, mode, fixed_a, rho);
  std::vector<DefenderProfile> hardened = profiles;
  hardened[static_cast<std::size_t>(k)].d += d_step;
  const TargetSelection after = select_target(base, hardened, mode, fixed_a, rho);

  rep.before = before.selected;
  rep.after = after.selected;
  for (std::size_t i = 0; i < profiles.size(); ++i) {
    RedirectionRow row;
    row.index = static_cast<int>(i);
    row.ev_before = before.table[i].expected_value;
    row.ev_after = after.table[i].expected_value;
    row.was_target = before.selected == row.index;
    row.is_target = after.selected == row.index;
    rep.rows.push_back(row);
  }
  return rep;
}

}  // namespace armsrace
