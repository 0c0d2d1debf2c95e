#include "armsrace/subcommands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <map>
#include <sstream>

#include "armsrace/dynamics.hpp"
#include "armsrace/equilibrium.hpp"
#include "armsrace/multisurface.hpp"
#include "armsrace/ratio.hpp"
#include "armsrace/rng.hpp"
#include "armsrace/strategic.hpp"
#include "armsrace/svg.hpp"

namespace armsrace {

const std::vector<std::string> kSubcommands = {
    "ratio",      "equilibrium", "dynamics", "scaling",
    "deterrence", "targeting",   "figures"};

namespace {

std::string hash_hex(std::uint64_t h) {
  char buf[24];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

ResultTable make_table(const Scenario& sc, const std::string& sub,
                       const std::string& name,
                       std::vector<std::string> cols) {
  ResultTable t;
  t.name = name;
  t.columns = std::move(cols);
  t.add_meta("scenario_hash", hash_hex(sc.hash));
  t.add_meta("tool_version", kToolVersion);
  t.add_meta("subcommand", sub);
  t.add_meta("table", name);
  t.add_meta("seed", std::to_string(sc.seed));
  return t;
}

const ModelParams& need_model(const Scenario& sc) {
  if (!sc.model) {
    throw ValidationError("scenario section 'model' is required");
  }
  return *sc.model;
}

const SurfaceConfig& need_surfaces(const Scenario& sc,
                                   const std::string& sub) {
  if (!sc.surfaces) {
    throw ValidationError("scenario section 'surfaces' is required by '" +
                          sub + "'");
  }
  return *sc.surfaces;
}

std::vector<double> log_grid(double lo, double hi, int points) {
  std::vector<double> g;
  g.reserve(points);
  const double llo = std::log10(lo);
  const double lhi = std::log10(hi);
  for (int i = 0; i < points; ++i) {
    g.push_back(std::pow(10.0, llo + (lhi - llo) * static_cast<double>(i) /
                                    static_cast<double>(points - 1)));
  }
  return g;
}

std::vector<double> linear_grid(double lo, double hi, int points) {
  std::vector<double> g;
  g.reserve(points);
  for (int i = 0; i < points; ++i) {
    g.push_back(lo + (hi - lo) * static_cast<double>(i) /
                         static_cast<double>(points - 1));
  }
  return g;
}

// ---------------------------------------------------------------- ratio ----

std::vector<ResultTable> run_ratio(const Scenario& sc) {
  const ModelParams& p = need_model(sc);
  std::vector<ResultTable> out;

  ResultTable single = make_table(sc, "ratio", "r0_single", {"r0"});
  single.add_row({r0_single(p)});
  out.push_back(std::move(single));

  if (sc.surfaces) {
    const SurfaceConfig& cfg = *sc.surfaces;
    ResultTable multi = make_table(
        sc, "ratio", "r0_multi",
        {"N", "rho", "gamma", "s", "s_eff", "r0", "dr0_dgamma_at_zero"});
    multi.add_row({static_cast<double>(cfg.N), cfg.rho, cfg.gamma, cfg.s,
                   effective_signal(cfg), r0_multi(p, cfg),
                   dgamma_sensitivity_at_zero(p, cfg)});
    out.push_back(std::move(multi));

    ResultTable crit = make_table(
        sc, "ratio", "critical_surfaces",
        {"found", "n_star", "n_star_integer", "dn_dgamma_defined",
         "dn_star_dgamma", "degenerate_derivative", "multiple_roots_possible",
         "note"});
    if (cfg.rho > 0.0) {
      const CriticalSurface c =
          critical_surface_count(p, cfg.rho, cfg.gamma, cfg.s);
      crit.add_row({c.found, c.n_star, c.n_star_integer,
                    c.dn_star_dgamma.has_value(),
                    c.dn_star_dgamma.value_or(0.0), c.degenerate_derivative,
                    c.multiple_roots_possible, std::string()});
    } else {
      crit.add_row({false, 0.0, 0.0, false, 0.0, false, false,
                    std::string("rho = 0: dilution channel absent")});
    }
    out.push_back(std::move(crit));

    ResultTable sweep =
        make_table(sc, "ratio", "r0_sweep_gamma", {"gamma", "r0", "ok", "note"});
    for (const SweepRow& row :
         sweep_r0(p, cfg, SweepAxis::Gamma, linear_grid(0.0, 1.0, 33))) {
      sweep.add_row({row.axis_value, row.r0, row.ok, row.error});
    }
    out.push_back(std::move(sweep));
  }
  return out;
}

// ---------------------------------------------------------- equilibrium ----

std::string adoption_text(AdoptionStatus s) {
  switch (s) {
    case AdoptionStatus::Threshold: return "threshold";
    case AdoptionStatus::NeverAdopts: return "never_adopts";
    case AdoptionStatus::AlwaysAdopts: return "always_adopts";
  }
  return "?";
}

std::vector<ResultTable> run_equilibrium(const Scenario& sc) {
  const ModelParams& p = need_model(sc);
  const double s_eff = sc.effective_s();
  std::vector<ResultTable> out;

  const EquilibriumResult eq = solve_equilibrium(p, s_eff);
  ResultTable t = make_table(
      sc, "equilibrium", "equilibrium",
      {"s_eff", "d_star", "a_star", "q_star", "r_at_eq", "interior_defender",
       "interior_attacker", "uniqueness_certified", "used_fallback",
       "iterations"});
  t.add_row({s_eff, eq.d_star, eq.a_star, eq.q_star, eq.r_at_eq,
             eq.interior_defender, eq.interior_attacker,
             eq.uniqueness_certified, eq.used_fallback,
             static_cast<double>(eq.iterations)});
  out.push_back(std::move(t));

  const UniquenessReport uq = uniqueness_check(p);
  ResultTable u = make_table(sc, "equilibrium", "uniqueness",
                             {"certified", "h_concave", "erosion_condition",
                              "numeric_scan_ok", "worst_second_difference"});
  u.add_row({uq.certified, uq.h_concave, uq.erosion_condition,
             uq.numeric_scan_ok, uq.worst_second_difference});
  out.push_back(std::move(u));

  const ProvocationResult prov = provocation_threshold(p, s_eff);
  ResultTable pr = make_table(sc, "equilibrium", "provocation",
                              {"status", "d_hat", "nonmonotone"});
  pr.add_row({adoption_text(prov.status), prov.d_hat, prov.nonmonotone});
  out.push_back(std::move(pr));
  return out;
}

// -------------------------------------------------------------- dynamics ----

std::string stability_text(StabilityClass c) {
  switch (c) {
    case StabilityClass::StableNode: return "stable_node";
    case StabilityClass::StableSpiral: return "stable_spiral";
    case StabilityClass::Degenerate: return "degenerate";
  }
  return "?";
}

std::vector<ResultTable> run_dynamics(const Scenario& sc) {
  const ModelParams& p = need_model(sc);
  if (!sc.dynamics) {
    throw ValidationError("scenario section 'dynamics' is required by 'dynamics'");
  }
  const DynamicsConfig& dyn = *sc.dynamics;
  const double s_eff = sc.effective_s();
  const double d_cap = p.V / p.c_d;
  const double a_cap = p.B / p.c_a;

  std::vector<ResultTable> out;
  Lcg64 rng(sc.seed);
  std::vector<State> starts;
  for (int i = 0; i < dyn.starts; ++i) {
    starts.push_back({rng.uniform(0.0, d_cap), rng.uniform(0.0, a_cap)});
  }

  ResultTable traj = make_table(sc, "dynamics", "trajectories",
                                {"start", "step", "d", "a"});
  ResultTable summary = make_table(
      sc, "dynamics", "summary",
      {"start", "d0", "a0", "converged", "steps", "d_limit", "a_limit",
       "residual", "divergence_detected", "discontinuities"});
  traj.add_meta("eta", format_double(dyn.eta));
  traj.add_meta("tol", format_double(dyn.tol));

  for (int i = 0; i < dyn.starts; ++i) {
    const Trajectory tr = simulate_discrete(p, s_eff, starts[i], dyn.eta,
                                            dyn.max_steps, dyn.tol);
    const std::size_t stride =
        std::max<std::size_t>(1, tr.times.size() / 2000);
    for (std::size_t j = 0; j < tr.times.size(); ++j) {
      if (j % stride != 0 && j + 1 != tr.times.size()) continue;
      traj.add_row({static_cast<double>(i), tr.times[j], tr.d_path[j],
                    tr.a_path[j]});
    }
    summary.add_row(
        {static_cast<double>(i), starts[i].first, starts[i].second,
         tr.converged, static_cast<double>(tr.times.size() - 1),
         tr.d_path.back(), tr.a_path.back(), tr.sup_norm_residual,
         tr.divergence_detected,
         static_cast<double>(tr.discontinuity_steps.size())});
  }
  out.push_back(std::move(traj));
  out.push_back(std::move(summary));

  ResultTable cont = make_table(sc, "dynamics", "continuous",
                                {"start", "t", "d", "a"});
  cont.add_meta("t_end", format_double(dyn.t_end));
  cont.add_meta("dt", format_double(dyn.dt));
  const int cont_starts = std::min(dyn.starts, 3);
  for (int i = 0; i < cont_starts; ++i) {
    const Trajectory tr =
        simulate_continuous(p, s_eff, starts[i], dyn.t_end, dyn.dt);
    const std::size_t stride =
        std::max<std::size_t>(1, tr.times.size() / 2000);
    for (std::size_t j = 0; j < tr.times.size(); ++j) {
      if (j % stride != 0 && j + 1 != tr.times.size()) continue;
      cont.add_row({static_cast<double>(i), tr.times[j], tr.d_path[j],
                    tr.a_path[j]});
    }
  }
  out.push_back(std::move(cont));

  ResultTable stab = make_table(
      sc, "dynamics", "stability",
      {"interior", "br_slope_d", "br_slope_a", "rho0", "eta_bound", "det_j",
       "classification"});
  const EquilibriumResult eq = solve_equilibrium(p, s_eff);
  try {
    const StabilityReport rep = stability_report(p, s_eff, eq);
    stab.add_row({true, rep.br_slope_d, rep.br_slope_a, rep.rho0,
                  rep.eta_bound, rep.det_j,
                  stability_text(rep.classification)});
  } catch (const CornerEquilibriumError&) {
    stab.add_row({false, 0.0, 0.0, 0.0, 0.0, 0.0, std::string("corner")});
  }
  out.push_back(std::move(stab));
  return out;
}

// --------------------------------------------------------------- scaling ----

std::vector<ResultTable> run_scaling(const Scenario& sc) {
  const ModelParams& p = need_model(sc);
  const SurfaceConfig& cfg = need_surfaces(sc, "scaling");
  std::vector<ResultTable> out;
  ResultTable t = make_table(sc, "scaling", "scaling",
                             {"N", "s_eff", "q", "lambda", "P", "r0"});
  t.add_meta("a", format_double(sc.figures.a));
  t.add_meta("d", format_double(sc.figures.d));
  const std::vector<double> grid = log_grid(1.0, 1e6, sc.figures.n_points);
  for (const ScalingRow& row :
       scaling_experiment(p, cfg, grid, sc.figures.a, sc.figures.d)) {
    t.add_row({row.N, row.s_eff, row.q, row.lambda, row.P, row.r0});
  }
  out.push_back(std::move(t));
  return out;
}

// ------------------------------------------------------------ deterrence ----

std::string deterrence_text(DeterrenceStatus s) {
  switch (s) {
    case DeterrenceStatus::Threshold: return "threshold";
    case DeterrenceStatus::ComplexNeverProfitable:
      return "complex_never_profitable";
    case DeterrenceStatus::ComplexAlwaysProfitable:
      return "complex_always_profitable";
  }
  return "?";
}

std::vector<ResultTable> run_deterrence(const Scenario& sc) {
  need_model(sc);
  if (!sc.deterrence) {
    throw ValidationError(
        "scenario section 'deterrence' is required by 'deterrence'");
  }
  const DeterrenceScenario dsc = sc.deterrence_scenario();
  std::vector<ResultTable> out;

  ResultTable grid = make_table(sc, "deterrence", "delta_pi",
                                {"gamma_d", "delta_pi"});
  // The comparison nets out the fixed adoption cost; it cancels when both
  // attack styles adopt.
  grid.add_meta("fixed_cost_excluded", "true");
  for (double g : linear_grid(0.0, 1.0, 65)) {
    grid.add_row({g, delta_pi(dsc, g)});
  }
  out.push_back(std::move(grid));

  const DeterrenceThreshold th = deterrence_threshold(dsc);
  ResultTable tt = make_table(
      sc, "deterrence", "threshold",
      {"status", "gamma_d_star", "monotonicity_violated", "delta_pi_at_zero",
       "delta_pi_at_gamma_a"});
  tt.add_row({deterrence_text(th.status), th.gamma_d_star,
              th.monotonicity_violated, th.delta_pi_at_zero,
              th.delta_pi_at_gamma_a});
  out.push_back(std::move(tt));

  ResultTable sens = make_table(sc, "deterrence", "sensitivity",
                                {"parameter", "derivative", "ok", "note"});
  if (th.status == DeterrenceStatus::Threshold) {
    const std::pair<std::string, ThresholdParameter> params[] = {
        {"s", ThresholdParameter::SignalBudget},
        {"h_c_alpha", ThresholdParameter::ComplexAlpha},
        {"B", ThresholdParameter::AttackerBenefit},
        {"c_a", ThresholdParameter::AttackerUnitCost},
        {"d_fixed", ThresholdParameter::DefenderInvestment},
    };
    const auto value_of = [&](ThresholdParameter p) {
      switch (p) {
        case ThresholdParameter::SignalBudget: return dsc.base.s;
        case ThresholdParameter::ComplexAlpha: return dsc.h_complex.alpha;
        case ThresholdParameter::AttackerBenefit: return dsc.base.B;
        case ThresholdParameter::AttackerUnitCost: return dsc.base.c_a;
        case ThresholdParameter::DefenderInvestment: return dsc.d_fixed;
      }
      return 0.0;
    };
    for (const auto& [name, param] : params) {
      const double step = 1e-4 * std::max(std::fabs(value_of(param)), 1.0);
      try {
        sens.add_row({name, threshold_sensitivity(dsc, param, step), true,
                      std::string()});
      } catch (const ComputationError& e) {
        sens.add_row({name, 0.0, false, std::string(e.what())});
      }
    }
  }
  out.push_back(std::move(sens));
  return out;
}

// ------------------------------------------------------------- targeting ----

std::vector<ResultTable> run_targeting(const Scenario& sc) {
  const ModelParams& p = need_model(sc);
  if (!sc.targeting) {
    throw ValidationError(
        "scenario section 'targeting' is required by 'targeting'");
  }
  const TargetingConfig& cfg = *sc.targeting;
  std::vector<ResultTable> out;

  const TargetSelection sel =
      select_target(p, cfg.profiles, cfg.mode, cfg.fixed_a, cfg.rho);
  ResultTable t = make_table(
      sc, "targeting", "targets",
      {"index", "a", "q", "expected_value", "net_payoff", "selected"});
  t.add_meta("mode", cfg.mode == TargetingMode::FixedA ? "fixed_a"
                                                       : "best_response");
  t.add_meta("rho", format_double(cfg.rho));
  for (const TargetRow& row : sel.table) {
    t.add_row({static_cast<double>(row.index), row.a, row.q,
               row.expected_value, row.net_payoff, row.index == sel.selected});
  }
  out.push_back(std::move(t));

  const RedirectionReport red =
      redirection_effect(p, cfg.profiles, sel.selected, cfg.d_step, cfg.mode,
                         cfg.fixed_a, cfg.rho);
  ResultTable rt = make_table(
      sc, "targeting", "redirection",
      {"index", "ev_before", "ev_after", "was_target", "is_target"});
  rt.add_meta("hardened_index", std::to_string(sel.selected));
  rt.add_meta("d_step", format_double(cfg.d_step));
  rt.add_meta("target_before", std::to_string(red.before));
  rt.add_meta("target_after", std::to_string(red.after));
  for (const RedirectionRow& row : red.rows) {
    rt.add_row({static_cast<double>(row.index), row.ev_before, row.ev_after,
                row.was_target, row.is_target});
  }
  out.push_back(std::move(rt));
  return out;
}

// --------------------------------------------------------------- figures ----

struct CaptionCheck {
  std::string name;
  bool pass = false;
};

bool column_bitwise_flat(const ResultTable& t, std::size_t col) {
  for (std::size_t i = 1; i < t.rows.size(); ++i) {
    if (std::get<double>(t.rows[i][col]) !=
        std::get<double>(t.rows[0][col])) {
      return false;
    }
  }
  return true;
}

double linear_fit_r2(const std::vector<double>& x,
                     const std::vector<double>& y) {
  const std::size_t n = x.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  const double denom = n * sxx - sx * sx;
  if (denom == 0.0) return 1.0;
  const double slope = (n * sxy - sx * sy) / denom;
  const double intercept = (sy - slope * sx) / n;
  double ss_res = 0, ss_tot = 0;
  const double mean = sy / n;
  for (std::size_t i = 0; i < n; ++i) {
    const double e = y[i] - (slope * x[i] + intercept);
    ss_res += e * e;
    ss_tot += (y[i] - mean) * (y[i] - mean);
  }
  if (ss_tot == 0.0) return 1.0;
  return 1.0 - ss_res / ss_tot;
}

std::vector<ResultTable> run_figures(const Scenario& sc) {
  const ModelParams& p = need_model(sc);
  const SurfaceConfig& cfg = need_surfaces(sc, "figures");
  const FigureConfig& fig = sc.figures;
  const DynamicsConfig dyn = sc.dynamics.value_or(DynamicsConfig{});
  std::vector<ResultTable> out;
  std::vector<CaptionCheck> checks;

  // --- fig1: best-response curves and trajectories at three erosion betas.
  const double betas[] = {fig.beta_low, fig.beta_mid, fig.beta_high};
  const char* beta_tag[] = {"beta_low", "beta_mid", "beta_high"};
  const double s_eff = p.s;  // single-surface panel

  ResultTable def_br = make_table(sc, "figures", "fig1_defender_br",
                                  {"beta", "a", "d_br", "clamped"});
  ResultTable atk_br = make_table(sc, "figures", "fig1_attacker_br",
                                  {"beta", "d", "a_br", "clamped"});
  ResultTable traj = make_table(sc, "figures", "fig1_trajectories",
                                {"series", "step", "d", "a"});
  for (ResultTable* t : {&def_br, &atk_br, &traj}) {
    t->add_meta("beta_low", format_double(fig.beta_low));
    t->add_meta("beta_mid", format_double(fig.beta_mid));
    t->add_meta("beta_high", format_double(fig.beta_high));
    t->add_meta("a_max", format_double(fig.a_max));
    t->add_meta("d_max", format_double(fig.d_max));
  }

  bool defender_monotone = true;
  bool attacker_nonmonotone_mid = false;
  Lcg64 rng(sc.seed);
  for (int bi = 0; bi < 3; ++bi) {
    const ModelParams pb = p.with_delta_beta(betas[bi]);
    const std::vector<double> a_grid = linear_grid(0.0, fig.a_max, 97);
    const std::vector<double> d_grid = linear_grid(0.0, fig.d_max, 97);
    const auto [defender, attacker] =
        best_response_curves(pb, s_eff, d_grid, a_grid);

    for (std::size_t i = 0; i < defender.grid.size(); ++i) {
      def_br.add_row({betas[bi], defender.grid[i], defender.responses[i],
                      static_cast<bool>(defender.clamped[i])});
      if (i > 0 && !defender.clamped[i] && !defender.clamped[i - 1] &&
          defender.responses[i] < defender.responses[i - 1] - 1e-12) {
        defender_monotone = false;
      }
    }
    for (std::size_t i = 0; i < attacker.grid.size(); ++i) {
      atk_br.add_row({betas[bi], attacker.grid[i], attacker.responses[i],
                      static_cast<bool>(attacker.clamped[i])});
    }
    if (bi == 1) {
      const auto& r = attacker.responses;
      const double peak = *std::max_element(r.begin(), r.end());
      attacker_nonmonotone_mid =
          peak > r.front() + 1e-9 && peak > r.back() + 1e-9;
    }

    for (int s = 0; s < fig.traj_starts; ++s) {
      const State start = {rng.uniform(0.0, fig.d_max),
                           rng.uniform(0.0, fig.a_max)};
      const Trajectory tr = simulate_discrete(pb, s_eff, start, dyn.eta,
                                              dyn.max_steps, dyn.tol);
      const std::size_t stride =
          std::max<std::size_t>(1, tr.times.size() / 400);
      std::ostringstream label;
      label << "beta=" << betas[bi] << " start=" << s;
      for (std::size_t j = 0; j < tr.times.size(); ++j) {
        if (j % stride != 0 && j + 1 != tr.times.size()) continue;
        traj.add_row({label.str(), tr.times[j], tr.d_path[j], tr.a_path[j]});
      }
    }
  }
  out.push_back(std::move(def_br));
  out.push_back(std::move(atk_br));
  out.push_back(std::move(traj));

  // --- fig2a: R0 against N for four correlation levels at rho = 1.
  const std::vector<double> n_grid = log_grid(1.0, 1e6, fig.n_points);
  ResultTable fig2a = make_table(
      sc, "figures", "fig2a", {"N", "r0_g0", "r0_g02", "r0_g05", "r0_g1"});
  fig2a.add_meta("rho", "1");
  fig2a.add_meta("gammas", "0,0.2,0.5,1");
  for (double N : n_grid) {
    fig2a.add_row({N, r0_multi_at(p, N, 1.0, 0.0, cfg.s),
                   r0_multi_at(p, N, 1.0, 0.2, cfg.s),
                   r0_multi_at(p, N, 1.0, 0.5, cfg.s),
                   r0_multi_at(p, N, 1.0, 1.0, cfg.s)});
  }
  out.push_back(fig2a);

  // --- fig2b: log-breach rate against N with and without correlation.
  ResultTable fig2b = make_table(sc, "figures", "fig2b",
                                 {"N", "lambda_g0", "lambda_g1"});
  fig2b.add_meta("rho", "1");
  fig2b.add_meta("a", format_double(fig.a));
  fig2b.add_meta("d", format_double(fig.d));
  for (double N : n_grid) {
    const auto lambda_at = [&](double gamma) {
      const double se = effective_signal_at(cfg.s, N, 1.0, gamma);
      const double q = breach_probability(p, fig.a, fig.d, se);
      return -N * std::log1p(-q);
    };
    fig2b.add_row({N, lambda_at(0.0), lambda_at(1.0)});
  }
  out.push_back(std::move(fig2b));

  // --- fig3: R0 against gamma for four surface counts.
  ResultTable fig3 = make_table(
      sc, "figures", "fig3", {"gamma", "r0_N1", "r0_N3", "r0_N10", "r0_N30"});
  fig3.add_meta("rho", format_double(cfg.rho));
  fig3.add_meta("Ns", "1,3,10,30");
  for (double g : linear_grid(0.0, 1.0, 65)) {
    fig3.add_row({g, r0_multi_at(p, 1.0, cfg.rho, g, cfg.s),
                  r0_multi_at(p, 3.0, cfg.rho, g, cfg.s),
                  r0_multi_at(p, 10.0, cfg.rho, g, cfg.s),
                  r0_multi_at(p, 30.0, cfg.rho, g, cfg.s)});
  }
  out.push_back(fig3);

  // --- caption checks.
  checks.push_back({"fig2a_gamma1_flat", column_bitwise_flat(fig2a, 4)});
  {
    std::vector<double> xs, ys;
    for (const auto& row : fig2a.rows) {
      xs.push_back(std::get<double>(row[0]));
      ys.push_back(std::get<double>(row[1]));
    }
    checks.push_back(
        {"fig2a_gamma0_linear_in_N", linear_fit_r2(xs, ys) > 1.0 - 1e-12});
  }
  checks.push_back({"fig3_N1_flat", column_bitwise_flat(fig3, 1)});
  checks.push_back(
      {"fig1_defender_br_nondecreasing_interior", defender_monotone});
  checks.push_back(
      {"fig1_attacker_br_nonmonotone_mid_beta", attacker_nonmonotone_mid});

  ResultTable ct = make_table(sc, "figures", "caption_checks",
                              {"check", "pass"});
  for (const CaptionCheck& c : checks) {
    ct.add_row({c.name, c.pass});
  }
  out.push_back(std::move(ct));
  return out;
}

// ---------------------------------------------------------------- driver ----

std::map<std::string, ChartKind> chart_kinds() {
  return {
      {"fig2a", ChartKind::LineLogX},
      {"fig2b", ChartKind::LineLogLog},
      {"fig3", ChartKind::Line},
      {"fig1_trajectories", ChartKind::Phase},
      {"trajectories", ChartKind::Phase},
      {"continuous", ChartKind::Phase},
      {"delta_pi", ChartKind::Line},
      {"scaling", ChartKind::LineLogX},
      {"r0_sweep_gamma", ChartKind::Line},
  };
}

}  // namespace

std::vector<ResultTable> run_subcommand(const std::string& name,
                                        const Scenario& scenario) {
  if (name == "ratio") return run_ratio(scenario);
  if (name == "equilibrium") return run_equilibrium(scenario);
  if (name == "dynamics") return run_dynamics(scenario);
  if (name == "scaling") return run_scaling(scenario);
  if (name == "deterrence") return run_deterrence(scenario);
  if (name == "targeting") return run_targeting(scenario);
  if (name == "figures") return run_figures(scenario);
  std::string valid;
  for (const std::string& s : kSubcommands) {
    if (!valid.empty()) valid += "|";
    valid += s;
  }
  throw ValidationError("unknown subcommand '" + name + "' (expected " +
                        valid + ")");
}

std::vector<std::string> run_and_emit(const std::string& name,
                                      const Scenario& scenario,
                                      const std::string& out_dir,
                                      OutputFormat format) {
  const std::vector<ResultTable> tables = run_subcommand(name, scenario);
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw IoError("cannot create output directory: " + out_dir);

  const std::map<std::string, ChartKind> kinds = chart_kinds();
  std::vector<std::string> written;
  for (const ResultTable& t : tables) {
    const std::string stem =
        (std::filesystem::path(out_dir) / (name + "_" + t.name)).string();
    if (format == OutputFormat::Csv || format == OutputFormat::Both) {
      emit_csv(t, stem + ".csv");
      written.push_back(stem + ".csv");
    }
    if (format == OutputFormat::Svg || format == OutputFormat::Both) {
      auto it = kinds.find(t.name);
      if (t.name == "fig1_defender_br" || t.name == "fig1_attacker_br") {
        // Chart form drops the clamped flags and groups by beta.
        ResultTable chart = t;
        chart.columns.pop_back();
        for (auto& row : chart.rows) row.pop_back();
        emit_svg(chart, ChartKind::Phase, stem + ".svg");
        written.push_back(stem + ".svg");
      } else if (it != kinds.end()) {
        emit_svg(t, it->second, stem + ".svg");
        written.push_back(stem + ".svg");
      }
    }
  }

  // Post-emit validation: figures must satisfy their caption assertions.
  if (name == "figures") {
    for (const ResultTable& t : tables) {
      if (t.name != "caption_checks") continue;
      for (const auto& row : t.rows) {
        if (!std::get<bool>(row[1])) {
          throw ComputationError("caption check failed: " +
                                 std::get<std::string>(row[0]));
        }
      }
    }
  }
  return written;
}

}  // namespace armsrace
