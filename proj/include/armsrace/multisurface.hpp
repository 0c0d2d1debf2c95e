#pragma once

#include <vector>

#include "armsrace/contest.hpp"

namespace armsrace {

// Per-surface effective signal s_i^e = (s / N^rho) (1 + gamma (N - 1)).
// At gamma = 1 this is exactly s * N^(1 - rho).
double effective_signal(const SurfaceConfig& cfg);
double effective_signal_at(double s, double N, double rho, double gamma);

struct MultiSurfaceState {
  SurfaceConfig cfg;
  double q_per_surface = 0.0;  // breach probability of one surface
  double lambda = 0.0;         // log-breach rate -N ln(1 - q)
  double p_overall = 0.0;      // 1 - exp(-lambda) = 1 - (1-q)^N
};

// Surface-level contest state at attacker investment a and per-surface
// defender posture d.
MultiSurfaceState multi_surface_state(const ModelParams& p,
                                      const SurfaceConfig& cfg, double a,
                                      double d);

// Per-surface breach probability as defense effectiveness vanishes:
// q_inf = q0 h(a) / (q0 h(a) + 1 - q0).
double asymptotic_breach(const ModelParams& p, double a);

struct ScalingRow {
  double N = 0.0;
  double s_eff = 0.0;
  double q = 0.0;
  double lambda = 0.0;
  double P = 0.0;
  double r0 = 0.0;
};

// Surface-count scaling table at fixed (a, d); N_grid entries may be
// non-integer (log-spaced sweeps).
std::vector<ScalingRow> scaling_experiment(const ModelParams& p,
                                           const SurfaceConfig& cfg_template,
                                           const std::vector<double>& N_grid,
                                           double a, double d);

}  // namespace armsrace
