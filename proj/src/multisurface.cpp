#include "armsrace/multisurface.hpp"

#include <cmath>

#include "armsrace/ratio.hpp"

namespace armsrace {

double effective_signal_at(double s, double N, double rho, double gamma) {
  if (!(N >= 1.0)) throw std::domain_error("N must be >= 1");
  if (!(s >= 0.0)) throw std::domain_error("s must be >= 0");
  // At gamma = 1 the correlation term equals N, so expose the identity
  // s * N^(1-rho) exactly rather than through a rounding ratio.
  if (gamma == 1.0) {
    const double e = 1.0 - rho;
    return s * (e == 0.0 ? 1.0 : (e == 1.0 ? N : std::pow(N, e)));
  }
  const double n_pow = rho == 1.0 ? N : (rho == 0.0 ? 1.0 : std::pow(N, rho));
  return s * ((1.0 + gamma * (N - 1.0)) / n_pow);
}

double effective_signal(const SurfaceConfig& cfg) {
  return effective_signal_at(cfg.s, static_cast<double>(cfg.N), cfg.rho,
                             cfg.gamma);
}

MultiSurfaceState multi_surface_state(const ModelParams& p,
                                      const SurfaceConfig& cfg, double a,
                                      double d) {
  MultiSurfaceState st{cfg, 0.0, 0.0, 0.0};
  const double s_eff = effective_signal(cfg);
  st.q_per_surface = breach_probability(p, a, d, s_eff);
  const double N = static_cast<double>(cfg.N);
  // -N ln(1-q) and 1 - e^(-lambda) via log1p/expm1 so q near 0 or 1 stays
  // accurate.
  st.lambda = -N * std::log1p(-st.q_per_surface);
  st.p_overall = -std::expm1(-st.lambda);
  return st;
}

double asymptotic_breach(const ModelParams& p, double a) {
  const double num = p.q0 * eval_h(p.h, a);
  return num / (num + (1.0 - p.q0));
}

std::vector<ScalingRow> scaling_experiment(const ModelParams& p,
                                           const SurfaceConfig& cfg_template,
                                           const std::vector<double>& N_grid,
                                           double a, double d) {
  std::vector<ScalingRow> rows;
  rows.reserve(N_grid.size());
  for (double N : N_grid) {
    ScalingRow row;
    row.N = N;
    row.s_eff =
        effective_signal_at(cfg_template.s, N, cfg_template.rho,
                            cfg_template.gamma);
    row.q = breach_probability(p, a, d, row.s_eff);
    row.lambda = -N * std::log1p(-row.q);
    row.P = -std::expm1(-row.lambda);
    row.r0 = r0_multi_at(p, N, cfg_template.rho, cfg_template.gamma,
                         cfg_template.s);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace armsrace
