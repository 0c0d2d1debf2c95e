#pragma once

#include "armsrace/families.hpp"

namespace armsrace {

// Primitives of the attacker-defender contest. Construction validates ranges;
// V = 0 and B = 0 are admitted as degenerate "no stake" cases.
struct ModelParams {
  double q0;             // status-quo breach probability, in (0, 1)
  AmplificationSpec h;   // attacker capability amplification
  ErosionSpec delta;     // detection erosion
  double s;              // signal availability, >= 0
  double V;              // defender loss per breach, >= 0
  double B;              // attacker benefit per breach, >= 0
  double c_d;            // defender marginal cost, > 0
  double c_a;            // attacker marginal cost, > 0
  double F;              // attacker fixed adoption cost, >= 0

  ModelParams(double q0, AmplificationSpec h, ErosionSpec delta, double s,
              double V, double B, double c_d, double c_a, double F);

  ModelParams with_h(const AmplificationSpec& repl) const;
  ModelParams with_delta_beta(double beta) const;
};

// Defensive surface structure: N surfaces, dilution exponent rho,
// cross-surface signal correlation gamma, total signal budget s.
struct SurfaceConfig {
  int N;         // >= 1
  double rho;    // in [0, 1]
  double gamma;  // in [0, 1]
  double s;      // >= 0

  SurfaceConfig(int N, double rho, double gamma, double s);
};

}  // namespace armsrace
