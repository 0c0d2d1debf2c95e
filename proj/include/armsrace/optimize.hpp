#pragma once

#include <functional>
#include <utility>

namespace armsrace {

struct ScalarMaximum {
  double arg = 0.0;
  double value = 0.0;
  int iterations = 0;
};

// Maximize f on [lo, hi] by golden-section search refined with parabolic
// interpolation steps (Brent), to absolute argument tolerance tol.
ScalarMaximum brent_maximize(const std::function<double(double)>& f, double lo,
                             double hi, double tol = 1e-10,
                             int max_iter = 400);

// Robust bounded maximization: a fixed coarse scan locates the best bracket,
// Brent refines inside it. Deterministic for a given f and grid size.
ScalarMaximum scan_maximize(const std::function<double(double)>& f, double lo,
                            double hi, int scan_points = 129,
                            double tol = 1e-10, int max_iter = 400);

// Bisect f on [lo, hi] assuming f(lo) and f(hi) have opposite signs.
// Stops when |f(mid)| < f_tol or the bracket width falls below x_tol.
double bisect_root(const std::function<double(double)>& f, double lo,
                   double hi, double f_tol, double x_tol, int max_iter = 200);

}  // namespace armsrace
