#pragma once

#include "grmin/types.hpp"

namespace grmin {

/// Scales column i by q^((-1)^i): odd-numbered columns by 1/q, even ones
/// by q. Minors on odd-gap orbits are unchanged; on even-gap orbits they
/// pick up a factor q^(+-2). Requires q > 0.
PointMatrix q_transform(const PointMatrix& X, double q);

/// Open interval of q around 1 inside which every inner-orbit minor of the
/// transformed cyclic matrix stays strictly between s_1 and s_d, so the
/// coordinate ratio keeps its optimal value s_d/s_1.
struct QInterval {
  double lo = 0.0;
  double hi = 0.0;

  bool contains(double q) const { return lo < q && q < hi; }
};

/// Computed in closed form from the per-entry monotonicity of q -> q^(+-2).
/// Requires n mod 4 == 2 (so that both outer orbits have odd gap).
QInterval admissible_q_interval(int n);

/// What verify_nonuniqueness measured for one (n, q).
struct QFamilyReport {
  int n = 0;
  double q = 1.0;
  double E_Cq = 0.0;
  double E_C = 0.0;
  bool equal_loss = false;
  bool proportional_to_C = false;
  double odd_orbit_max_change = 0.0;  // relative, should be ~0 for any q
  bool even_orbit_scale_check = false;
  QInterval q_interval;
};

/// Transforms the cyclic matrix and checks the orbit-wise scale structure,
/// loss equality and non-proportionality. Requires n mod 4 == 2 and q > 0.
/// Inside the admissible interval equal_loss is true; for q != 1 the
/// transformed point is a distinct minimizer.
QFamilyReport verify_nonuniqueness(int n, double q,
                                   const Tolerance& tol = {1e-12, 1e-12});

}  // namespace grmin
