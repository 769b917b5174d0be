#pragma once

#include <cstdint>
#include <vector>

#include "grmin/types.hpp"

namespace grmin {

/// Chart of Gr>0(2,n): column i is r_i * (cos theta_i, sin theta_i) with
/// strictly increasing angles inside (0, pi) and positive radii. Every
/// induced minor r_i r_j sin(theta_j - theta_i) is positive by
/// construction, and every positive point has such a representative up to
/// the plane's linear action, under which the coordinate ratio is
/// invariant.
struct AngleRadiusParam {
  std::vector<double> theta;
  std::vector<double> radius;

  int n() const { return static_cast<int>(theta.size()); }

  /// Throws unless the invariants above hold.
  void validate() const;
};

struct OptimizerConfig {
  int n = 5;
  int restarts = 20;
  int max_iters = 30000;  // per restart, split across the stages
  std::uint64_t seed = 0;
  double simplex_scale = 0.5;
  double spread_tol = 1e-12;  // stop when the simplex objective spread drops below
};

struct RestartSummary {
  int index = 0;
  double E = 0.0;
  int iterations = 0;
  bool converged = false;  // spread tolerance reached (vs. iteration cap)
};

struct OptimizationResult {
  double best_E = 0.0;
  AngleRadiusParam best_param;
  double gap_to_theory = 0.0;  // best_E - s_d/s_1
  std::vector<RestartSummary> restarts;
  long iterations = 0;  // total across restarts
};

/// Matrix with columns r_i * (cos theta_i, sin theta_i).
PointMatrix to_matrix(const AngleRadiusParam& p);

/// The parametrization of the cyclic matrix in this chart: equally spaced
/// angles shifted by pi/(2n) off the boundary, unit radii. Same minors as
/// cyclic_matrix(n) (the shift is a plane rotation).
AngleRadiusParam cyclic_param(int n);

/// Deterministic random positive point: sorted angles in (delta, pi-delta)
/// with pairwise gaps >= delta (delta = 1e-3), log-radii uniform in [-1,1].
AngleRadiusParam sample_positive(int n, std::uint64_t seed);

/// Multi-restart Nelder-Mead over an unconstrained reparametrization of
/// the chart (angles through normalized positive increments, radii through
/// exponentials), minimizing log of the coordinate ratio. Each restart
/// runs a short continuation: smoothed (log-sum-exp) stages first, exact
/// stages last, which keeps the simplex from stalling on the minimax
/// kinks. Deterministic for a fixed config; restart seeds come from a
/// fixed splitter. If `initial` is given, restart 0 starts there instead
/// of at a random point.
OptimizationResult minimize(const OptimizerConfig& cfg,
                            const AngleRadiusParam* initial = nullptr);

}  // namespace grmin
