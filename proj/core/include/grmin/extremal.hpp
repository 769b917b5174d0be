#pragma once

#include <vector>

#include "grmin/geomeans.hpp"
#include "grmin/plucker.hpp"
#include "grmin/types.hpp"

namespace grmin {

/// The half-angle sines s_k = sin(k*pi/n), k in [1, n-1].
/// s_k = s_{n-k}, and the sequence is strictly increasing on [1, d] with
/// d = floor(n/2).
class SineTable {
 public:
  explicit SineTable(int n);

  int n() const { return n_; }
  int d() const { return n_ / 2; }
  double s(int k) const;

  /// s_d / s_1 — the minimal coordinate ratio over Gr>0(2,n).
  double optimal_ratio() const { return s(d()) / s(1); }

 private:
  int n_;
  std::vector<double> s_;
};

/// sin(floor(n/2)*pi/n) / sin(pi/n).
double optimal_loss(int n);

/// The cyclic matrix: columns (cos((i-1)pi/n), sin((i-1)pi/n)), i in [n].
/// Half of the regular 2n-gon; its minor over any pair of orbit k is s_k.
PointMatrix cyclic_matrix(int n);

/// max Delta / min Delta over all ordered pairs. Requires P positive.
double plucker_ratio(const PluckerVector& P, const Tolerance& tol = {});

/// D_d / D_1, the orbit geometric-mean ratio; never exceeds plucker_ratio.
double geomean_ratio(const GeoMeans& G);

/// max |Delta| / min |Delta| over all pairs of any matrix. Throws if a
/// minor vanishes.
double abs_minor_ratio(const PointMatrix& X);

/// Flips columns into the upper half-plane and sorts them by angle, so
/// that all minors of the result are positive while the multiset of
/// absolute minor values is preserved. Throws on a collinear column pair.
PointMatrix positive_reduction(const PointMatrix& X);

/// The convex weights p = s_j*s_{l-k} / (s_k*s_{l-j}) and
/// q = s_l*s_{k-j} / (s_k*s_{l-j}), which always sum to 1.
struct WeightPair {
  double p = 0.0;
  double q = 0.0;
};
WeightPair sine_weights(int j, int k, int l, int n);

/// One inequality of a (j,k,l)-indexed family together with its slack.
struct SlackEntry {
  int j = 0;
  int k = 0;
  int l = 0;
  double slack = 0.0;
};

/// Slacks D_k*D_{l-j} - D_j*D_{l-k} - D_l*D_{k-j} for every strictly
/// increasing (j,k,l) in [n-1]. Nonnegative for means of a positive point.
std::vector<SlackEntry> geomean_slacks(const GeoMeans& G);

/// a_k = log(D_k / s_k). Requires the vector behind G to be normalized
/// (D_1 = s_1 within tol); then a_1 = a_{n-1} = 0 up to roundoff.
std::vector<double> normalized_logs(const GeoMeans& G,
                                    const Tolerance& tol = {});

/// Slacks a_k + a_{l-j} - p*(a_j + a_{l-k}) - q*(a_l + a_{k-j}) with
/// (p,q) = sine_weights(j,k,l,n). Nonnegative for a from a positive point.
std::vector<SlackEntry> log_linear_slacks(const std::vector<double>& a, int n);

/// One application of the weighted neighbour-average map:
/// y_k = q_k*(a_{k+1} + a_{k-1})/2 with q_k = s_{k+1}*s_{k-1}/s_k^2, and
/// y_1 = y_{n-1} = 0. A max-norm contraction with factor max_k q_k < 1.
/// Requires a_1 = a_{n-1} = 0 within tol.
std::vector<double> contraction_map(const std::vector<double>& a, int n,
                                    const Tolerance& tol = {});

/// max_k q_k over the interior indices; 0 when there are none (n = 3).
double contraction_factor(int n);

/// Everything certify_point checks about one positive point, with the
/// tolerances that were used.
struct CertificateReport {
  int n = 0;
  double relation_max_residual = 0.0;  // relative, over all quads and shifts
  std::vector<SlackEntry> geomean_violations;
  std::vector<SlackEntry> linear_violations;
  double a_min = 0.0;
  double E_value = 0.0;
  double L_value = 0.0;
  double lower_bound_gap = 0.0;  // E_value - s_d/s_1
  bool passed = false;
  Tolerance tol;
};

/// Normalizes minors(X), evaluates every identity and inequality suite,
/// and reports the losses against the closed-form optimum. Throws if
/// minors(X) is not positive.
CertificateReport certify_point(const PointMatrix& X, const Tolerance& tol = {});

}  // namespace grmin
