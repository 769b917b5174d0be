#include "grmin/qfamily.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "grmin/extremal.hpp"
#include "grmin/orbits.hpp"
#include "grmin/plucker.hpp"

namespace grmin {

namespace {

void require_n_mod4_eq_2(int n, const char* who) {
  if (n < 3 || n % 4 != 2) {
    throw std::invalid_argument(std::string(who) +
                                ": requires n mod 4 == 2, got n=" +
                                std::to_string(n));
  }
}

}  // namespace

PointMatrix q_transform(const PointMatrix& X, double q) {
  if (!(q > 0.0)) {
    throw std::invalid_argument("q_transform: requires q > 0");
  }
  std::vector<PointMatrix::Column> cols(X.columns());
  for (std::size_t e = 0; e < cols.size(); ++e) {
    const int i = static_cast<int>(e) + 1;
    const double factor = (i % 2 == 0) ? q : 1.0 / q;
    cols[e][0] *= factor;
    cols[e][1] *= factor;
  }
  return PointMatrix(std::move(cols));
}

QInterval admissible_q_interval(int n) {
  require_n_mod4_eq_2(n, "admissible_q_interval");
  const SineTable sines(n);
  const int d = sines.d();
  // Inner even-gap entries move by q^2 or q^-2; each must stay inside
  // (s_1, s_d). Odd-gap entries never move.
  double hi_sq = HUGE_VAL;
  for (int k = 2; k <= d - 1; k += 2) {
    hi_sq = std::min(hi_sq, sines.s(d) / sines.s(k));
    hi_sq = std::min(hi_sq, sines.s(k) / sines.s(1));
  }
  const double hi = std::isfinite(hi_sq) ? std::sqrt(hi_sq) : HUGE_VAL;
  return {1.0 / hi, hi};
}

QFamilyReport verify_nonuniqueness(int n, double q, const Tolerance& tol) {
  require_n_mod4_eq_2(n, "verify_nonuniqueness");
  if (!(q > 0.0)) {
    throw std::invalid_argument("verify_nonuniqueness: requires q > 0");
  }

  const PointMatrix C = cyclic_matrix(n);
  const PointMatrix Cq = q_transform(C, q);
  const PluckerVector P = minors(C);
  const PluckerVector Pq = minors(Cq);
  const OrbitTable& table = shared_orbit_table(n);

  QFamilyReport report;
  report.n = n;
  report.q = q;
  report.E_C = plucker_ratio(P);
  report.E_Cq = plucker_ratio(Pq);
  report.equal_loss =
      std::abs(report.E_Cq - report.E_C) <= tol.abs + tol.rel * report.E_C;
  report.proportional_to_C = proportional(P, Pq, tol);
  report.q_interval = admissible_q_interval(n);

  double odd_change = 0.0;
  bool even_ok = true;
  for (int k = 1; k <= table.d(); ++k) {
    for (const PairIndex& pair : table.distinct(k)) {
      const double before = P.at(pair.i, pair.j);
      const double after = Pq.at(pair.i, pair.j);
      if (k % 2 == 1) {
        odd_change = std::max(odd_change, std::abs(after - before) /
                                              std::abs(before));
      } else {
        const double expected = std::pow(q, (pair.i % 2 == 0) ? 2.0 : -2.0);
        const double ratio = after / before;
        if (std::abs(ratio - expected) > tol.abs + tol.rel * expected) {
          even_ok = false;
        }
      }
    }
  }
  report.odd_orbit_max_change = odd_change;
  report.even_orbit_scale_check = even_ok;
  return report;
}

}  // namespace grmin
