#include "grmin/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "grmin/orbits.hpp"

namespace grmin {

namespace {

void check_increasing_triple(int j, int k, int l, int n) {
  if (!(1 <= j && j < k && k < l && l <= n - 1)) {
    throw std::invalid_argument("(j,k,l) must be strictly increasing within [1," +
                                std::to_string(n - 1) + "]");
  }
}

double at1(const std::vector<double>& v, int k) {
  return v[static_cast<std::size_t>(k - 1)];
}

}  // namespace

SineTable::SineTable(int n) : n_(n) {
  if (n < 3) {
    throw std::invalid_argument("SineTable: need n >= 3");
  }
  s_.reserve(static_cast<std::size_t>(n - 1));
  for (int k = 1; k <= n - 1; ++k) {
    s_.push_back(std::sin(k * M_PI / n));
  }
}

double SineTable::s(int k) const {
  if (k < 1 || k > n_ - 1) {
    throw std::out_of_range("SineTable: index " + std::to_string(k) +
                            " outside [1," + std::to_string(n_ - 1) + "]");
  }
  return s_[static_cast<std::size_t>(k - 1)];
}

double optimal_loss(int n) { return SineTable(n).optimal_ratio(); }

PointMatrix cyclic_matrix(int n) {
  if (n < 3) {
    throw std::invalid_argument("cyclic_matrix: need n >= 3");
  }
  std::vector<PointMatrix::Column> cols;
  cols.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double t = i * M_PI / n;
    cols.push_back({std::cos(t), std::sin(t)});
  }
  return PointMatrix(std::move(cols));
}

double plucker_ratio(const PluckerVector& P, const Tolerance& tol) {
  if (!is_positive(P, tol)) {
    throw std::invalid_argument("plucker_ratio: vector is not positive");
  }
  return P.max_entry() / P.min_entry();
}

double geomean_ratio(const GeoMeans& G) {
  return G.D_at(G.n / 2) / G.D_at(1);
}

double abs_minor_ratio(const PointMatrix& X) {
  double max_abs = 0.0;
  double min_abs = 0.0;
  bool first = true;
  for (int i = 1; i < X.n(); ++i) {
    for (int j = i + 1; j <= X.n(); ++j) {
      const double m = std::abs(wedge(X.column(i), X.column(j)));
      if (m == 0.0) {
        throw std::invalid_argument("abs_minor_ratio: minor (" +
                                    std::to_string(i) + "," +
                                    std::to_string(j) + ") is zero");
      }
      if (first) {
        max_abs = min_abs = m;
        first = false;
      } else {
        max_abs = std::max(max_abs, m);
        min_abs = std::min(min_abs, m);
      }
    }
  }
  return max_abs / min_abs;
}

PointMatrix positive_reduction(const PointMatrix& X) {
  const int n = X.n();
  // Collinear columns give zero minors; the sort below has no valid order
  // for them.
  for (int i = 1; i < n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (wedge(X.column(i), X.column(j)) == 0.0) {
        throw std::invalid_argument("positive_reduction: columns " +
                                    std::to_string(i) + " and " +
                                    std::to_string(j) + " are collinear");
      }
    }
  }

  std::vector<PointMatrix::Column> cols(X.columns());
  for (auto& c : cols) {
    if (c[1] < 0.0 || (c[1] == 0.0 && c[0] < 0.0)) {
      c[0] = -c[0];
      c[1] = -c[1];
    }
  }
  std::vector<double> angle(cols.size());
  for (std::size_t e = 0; e < cols.size(); ++e) {
    angle[e] = std::atan2(cols[e][1], cols[e][0]);
  }
  std::vector<std::size_t> order(cols.size());
  std::iota(order.begin(), order.end(), 0);
  // Equal rounded angles can still be a hair apart; the wedge sign is the
  // exact counterclockwise order in that case.
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (angle[a] != angle[b]) return angle[a] < angle[b];
    return wedge(cols[a], cols[b]) > 0.0;
  });
  std::vector<PointMatrix::Column> sorted;
  sorted.reserve(cols.size());
  for (std::size_t e : order) sorted.push_back(cols[e]);
  return PointMatrix(std::move(sorted));
}

WeightPair sine_weights(int j, int k, int l, int n) {
  check_increasing_triple(j, k, l, n);
  const SineTable sines(n);
  const double denom = sines.s(k) * sines.s(l - j);
  return {sines.s(j) * sines.s(l - k) / denom,
          sines.s(l) * sines.s(k - j) / denom};
}

std::vector<SlackEntry> geomean_slacks(const GeoMeans& G) {
  const int n = G.n;
  std::vector<SlackEntry> slacks;
  for (int j = 1; j <= n - 3; ++j) {
    for (int k = j + 1; k <= n - 2; ++k) {
      for (int l = k + 1; l <= n - 1; ++l) {
        const double slack = G.D_at(k) * G.D_at(l - j) -
                             G.D_at(j) * G.D_at(l - k) -
                             G.D_at(l) * G.D_at(k - j);
        slacks.push_back({j, k, l, slack});
      }
    }
  }
  return slacks;
}

std::vector<double> normalized_logs(const GeoMeans& G, const Tolerance& tol) {
  const SineTable sines(G.n);
  const double s1 = sines.s(1);
  if (std::abs(G.D_at(1) - s1) > tol.abs + tol.rel * s1) {
    throw std::invalid_argument(
        "normalized_logs: vector is not normalized (D_1 != sin(pi/n))");
  }
  std::vector<double> a;
  a.reserve(static_cast<std::size_t>(G.n - 1));
  for (int k = 1; k <= G.n - 1; ++k) {
    a.push_back(std::log(G.D_at(k) / sines.s(k)));
  }
  return a;
}

std::vector<SlackEntry> log_linear_slacks(const std::vector<double>& a, int n) {
  if (a.size() != static_cast<std::size_t>(n - 1)) {
    throw std::invalid_argument("log_linear_slacks: expected n-1 values");
  }
  std::vector<SlackEntry> slacks;
  for (int j = 1; j <= n - 3; ++j) {
    for (int k = j + 1; k <= n - 2; ++k) {
      for (int l = k + 1; l <= n - 1; ++l) {
        const WeightPair w = sine_weights(j, k, l, n);
        const double slack = at1(a, k) + at1(a, l - j) -
                             w.p * (at1(a, j) + at1(a, l - k)) -
                             w.q * (at1(a, l) + at1(a, k - j));
        slacks.push_back({j, k, l, slack});
      }
    }
  }
  return slacks;
}

std::vector<double> contraction_map(const std::vector<double>& a, int n,
                                    const Tolerance& tol) {
  if (a.size() != static_cast<std::size_t>(n - 1)) {
    throw std::invalid_argument("contraction_map: expected n-1 values");
  }
  const double bound = tol.abs + tol.rel;
  if (std::abs(a.front()) > bound || std::abs(a.back()) > bound) {
    throw std::invalid_argument(
        "contraction_map: boundary entries a_1, a_{n-1} must be zero");
  }
  const SineTable sines(n);
  std::vector<double> y(a.size(), 0.0);
  for (int k = 2; k <= n - 2; ++k) {
    const double qk = sines.s(k + 1) * sines.s(k - 1) / (sines.s(k) * sines.s(k));
    y[static_cast<std::size_t>(k - 1)] = qk * (at1(a, k + 1) + at1(a, k - 1)) / 2.0;
  }
  return y;
}

double contraction_factor(int n) {
  const SineTable sines(n);
  double factor = 0.0;
  for (int k = 2; k <= n - 2; ++k) {
    factor = std::max(factor, sines.s(k + 1) * sines.s(k - 1) /
                                  (sines.s(k) * sines.s(k)));
  }
  return factor;
}

CertificateReport certify_point(const PointMatrix& X, const Tolerance& tol) {
  const PluckerVector P = minors(X);
  if (!is_positive(P, tol)) {
    throw std::invalid_argument("certify_point: minors are not positive");
  }
  const int n = P.n();
  const PluckerVector Pn = normalized(P);
  GeoMeans G = geometric_means(Pn);

  CertificateReport report;
  report.n = n;
  report.tol = tol;
  report.E_value = plucker_ratio(Pn, tol);
  report.L_value = geomean_ratio(G);

  double max_rel_residual = 0.0;
  for (int i = 1; i <= n - 3; ++i) {
    for (int j = i + 1; j <= n - 2; ++j) {
      for (int k = j + 1; k <= n - 1; ++k) {
        for (int l = k + 1; l <= n; ++l) {
          const std::array<int, 4> quad{i, j, k, l};
          for (int m = 0; m < n; ++m) {
            const double scale = shifted_relation_scale(Pn, quad, m);
            const double res = std::abs(shifted_relation_residual(Pn, quad, m));
            if (scale > 0.0) {
              max_rel_residual = std::max(max_rel_residual, res / scale);
            }
          }
        }
      }
    }
  }
  report.relation_max_residual = max_rel_residual;

  for (const SlackEntry& e : geomean_slacks(G)) {
    const double scale =
        std::max({std::abs(G.D_at(e.k) * G.D_at(e.l - e.j)),
                  std::abs(G.D_at(e.j) * G.D_at(e.l - e.k)),
                  std::abs(G.D_at(e.l) * G.D_at(e.k - e.j))});
    if (e.slack < -(tol.abs + tol.rel * scale)) {
      report.geomean_violations.push_back(e);
    }
  }

  G.a = normalized_logs(G, tol);
  report.a_min = *std::min_element(G.a.begin(), G.a.end());

  for (const SlackEntry& e : log_linear_slacks(G.a, n)) {
    if (e.slack < -(tol.abs + tol.rel)) {
      report.linear_violations.push_back(e);
    }
  }

  const double optimum = SineTable(n).optimal_ratio();
  report.lower_bound_gap = report.E_value - optimum;
  report.passed = report.geomean_violations.empty() &&
                  report.linear_violations.empty() &&
                  report.a_min >= -(tol.abs + tol.rel) &&
                  report.lower_bound_gap >= -(tol.abs + tol.rel * optimum);
  return report;
}

}  // namespace grmin
