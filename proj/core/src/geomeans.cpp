#include "grmin/geomeans.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "grmin/orbits.hpp"

namespace grmin {

namespace {

struct ShiftedPairs {
  PairIndex ik, jl, ij, kl, il, jk;
};

ShiftedPairs shift_quad_pairs(const std::array<int, 4>& quad, int n, long m) {
  const auto shift_pair = [&](int a, int b) {
    const std::vector<int> t = cyclic_shift_power({a, b}, n, m);
    return PairIndex{t[0], t[1]};
  };
  const auto [i, j, k, l] = quad;
  if (!(1 <= i && i < j && j < k && k < l && l <= n)) {
    throw std::invalid_argument(
        "shifted relation: 4-tuple must be strictly increasing within [1," +
        std::to_string(n) + "]");
  }
  return {shift_pair(i, k), shift_pair(j, l), shift_pair(i, j),
          shift_pair(k, l), shift_pair(i, l), shift_pair(j, k)};
}

}  // namespace

double GeoMeans::D_at(int k) const {
  if (k < 1 || k > n - 1) {
    throw std::out_of_range("GeoMeans: index " + std::to_string(k));
  }
  return D[static_cast<std::size_t>(k - 1)];
}

GeoMeans geometric_means(const PluckerVector& P) {
  const int n = P.n();
  const OrbitTable& table = shared_orbit_table(n);
  GeoMeans G;
  G.n = n;
  G.D.reserve(static_cast<std::size_t>(n - 1));
  for (int k = 1; k <= n - 1; ++k) {
    double log_sum = 0.0;
    for (const PairIndex& p : table.orbit(k)) {
      const double v = P.at(p.i, p.j);
      if (!(v > 0.0)) {
        throw std::invalid_argument("geometric_means: entry (" +
                                    std::to_string(p.i) + "," +
                                    std::to_string(p.j) + ") is not positive");
      }
      log_sum += std::log(v);
    }
    G.D.push_back(std::exp(log_sum / n));
  }
  return G;
}

PluckerVector normalized(const PluckerVector& P) {
  for (double v : P.entries()) {
    if (!(v > 0.0)) {
      throw std::invalid_argument("normalized: vector is not positive");
    }
  }
  const int n = P.n();
  const OrbitTable& table = shared_orbit_table(n);
  double log_sum = 0.0;
  for (const PairIndex& p : table.orbit(1)) {
    log_sum += std::log(P.at(p.i, p.j));
  }
  const double D1 = std::exp(log_sum / n);
  const double s1 = std::sin(M_PI / n);
  return P.scaled(s1 / D1);
}

double shifted_relation_residual(const PluckerVector& P,
                                 const std::array<int, 4>& quad, long m) {
  const ShiftedPairs s = shift_quad_pairs(quad, P.n(), m);
  return P.at(s.ik.i, s.ik.j) * P.at(s.jl.i, s.jl.j) -
         P.at(s.ij.i, s.ij.j) * P.at(s.kl.i, s.kl.j) -
         P.at(s.il.i, s.il.j) * P.at(s.jk.i, s.jk.j);
}

double shifted_relation_scale(const PluckerVector& P,
                              const std::array<int, 4>& quad, long m) {
  const ShiftedPairs s = shift_quad_pairs(quad, P.n(), m);
  return std::max({std::abs(P.at(s.ik.i, s.ik.j) * P.at(s.jl.i, s.jl.j)),
                   std::abs(P.at(s.ij.i, s.ij.j) * P.at(s.kl.i, s.kl.j)),
                   std::abs(P.at(s.il.i, s.il.j) * P.at(s.jk.i, s.jk.j))});
}

}  // namespace grmin
