#pragma once

#include <array>
#include <vector>

#include "grmin/plucker.hpp"
#include "grmin/types.hpp"

namespace grmin {

/// Geometric means D_k of a Plucker vector over the pair orbits, with the
/// normalized logs a_k filled in on demand by normalized_logs().
struct GeoMeans {
  int n = 0;
  std::vector<double> D;  // D_1..D_{n-1}
  std::vector<double> a;  // empty until computed

  double D_at(int k) const;
};

/// D_k = geometric mean of P over the k-th orbit multiset, computed in log
/// space. Throws if any entry on an orbit is <= 0.
GeoMeans geometric_means(const PluckerVector& P);

/// Rescales P so that D_1 = D_{n-1} = sin(pi/n). Throws if P is not
/// strictly positive.
PluckerVector normalized(const PluckerVector& P);

/// Residual of the quadratic relation with every pair shifted m times:
/// D_{s(i,k)}D_{s(j,l)} - D_{s(i,j)}D_{s(k,l)} - D_{s(i,l)}D_{s(j,k)}
/// where s is the m-fold cyclic shift. Vanishes on minors of any matrix,
/// for every integer m.
double shifted_relation_residual(const PluckerVector& P,
                                 const std::array<int, 4>& quad, long m);

/// Largest monomial magnitude of the shifted relation.
double shifted_relation_scale(const PluckerVector& P,
                              const std::array<int, 4>& quad, long m);

}  // namespace grmin
