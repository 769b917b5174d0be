#pragma once

#include <map>
#include <utility>
#include <vector>

#include "grmin/plucker.hpp"
#include "grmin/types.hpp"

namespace grmin {

/// The column visiting order c(k) = k*d-fold shift of 1, d = floor(n/2).
/// For odd n, gcd(d,n) = 1 and the sequence is a permutation of [n]
/// starting at 1.
struct ReconstructionOrder {
  int n = 0;
  std::vector<int> order;  // c(0..n-1), values in [1, n]
};

/// Throws if n is even (the sequence would not cover [n]) or n < 3.
ReconstructionOrder reconstruction_order(int n);

/// The Plucker coordinates of a positive point restricted to the two outer
/// orbits O_1 and O_d, n odd. This is exactly the data the three-term
/// recurrence in reconstruct() consumes, and it determines the point.
class OuterOrbitData {
 public:
  /// Validates: n odd >= 3, keys exactly the outer-orbit pair set,
  /// all values > 0.
  OuterOrbitData(int n, std::map<std::pair<int, int>, double> values);

  int n() const { return n_; }
  int d() const { return n_ / 2; }

  /// Antisymmetric lookup; throws if the pair (up to transposition) does
  /// not lie on an outer orbit.
  double value(int i, int j) const;

  bool contains(int i, int j) const;

  const std::map<std::pair<int, int>, double>& values() const {
    return values_;
  }

 private:
  int n_;
  std::map<std::pair<int, int>, double> values_;  // keys (i,j) with i < j
};

/// Restriction of P to the outer orbits. Requires n odd and P positive on
/// the extracted pairs.
OuterOrbitData extract_outer_orbits(const PluckerVector& P);

/// Rebuilds a spanning matrix from outer-orbit data via the three-term
/// recurrence
///   x_{c(k)} = (D_{c(k-2),c(k)} x_{c(k-1)} - D_{c(k-1),c(k)} x_{c(k-2)})
///              / D_{c(k-2),c(k-1)},
/// seeded with x_{c(0)} = (1,0) and x_{c(1)} = (0, D_{c(0),c(1)}). The seed
/// wedge matches the data, so the minors of the result reproduce the input
/// values exactly rather than merely proportionally.
PointMatrix reconstruct(const OuterOrbitData& data, const Tolerance& tol = {});

}  // namespace grmin
