#pragma once

#include <vector>

#include "grmin/types.hpp"

namespace grmin {

/// Right cyclic shift acting on a strictly increasing k-tuple of [n]:
/// adds 1 elementwise, wrapping the last entry to the front as 1.
/// The result is strictly increasing again, and n applications give back
/// the input tuple.
std::vector<int> cyclic_shift(const std::vector<int>& tuple, int n);

/// m-fold shift, m any integer (reduced mod n).
std::vector<int> cyclic_shift_power(const std::vector<int>& tuple, int n,
                                    long m);

/// The k-th orbit of pair indices: the n shifts of (1, k+1), in shift order
/// and counted with multiplicity. Requires 1 <= k <= n-1.
std::vector<PairIndex> orbit(int k, int n);

/// All pair orbits of [n] with their deduplicated set views.
///
/// Construction validates the structural facts the rest of the library
/// leans on: O_k == O_{n-k} as sets, every (i,j) in O_k has gap k or n-k,
/// and the d distinct orbit sets partition the full pair set.
class OrbitTable {
 public:
  explicit OrbitTable(int n);

  int n() const { return n_; }
  int d() const { return d_; }

  /// Orbit multiset in shift order, n entries. k in [1, n-1].
  const std::vector<PairIndex>& orbit(int k) const;

  /// Sorted deduplicated view of orbit k. k in [1, n-1].
  const std::vector<PairIndex>& distinct(int k) const;

  /// The orbit set containing a given pair: min(j-i, n-(j-i)).
  static int orbit_index(const PairIndex& p, int n);

 private:
  int n_;
  int d_;
  std::vector<std::vector<PairIndex>> orbits_;
  std::vector<std::vector<PairIndex>> distinct_;
};

/// Process-wide read-only cache of orbit tables, one per n.
const OrbitTable& shared_orbit_table(int n);

}  // namespace grmin
