#pragma once

#include <array>
#include <vector>

#include "grmin/types.hpp"

namespace grmin {

/// Determinant of the 2x2 column matrix [u, v].
inline double wedge(const PointMatrix::Column& u, const PointMatrix::Column& v) {
  return u[0] * v[1] - u[1] * v[0];
}

/// The n(n-1)/2 minors of a 2xn matrix, indexed by ordered pairs.
/// Access with swapped indices returns the negated value, so callers may
/// use out-of-order subscripts without tracking signs themselves.
class PluckerVector {
 public:
  explicit PluckerVector(int n);

  int n() const { return n_; }
  std::size_t size() const { return entries_.size(); }

  /// Antisymmetric accessor: at(j,i) == -at(i,j). Requires i != j.
  double at(int i, int j) const;
  void set(int i, int j, double value);

  /// Packed entries in lexicographic (i,j) order, i < j.
  const std::vector<double>& entries() const { return entries_; }

  PluckerVector scaled(double factor) const;

  double max_entry() const;
  double min_entry() const;
  bool identically_zero() const;

 private:
  std::size_t index(int i, int j) const;

  int n_;
  std::vector<double> entries_;
};

/// Plucker coordinates of X: entry (i,j) is wedge(x_i, x_j).
PluckerVector minors(const PointMatrix& X);

/// True iff every entry exceeds tol.abs.
bool is_positive(const PluckerVector& P, const Tolerance& tol = {});

/// True iff Q == lambda * P entrywise for some lambda != 0, with lambda
/// estimated from the largest-magnitude entry of P. Throws if P is
/// identically zero.
bool proportional(const PluckerVector& P, const PluckerVector& Q,
                  const Tolerance& tol = {});

/// Residual of the quadratic relation for a strictly increasing 4-tuple:
/// D_ik*D_jl - D_ij*D_kl - D_il*D_jk. Zero (up to roundoff) on the minors
/// of any 2xn matrix.
double plucker_residual(const PluckerVector& P, const std::array<int, 4>& quad);

/// Largest monomial magnitude in the relation above; the natural scale for
/// a relative residual check.
double plucker_relation_scale(const PluckerVector& P,
                              const std::array<int, 4>& quad);

/// Max-norm of (u^v)w - (u^w)v + (v^w)u, which vanishes identically.
double uvw_residual(const PointMatrix::Column& u, const PointMatrix::Column& v,
                    const PointMatrix::Column& w);

}  // namespace grmin
