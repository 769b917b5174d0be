#include "grmin/plucker.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace grmin {

namespace {

void check_pair_range(int i, int j, int n) {
  if (i < 1 || j < 1 || i > n || j > n || i == j) {
    throw std::out_of_range("PluckerVector: bad pair (" + std::to_string(i) +
                            "," + std::to_string(j) + ") for n=" +
                            std::to_string(n));
  }
}

void check_increasing_quad(const std::array<int, 4>& q, int n) {
  if (!(1 <= q[0] && q[0] < q[1] && q[1] < q[2] && q[2] < q[3] && q[3] <= n)) {
    throw std::invalid_argument(
        "plucker relation: 4-tuple must be strictly increasing within [1," +
        std::to_string(n) + "]");
  }
}

}  // namespace

PluckerVector::PluckerVector(int n) : n_(n) {
  if (n < 3) {
    throw std::invalid_argument("PluckerVector: need n >= 3");
  }
  entries_.assign(static_cast<std::size_t>(n) * (n - 1) / 2, 0.0);
}

std::size_t PluckerVector::index(int i, int j) const {
  // Row-major packing of the strict upper triangle, 1-based (i,j).
  const std::size_t row = static_cast<std::size_t>(i - 1);
  return row * static_cast<std::size_t>(n_) - row * (row + 1) / 2 +
         static_cast<std::size_t>(j - i - 1);
}

double PluckerVector::at(int i, int j) const {
  check_pair_range(i, j, n_);
  if (i < j) return entries_[index(i, j)];
  return -entries_[index(j, i)];
}

void PluckerVector::set(int i, int j, double value) {
  check_pair_range(i, j, n_);
  if (i < j) {
    entries_[index(i, j)] = value;
  } else {
    entries_[index(j, i)] = -value;
  }
}

PluckerVector PluckerVector::scaled(double factor) const {
  PluckerVector out(n_);
  for (std::size_t e = 0; e < entries_.size(); ++e) {
    out.entries_[e] = factor * entries_[e];
  }
  return out;
}

double PluckerVector::max_entry() const {
  return *std::max_element(entries_.begin(), entries_.end());
}

double PluckerVector::min_entry() const {
  return *std::min_element(entries_.begin(), entries_.end());
}

bool PluckerVector::identically_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](double v) { return v == 0.0; });
}

PluckerVector minors(const PointMatrix& X) {
  PluckerVector P(X.n());
  for (int i = 1; i < X.n(); ++i) {
    for (int j = i + 1; j <= X.n(); ++j) {
      P.set(i, j, wedge(X.column(i), X.column(j)));
    }
  }
  return P;
}

bool is_positive(const PluckerVector& P, const Tolerance& tol) {
  for (double v : P.entries()) {
    if (!(v > tol.abs)) return false;
  }
  return true;
}

bool proportional(const PluckerVector& P, const PluckerVector& Q,
                  const Tolerance& tol) {
  if (P.n() != Q.n()) {
    throw std::invalid_argument("proportional: vectors have different n");
  }
  if (P.identically_zero()) {
    throw std::invalid_argument(
        "proportional: reference vector is identically zero");
  }
  // Estimate lambda from the best-conditioned entry of P.
  const auto& p = P.entries();
  const auto& q = Q.entries();
  std::size_t anchor = 0;
  for (std::size_t e = 1; e < p.size(); ++e) {
    if (std::abs(p[e]) > std::abs(p[anchor])) anchor = e;
  }
  const double lambda = q[anchor] / p[anchor];
  if (lambda == 0.0) return false;
  for (std::size_t e = 0; e < p.size(); ++e) {
    const double expected = lambda * p[e];
    const double bound =
        tol.abs + tol.rel * std::max(std::abs(q[e]), std::abs(expected));
    if (std::abs(q[e] - expected) > bound) return false;
  }
  return true;
}

double plucker_residual(const PluckerVector& P, const std::array<int, 4>& quad) {
  check_increasing_quad(quad, P.n());
  const auto [i, j, k, l] = quad;
  return P.at(i, k) * P.at(j, l) - P.at(i, j) * P.at(k, l) -
         P.at(i, l) * P.at(j, k);
}

double plucker_relation_scale(const PluckerVector& P,
                              const std::array<int, 4>& quad) {
  check_increasing_quad(quad, P.n());
  const auto [i, j, k, l] = quad;
  return std::max({std::abs(P.at(i, k) * P.at(j, l)),
                   std::abs(P.at(i, j) * P.at(k, l)),
                   std::abs(P.at(i, l) * P.at(j, k))});
}

double uvw_residual(const PointMatrix::Column& u, const PointMatrix::Column& v,
                    const PointMatrix::Column& w) {
  const double uv = wedge(u, v);
  const double uw = wedge(u, w);
  const double vw = wedge(v, w);
  const double rx = uv * w[0] - uw * v[0] + vw * u[0];
  const double ry = uv * w[1] - uw * v[1] + vw * u[1];
  return std::max(std::abs(rx), std::abs(ry));
}

}  // namespace grmin
