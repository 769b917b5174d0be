#include "grmin/reconstruct.hpp"

#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

#include "grmin/orbits.hpp"

namespace grmin {

namespace {

void require_odd(int n, const char* who) {
  if (n < 3) {
    throw std::invalid_argument(std::string(who) + ": need n >= 3");
  }
  if (n % 2 == 0) {
    throw std::invalid_argument(std::string(who) + ": n must be odd, got " +
                                std::to_string(n));
  }
}

std::set<std::pair<int, int>> outer_pair_set(int n) {
  const OrbitTable& table = shared_orbit_table(n);
  std::set<std::pair<int, int>> keys;
  for (const PairIndex& p : table.distinct(1)) keys.insert({p.i, p.j});
  for (const PairIndex& p : table.distinct(n / 2)) keys.insert({p.i, p.j});
  return keys;
}

}  // namespace

ReconstructionOrder reconstruction_order(int n) {
  require_odd(n, "reconstruction_order");
  const int d = n / 2;
  ReconstructionOrder seq;
  seq.n = n;
  seq.order.reserve(static_cast<std::size_t>(n));
  int current = 1;
  for (int k = 0; k < n; ++k) {
    seq.order.push_back(current);
    current = (current - 1 + d) % n + 1;
  }
  return seq;
}

OuterOrbitData::OuterOrbitData(int n,
                               std::map<std::pair<int, int>, double> values)
    : n_(n), values_(std::move(values)) {
  require_odd(n_, "OuterOrbitData");
  const auto expected = outer_pair_set(n_);
  if (values_.size() != expected.size()) {
    throw std::invalid_argument("OuterOrbitData: expected " +
                                std::to_string(expected.size()) +
                                " outer-orbit entries, got " +
                                std::to_string(values_.size()));
  }
  for (const auto& [key, v] : values_) {
    if (expected.find(key) == expected.end()) {
      throw std::invalid_argument("OuterOrbitData: pair (" +
                                  std::to_string(key.first) + "," +
                                  std::to_string(key.second) +
                                  ") is not on an outer orbit");
    }
    if (!(v > 0.0)) {
      throw std::invalid_argument("OuterOrbitData: entry (" +
                                  std::to_string(key.first) + "," +
                                  std::to_string(key.second) +
                                  ") is not positive");
    }
  }
}

double OuterOrbitData::value(int i, int j) const {
  if (i == j || i < 1 || j < 1 || i > n_ || j > n_) {
    throw std::invalid_argument("OuterOrbitData: bad pair (" +
                                std::to_string(i) + "," + std::to_string(j) +
                                ")");
  }
  const bool swapped = i > j;
  const auto key = swapped ? std::make_pair(j, i) : std::make_pair(i, j);
  const auto it = values_.find(key);
  if (it == values_.end()) {
    throw std::invalid_argument("OuterOrbitData: pair (" + std::to_string(i) +
                                "," + std::to_string(j) +
                                ") is not on an outer orbit");
  }
  return swapped ? -it->second : it->second;
}

bool OuterOrbitData::contains(int i, int j) const {
  if (i > j) std::swap(i, j);
  return values_.find({i, j}) != values_.end();
}

OuterOrbitData extract_outer_orbits(const PluckerVector& P) {
  require_odd(P.n(), "extract_outer_orbits");
  std::map<std::pair<int, int>, double> values;
  for (const auto& key : outer_pair_set(P.n())) {
    values[key] = P.at(key.first, key.second);
  }
  return OuterOrbitData(P.n(), std::move(values));
}

PointMatrix reconstruct(const OuterOrbitData& data, const Tolerance& tol) {
  const int n = data.n();
  const ReconstructionOrder seq = reconstruction_order(n);
  const auto& c = seq.order;

  std::vector<PointMatrix::Column> cols(static_cast<std::size_t>(n));
  const double seed_wedge = data.value(c[0], c[1]);
  cols[static_cast<std::size_t>(c[0] - 1)] = {1.0, 0.0};
  cols[static_cast<std::size_t>(c[1] - 1)] = {0.0, seed_wedge};

  for (int k = 2; k < n; ++k) {
    const double denom = data.value(c[k - 2], c[k - 1]);
    if (std::abs(denom) <= tol.abs) {
      throw std::invalid_argument(
          "reconstruct: vanishing denominator at step " + std::to_string(k));
    }
    const double f_prev = data.value(c[k - 2], c[k]);
    const double f_prev2 = data.value(c[k - 1], c[k]);
    const auto& x_prev = cols[static_cast<std::size_t>(c[k - 1] - 1)];
    const auto& x_prev2 = cols[static_cast<std::size_t>(c[k - 2] - 1)];
    cols[static_cast<std::size_t>(c[k] - 1)] = {
        (f_prev * x_prev[0] - f_prev2 * x_prev2[0]) / denom,
        (f_prev * x_prev[1] - f_prev2 * x_prev2[1]) / denom};
  }
  return PointMatrix(std::move(cols));
}

}  // namespace grmin
