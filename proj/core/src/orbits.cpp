#include "grmin/orbits.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>

namespace grmin {

namespace {

void check_tuple(const std::vector<int>& tuple, int n) {
  if (tuple.empty()) {
    throw std::invalid_argument("cyclic_shift: empty tuple");
  }
  int prev = 0;
  for (int v : tuple) {
    if (v < 1 || v > n) {
      throw std::invalid_argument("cyclic_shift: entry " + std::to_string(v) +
                                  " outside [1," + std::to_string(n) + "]");
    }
    if (v <= prev) {
      throw std::invalid_argument("cyclic_shift: tuple not strictly increasing");
    }
    prev = v;
  }
}

}  // namespace

std::vector<int> cyclic_shift(const std::vector<int>& tuple, int n) {
  check_tuple(tuple, n);
  std::vector<int> out;
  out.reserve(tuple.size());
  if (tuple.back() < n) {
    for (int v : tuple) out.push_back(v + 1);
  } else {
    out.push_back(1);
    for (std::size_t e = 0; e + 1 < tuple.size(); ++e) {
      out.push_back(tuple[e] + 1);
    }
  }
  return out;
}

std::vector<int> cyclic_shift_power(const std::vector<int>& tuple, int n,
                                    long m) {
  check_tuple(tuple, n);
  long steps = m % n;
  if (steps < 0) steps += n;
  std::vector<int> out = tuple;
  for (long s = 0; s < steps; ++s) {
    out = cyclic_shift(out, n);
  }
  return out;
}

std::vector<PairIndex> orbit(int k, int n) {
  if (k < 1 || k > n - 1) {
    throw std::invalid_argument("orbit: k=" + std::to_string(k) +
                                " outside [1," + std::to_string(n - 1) + "]");
  }
  std::vector<PairIndex> result;
  result.reserve(static_cast<std::size_t>(n));
  std::vector<int> t{1, k + 1};
  for (int m = 0; m < n; ++m) {
    result.push_back({t[0], t[1]});
    t = cyclic_shift(t, n);
  }
  return result;
}

OrbitTable::OrbitTable(int n) : n_(n), d_(n / 2) {
  if (n < 3) {
    throw std::invalid_argument("OrbitTable: need n >= 3");
  }
  orbits_.reserve(static_cast<std::size_t>(n - 1));
  distinct_.reserve(static_cast<std::size_t>(n - 1));
  for (int k = 1; k <= n - 1; ++k) {
    orbits_.push_back(grmin::orbit(k, n));
    std::vector<PairIndex> dedup = orbits_.back();
    std::sort(dedup.begin(), dedup.end());
    dedup.erase(std::unique(dedup.begin(), dedup.end()), dedup.end());
    distinct_.push_back(std::move(dedup));
  }

  // Involution and gap law.
  for (int k = 1; k <= n - 1; ++k) {
    if (distinct(k) != distinct(n - k)) {
      throw std::logic_error("OrbitTable: orbit sets " + std::to_string(k) +
                             " and " + std::to_string(n - k) + " differ");
    }
    for (const PairIndex& p : orbit(k)) {
      const int gap = p.j - p.i;
      if (gap != k && gap != n - k) {
        throw std::logic_error("OrbitTable: gap law violated in orbit " +
                               std::to_string(k));
      }
    }
  }
  // The d distinct orbit sets partition the pair set.
  std::vector<PairIndex> all;
  for (int k = 1; k <= d_; ++k) {
    all.insert(all.end(), distinct(k).begin(), distinct(k).end());
  }
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end() ||
      all != ordered_pairs(n)) {
    throw std::logic_error("OrbitTable: orbits do not partition the pair set");
  }
}

const std::vector<PairIndex>& OrbitTable::orbit(int k) const {
  if (k < 1 || k > n_ - 1) {
    throw std::out_of_range("OrbitTable: orbit index " + std::to_string(k));
  }
  return orbits_[static_cast<std::size_t>(k - 1)];
}

const std::vector<PairIndex>& OrbitTable::distinct(int k) const {
  if (k < 1 || k > n_ - 1) {
    throw std::out_of_range("OrbitTable: orbit index " + std::to_string(k));
  }
  return distinct_[static_cast<std::size_t>(k - 1)];
}

int OrbitTable::orbit_index(const PairIndex& p, int n) {
  const int gap = p.j - p.i;
  if (p.i < 1 || p.j > n || gap < 1) {
    throw std::invalid_argument("orbit_index: bad pair");
  }
  return std::min(gap, n - gap);
}

const OrbitTable& shared_orbit_table(int n) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<OrbitTable>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) {
    it = cache.emplace(n, std::make_unique<OrbitTable>(n)).first;
  }
  return *it->second;
}

}  // namespace grmin
