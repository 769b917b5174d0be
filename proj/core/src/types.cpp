#include "grmin/types.hpp"

#include <stdexcept>
#include <string>

namespace grmin {

PointMatrix::PointMatrix(std::vector<Column> columns)
    : columns_(std::move(columns)) {
  if (columns_.size() < 3) {
    throw std::invalid_argument("PointMatrix: need at least 3 columns, got " +
                                std::to_string(columns_.size()));
  }
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    if (columns_[i][0] == 0.0 && columns_[i][1] == 0.0) {
      throw std::invalid_argument("PointMatrix: column " +
                                  std::to_string(i + 1) + " is zero");
    }
  }
}

const PointMatrix::Column& PointMatrix::column(int i) const {
  if (i < 1 || i > n()) {
    throw std::out_of_range("PointMatrix: column index " + std::to_string(i) +
                            " outside [1," + std::to_string(n()) + "]");
  }
  return columns_[static_cast<std::size_t>(i - 1)];
}

std::vector<PairIndex> ordered_pairs(int n) {
  std::vector<PairIndex> pairs;
  pairs.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int i = 1; i < n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      pairs.push_back({i, j});
    }
  }
  return pairs;
}

}  // namespace grmin
