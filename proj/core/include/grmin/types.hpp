#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <vector>

namespace grmin {

/// Absolute/relative tolerance pair used by every numerical check.
struct Tolerance {
  double rel = 1e-9;
  double abs = 1e-12;
};

/// Ordered pair (i,j) with 1 <= i < j <= n, indexing a 2x2 minor.
/// All index math in this library is 1-based, matching the usual
/// Grassmannian conventions.
struct PairIndex {
  int i = 0;
  int j = 0;

  friend auto operator<=>(const PairIndex&, const PairIndex&) = default;
};

/// A 2xn real matrix stored as n planar columns; spans a point of Gr(2,n).
class PointMatrix {
 public:
  using Column = std::array<double, 2>;

  /// Requires n >= 3 and no zero column.
  explicit PointMatrix(std::vector<Column> columns);

  int n() const { return static_cast<int>(columns_.size()); }

  /// 1-based column access.
  const Column& column(int i) const;

  const std::vector<Column>& columns() const { return columns_; }

 private:
  std::vector<Column> columns_;
};

/// All ordered pairs of [n] in lexicographic order.
std::vector<PairIndex> ordered_pairs(int n);

}  // namespace grmin
