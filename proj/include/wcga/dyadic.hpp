#pragma once

#include <cmath>
#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "wcga/errors.hpp"

namespace wcga {

// One axis of a dyadic rectangle: either the constant direction (the full
// interval [0,1), written "zero") or a dyadic interval 2^{-j}(k + [0,1)).
class DyadicAxisIndex {
 public:
  DyadicAxisIndex() = default;  // zero axis

  static DyadicAxisIndex zero() { return DyadicAxisIndex(); }
  static DyadicAxisIndex interval(int level, std::int64_t offset) {
    if (level < 0 || level > 62) throw ParamError("dyadic level out of range");
    if (offset < 0 || offset >= (std::int64_t{1} << level)) {
      throw ParamError("dyadic offset out of range");
    }
    DyadicAxisIndex a;
    a.level_ = level;
    a.offset_ = offset;
    return a;
  }

  bool is_zero() const { return level_ < 0; }
  int level() const { return is_zero() ? 0 : level_; }
  std::int64_t offset() const { return offset_; }

  double lo() const { return is_zero() ? 0.0 : std::ldexp(static_cast<double>(offset_), -level_); }
  double hi() const {
    return is_zero() ? 1.0 : std::ldexp(static_cast<double>(offset_ + 1), -level_);
  }
  double length() const { return std::ldexp(1.0, -level()); }

  auto operator<=>(const DyadicAxisIndex&) const = default;

 private:
  int level_ = -1;  // -1 encodes the zero axis
  std::int64_t offset_ = 0;
};

// Product of d axis indices; a dyadic rectangle inside [0,1]^d.
class Rectangle {
 public:
  Rectangle() = default;
  explicit Rectangle(std::vector<DyadicAxisIndex> axes) : axes_(std::move(axes)) {}

  static Rectangle from_levels(std::span<const int> levels, std::span<const std::int64_t> offsets);

  int dim() const { return static_cast<int>(axes_.size()); }
  const std::vector<DyadicAxisIndex>& axes() const { return axes_; }
  const DyadicAxisIndex& axis(int i) const { return axes_[static_cast<std::size_t>(i)]; }

  int level_sum() const;
  double measure() const { return std::ldexp(1.0, -level_sum()); }

  auto operator<=>(const Rectangle&) const = default;

 private:
  std::vector<DyadicAxisIndex> axes_;
};

// Common refinement of a family of rectangles: per-axis sorted breakpoints
// held as exact dyadic rationals (num / 2^level), so grid cells align
// bit-exactly with every support rectangle.
class RefinementGrid {
 public:
  static constexpr std::size_t kCellBudget = 10'000'000;

  RefinementGrid(int dim, std::span<const Rectangle> rects);

  int dim() const { return dim_; }
  std::size_t cell_count() const { return cell_count_; }
  int axis_cells(int a) const { return static_cast<int>(widths_[static_cast<std::size_t>(a)].size()); }
  const std::vector<double>& widths(int a) const { return widths_[static_cast<std::size_t>(a)]; }
  std::size_t stride(int a) const { return strides_[static_cast<std::size_t>(a)]; }

  struct AxisRange {
    int lo = 0;
    int hi = 0;  // half-open cell range
  };
  AxisRange axis_range(int a, const DyadicAxisIndex& ax) const;

 private:
  int dim_ = 0;
  std::vector<int> axis_level_;                      // normalization level per axis
  std::vector<std::vector<std::int64_t>> edges_;     // breakpoints as num * 2^{L - level}
  std::vector<std::vector<double>> widths_;          // cell widths (exact dyadic doubles)
  std::vector<std::size_t> strides_;
  std::size_t cell_count_ = 0;
};

}  // namespace wcga
