#include "wcga/dyadic.hpp"

#include <algorithm>
#include <cmath>

namespace wcga {

Rectangle Rectangle::from_levels(std::span<const int> levels, std::span<const std::int64_t> offsets) {
  if (levels.size() != offsets.size()) throw ParamError("levels/offsets size mismatch");
  std::vector<DyadicAxisIndex> axes;
  axes.reserve(levels.size());
  for (std::size_t i = 0; i < levels.size(); ++i) {
    axes.push_back(DyadicAxisIndex::interval(levels[i], offsets[i]));
  }
  return Rectangle(std::move(axes));
}

int Rectangle::level_sum() const {
  int s = 0;
  for (const auto& a : axes_) s += a.level();
  return s;
}

RefinementGrid::RefinementGrid(int dim, std::span<const Rectangle> rects) : dim_(dim) {
  axis_level_.assign(static_cast<std::size_t>(dim), 0);
  edges_.resize(static_cast<std::size_t>(dim));
  widths_.resize(static_cast<std::size_t>(dim));
  strides_.assign(static_cast<std::size_t>(dim), 1);

  for (const auto& r : rects) {
    if (r.dim() != dim) throw ParamMismatchError("rectangle dimension mismatch");
    for (int a = 0; a < dim; ++a) {
      axis_level_[static_cast<std::size_t>(a)] =
          std::max(axis_level_[static_cast<std::size_t>(a)], r.axis(a).level());
    }
  }

  cell_count_ = 1;
  for (int a = 0; a < dim; ++a) {
    const int L = axis_level_[static_cast<std::size_t>(a)];
    auto& edges = edges_[static_cast<std::size_t>(a)];
    edges.push_back(0);
    edges.push_back(std::int64_t{1} << L);
    for (const auto& r : rects) {
      const auto& ax = r.axis(a);
      if (ax.is_zero()) continue;
      const int shift = L - ax.level();
      edges.push_back(ax.offset() << shift);
      edges.push_back((ax.offset() + 1) << shift);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    auto& w = widths_[static_cast<std::size_t>(a)];
    w.resize(edges.size() - 1);
    for (std::size_t t = 0; t + 1 < edges.size(); ++t) {
      w[t] = std::ldexp(static_cast<double>(edges[t + 1] - edges[t]), -L);
    }
    cell_count_ *= w.size();
    if (cell_count_ > kCellBudget) throw GridBudgetExceededError(cell_count_);
  }

  // row-major strides: last axis contiguous
  for (int a = dim - 2; a >= 0; --a) {
    strides_[static_cast<std::size_t>(a)] =
        strides_[static_cast<std::size_t>(a + 1)] * widths_[static_cast<std::size_t>(a + 1)].size();
  }
}

RefinementGrid::AxisRange RefinementGrid::axis_range(int a, const DyadicAxisIndex& ax) const {
  const auto& edges = edges_[static_cast<std::size_t>(a)];
  if (ax.is_zero()) {
    return AxisRange{0, static_cast<int>(edges.size()) - 1};
  }
  const int L = axis_level_[static_cast<std::size_t>(a)];
  const int shift = L - ax.level();
  const std::int64_t lo = ax.offset() << shift;
  const std::int64_t hi = (ax.offset() + 1) << shift;
  const auto lo_it = std::lower_bound(edges.begin(), edges.end(), lo);
  const auto hi_it = std::lower_bound(edges.begin(), edges.end(), hi);
  return AxisRange{static_cast<int>(lo_it - edges.begin()), static_cast<int>(hi_it - edges.begin())};
}

}  // namespace wcga
