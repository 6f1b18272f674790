#include "wcga/fpq.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace wcga {

namespace {
constexpr double kStructuralZero = 1e-300;
}

FpqParams::FpqParams(double p_in, double q_in, int d_in) : p(p_in), q(q_in), d(d_in) {
  if (!(p > 1.0) || !std::isfinite(p) || !(q > 1.0) || !std::isfinite(q)) {
    throw ParamError("f_{p,q} requires 1 < p,q < inf");
  }
  if (d < 1) throw ParamError("dimension must be positive");
  p_conj = p / (p - 1.0);
  q_conj = q / (q - 1.0);
  s = std::max(p_conj, q_conj);
  c_pq = std::min(1.0 / p, 1.0 / q);
  h = (d - 1) * std::max(0.0, 1.0 / p - 1.0 / q);
  alpha_pq = p <= q ? 1.0 : q_conj / p_conj;
}

void FpqVector::set(const Rectangle& I, double v) {
  if (I.dim() != params_.d) throw ParamMismatchError("rectangle dimension mismatch");
  if (std::abs(v) < kStructuralZero) {
    entries_.erase(I);
  } else {
    entries_[I] = v;
  }
}

double FpqVector::at(const Rectangle& I) const {
  const auto it = entries_.find(I);
  return it == entries_.end() ? 0.0 : it->second;
}

FpqVector FpqVector::restricted(const RectangleSet& S) const {
  FpqVector out(params_);
  for (const auto& [I, v] : entries_) {
    if (S.count(I)) out.entries_[I] = v;
  }
  return out;
}

FpqVector FpqVector::zeroed_on(const RectangleSet& S) const {
  FpqVector out(params_);
  for (const auto& [I, v] : entries_) {
    if (!S.count(I)) out.entries_[I] = v;
  }
  return out;
}

FpqVector& FpqVector::add_scaled(const FpqVector& other, double c) {
  if (!params_.same_as(other.params_)) throw ParamMismatchError("mixing f_{p,q} parameters");
  for (const auto& [I, v] : other.entries_) {
    set(I, at(I) + c * v);
  }
  return *this;
}

FpqVector& FpqVector::scale(double c) {
  if (c == 0.0) {
    entries_.clear();
    return *this;
  }
  for (auto& [I, v] : entries_) v *= c;
  return *this;
}

namespace {

std::vector<Rectangle> support_rects(const FpqVector& x) {
  std::vector<Rectangle> rects;
  rects.reserve(x.support_size());
  for (const auto& [I, v] : x.entries()) rects.push_back(I);
  return rects;
}

// visit every cell of the sub-box given by per-axis ranges
void for_each_cell(const RefinementGrid& grid, const std::vector<RefinementGrid::AxisRange>& box,
                   const std::function<void(std::size_t)>& fn) {
  const int d = grid.dim();
  std::vector<int> idx(static_cast<std::size_t>(d));
  for (int a = 0; a < d; ++a) idx[static_cast<std::size_t>(a)] = box[static_cast<std::size_t>(a)].lo;
  while (true) {
    std::size_t flat = 0;
    for (int a = 0; a < d; ++a) {
      flat += static_cast<std::size_t>(idx[static_cast<std::size_t>(a)]) * grid.stride(a);
    }
    fn(flat);
    int a = d - 1;
    for (; a >= 0; --a) {
      if (++idx[static_cast<std::size_t>(a)] < box[static_cast<std::size_t>(a)].hi) break;
      idx[static_cast<std::size_t>(a)] = box[static_cast<std::size_t>(a)].lo;
    }
    if (a < 0) break;
  }
}

std::vector<RefinementGrid::AxisRange> rect_box(const RefinementGrid& grid, const Rectangle& I) {
  std::vector<RefinementGrid::AxisRange> box(static_cast<std::size_t>(grid.dim()));
  for (int a = 0; a < grid.dim(); ++a) box[static_cast<std::size_t>(a)] = grid.axis_range(a, I.axis(a));
  return box;
}

std::vector<RefinementGrid::AxisRange> full_box(const RefinementGrid& grid) {
  std::vector<RefinementGrid::AxisRange> box(static_cast<std::size_t>(grid.dim()));
  for (int a = 0; a < grid.dim(); ++a) box[static_cast<std::size_t>(a)] = {0, grid.axis_cells(a)};
  return box;
}

// cell volume lookup built on demand: volume of flat index via per-axis widths
class CellVolumes {
 public:
  explicit CellVolumes(const RefinementGrid& grid) : grid_(grid) {}
  double operator()(std::size_t flat) const {
    double vol = 1.0;
    for (int a = grid_.dim() - 1; a >= 0; --a) {
      const auto& w = grid_.widths(a);
      vol *= w[flat % w.size()];
      flat /= w.size();
    }
    return vol;
  }

 private:
  const RefinementGrid& grid_;
};

}  // namespace

FpqEvaluator::FpqEvaluator(const FpqVector& x)
    : x_(&x), params_(x.params()), grid_(params_.d, support_rects(x)) {
  if (x.is_zero()) return;
  const double q = params_.q;
  const double p = params_.p;

  scale_ = 0.0;
  for (const auto& [I, v] : x.entries()) {
    const double w = std::pow(std::abs(v), q) * std::exp2(I.level_sum() * q / p);
    scale_ = std::max(scale_, w);
  }

  cell_sq_.assign(grid_.cell_count(), 0.0);
  for (const auto& [I, v] : x.entries()) {
    const double w = std::pow(std::abs(v), q) * std::exp2(I.level_sum() * q / p) / scale_;
    for_each_cell(grid_, rect_box(grid_, I), [&](std::size_t c) { cell_sq_[c] += w; });
  }

  const CellVolumes vol(grid_);
  double acc = 0.0;
  for_each_cell(grid_, full_box(grid_), [&](std::size_t c) {
    if (cell_sq_[c] > 0.0) acc += vol(c) * std::pow(cell_sq_[c], p / q);
  });
  norm_ = std::pow(scale_, 1.0 / q) * std::pow(acc, 1.0 / p);
}

double FpqEvaluator::integral_pmq_over(const Rectangle& I) const {
  const double p = params_.p;
  const double q = params_.q;
  const CellVolumes vol(grid_);
  double acc = 0.0;
  for_each_cell(grid_, rect_box(grid_, I), [&](std::size_t c) {
    if (cell_sq_[c] > 0.0) acc += vol(c) * std::pow(cell_sq_[c], (p - q) / q);
  });
  return std::pow(scale_, (p - q) / q) * acc;
}

double FpqEvaluator::norming_coeff(const Rectangle& I) const {
  if (x_->is_zero()) throw ZeroVectorError();
  const double v = std::abs(x_->at(I));
  if (v == 0.0) return 0.0;
  const double p = params_.p;
  const double q = params_.q;
  return std::pow(v, q - 1.0) * std::pow(norm_, 1.0 - p) * std::exp2(I.level_sum() * q / p) *
         integral_pmq_over(I);
}

std::map<Rectangle, double> FpqEvaluator::all_norming_coeffs() const {
  if (x_->is_zero()) throw ZeroVectorError();
  std::map<Rectangle, double> out;
  const double p = params_.p;
  const double q = params_.q;
  const double norm_factor = std::pow(norm_, 1.0 - p);
  for (const auto& [I, v] : x_->entries()) {
    out[I] = std::pow(std::abs(v), q - 1.0) * norm_factor * std::exp2(I.level_sum() * q / p) *
             integral_pmq_over(I);
  }
  return out;
}

double FpqEvaluator::norming_apply(const FpqVector& y) const {
  if (x_->is_zero()) throw ZeroVectorError();
  if (!params_.same_as(y.params())) throw ParamMismatchError("mixing f_{p,q} parameters");
  const double p = params_.p;
  const double q = params_.q;

  // only rectangles in supp(x) & supp(y) contribute, so x's grid refines the
  // integrand; accumulate the weighted sum g per cell with its own scale
  std::vector<double> g(grid_.cell_count(), 0.0);
  double gscale = 0.0;
  std::vector<std::pair<const Rectangle*, double>> terms;
  for (const auto& [I, xv] : x_->entries()) {
    const double yv = y.at(I);
    if (yv == 0.0) continue;
    const double t = std::pow(std::abs(xv), q - 1.0) * (xv > 0 ? 1.0 : -1.0) * yv *
                     std::exp2(I.level_sum() * q / p);
    terms.emplace_back(&I, t);
    gscale = std::max(gscale, std::abs(t));
  }
  if (terms.empty()) return 0.0;
  for (const auto& [Ip, t] : terms) {
    for_each_cell(grid_, rect_box(grid_, *Ip), [&](std::size_t c) { g[c] += t / gscale; });
  }

  const CellVolumes vol(grid_);
  double acc = 0.0;
  for_each_cell(grid_, full_box(grid_), [&](std::size_t c) {
    if (g[c] != 0.0 && cell_sq_[c] > 0.0) {
      acc += vol(c) * std::pow(cell_sq_[c], (p - q) / q) * g[c];
    }
  });
  return std::pow(norm_, 1.0 - p) * std::pow(scale_, (p - q) / q) * gscale * acc;
}

double fpq_norm(const FpqVector& x) { return FpqEvaluator(x).norm(); }

double fpq_norming_coeff(const FpqVector& x, const Rectangle& I) {
  return FpqEvaluator(x).norming_coeff(I);
}

double fpq_norming_apply(const FpqVector& x, const FpqVector& y) {
  return FpqEvaluator(x).norming_apply(y);
}

double fpq_dist_to_coord_span(const FpqVector& x, const RectangleSet& S) {
  return fpq_norm(x.zeroed_on(S));
}

double democracy_sum(const FpqParams& params, const RectangleSet& A) {
  FpqVector x(params);
  for (const auto& I : A) x.set(I, 1.0);
  return fpq_norm(x);
}

std::uint64_t compositions(int n, int d) {
  // binom(n-1, d-1)
  if (n < d || d < 1) return 0;
  std::uint64_t num = 1;
  for (int i = 1; i <= d - 1; ++i) {
    num = num * static_cast<std::uint64_t>(n - d + i) / static_cast<std::uint64_t>(i);
  }
  return num;
}

std::uint64_t block_a_cardinality(int d, int n) {
  if (n < d) return 0;
  return compositions(n, d) << (n - d);
}

std::uint64_t block_b_cardinality(int d, std::span<const int> m_vec) {
  if (static_cast<int>(m_vec.size()) != d) throw ParamError("level vector size mismatch");
  std::uint64_t c = 1;
  for (int m : m_vec) {
    if (m < 1) throw ParamError("block B levels must be >= 1");
    c <<= (m - 1);
  }
  return c;
}

std::vector<Rectangle> block_a_rectangles(int d, int n) {
  if (n < d) throw ParamError("block A needs n >= d");
  const std::uint64_t total = block_a_cardinality(d, n);
  if (total > 4'000'000) throw GridBudgetExceededError(total);

  std::vector<Rectangle> out;
  out.reserve(total);
  std::vector<int> levels(static_cast<std::size_t>(d), 1);

  // enumerate level compositions (each >= 1, sum n), then all offsets with
  // k_i < 2^{j_i - 1} so the rectangle sits inside [0,1/2]^d
  std::function<void(int, int)> rec_levels = [&](int axis, int remaining) {
    if (axis == d - 1) {
      levels[static_cast<std::size_t>(axis)] = remaining;
      if (remaining < 1) return;
      std::vector<std::int64_t> offs(static_cast<std::size_t>(d), 0);
      std::function<void(int)> rec_offs = [&](int a) {
        if (a == d) {
          std::vector<DyadicAxisIndex> axes;
          axes.reserve(static_cast<std::size_t>(d));
          for (int i = 0; i < d; ++i) {
            axes.push_back(DyadicAxisIndex::interval(levels[static_cast<std::size_t>(i)],
                                                     offs[static_cast<std::size_t>(i)]));
          }
          out.emplace_back(std::move(axes));
          return;
        }
        const std::int64_t half = std::int64_t{1} << (levels[static_cast<std::size_t>(a)] - 1);
        for (std::int64_t k = 0; k < half; ++k) {
          offs[static_cast<std::size_t>(a)] = k;
          rec_offs(a + 1);
        }
      };
      rec_offs(0);
      return;
    }
    for (int lev = 1; lev <= remaining - (d - 1 - axis); ++lev) {
      levels[static_cast<std::size_t>(axis)] = lev;
      rec_levels(axis + 1, remaining - lev);
    }
  };
  rec_levels(0, n);
  return out;
}

std::vector<Rectangle> block_b_rectangles(int d, std::span<const int> m_vec) {
  const std::uint64_t total = block_b_cardinality(d, m_vec);
  if (total > 4'000'000) throw GridBudgetExceededError(total);

  std::vector<Rectangle> out;
  out.reserve(total);
  std::vector<std::int64_t> offs(static_cast<std::size_t>(d), 0);
  std::function<void(int)> rec = [&](int a) {
    if (a == d) {
      std::vector<DyadicAxisIndex> axes;
      axes.reserve(static_cast<std::size_t>(d));
      for (int i = 0; i < d; ++i) {
        axes.push_back(DyadicAxisIndex::interval(m_vec[static_cast<std::size_t>(i)],
                                                 offs[static_cast<std::size_t>(i)]));
      }
      out.emplace_back(std::move(axes));
      return;
    }
    const int m = m_vec[static_cast<std::size_t>(a)];
    const std::int64_t lo = std::int64_t{1} << (m - 1);  // offsets in [1/2, 1)
    const std::int64_t hi = std::int64_t{1} << m;
    for (std::int64_t k = lo; k < hi; ++k) {
      offs[static_cast<std::size_t>(a)] = k;
      rec(a + 1);
    }
  };
  rec(0);
  return out;
}

double block_family_norm(const FpqParams& params, double a, int n, double b,
                         std::span<const int> m_vec) {
  const double p = params.p;
  const double q = params.q;
  const int d = params.d;
  double norm_p = 0.0;
  if (a != 0.0) {
    if (n < d) throw ParamError("block A needs n >= d");
    // S_q^q = comps * a^q * 2^{nq/p} on (0,1/2)^d
    const double comps = static_cast<double>(compositions(n, d));
    const double sq = comps * std::pow(std::abs(a), q) * std::exp2(n * q / p);
    norm_p += std::exp2(static_cast<double>(-d)) * std::pow(sq, p / q);
  }
  if (b != 0.0) {
    int m = 0;
    for (int mi : m_vec) {
      if (mi < 1) throw ParamError("block B levels must be >= 1");
      m += mi;
    }
    // S_q^q = b^q * 2^{mq/p} on (1/2,1)^d
    const double sq = std::pow(std::abs(b), q) * std::exp2(m * q / p);
    norm_p += std::exp2(static_cast<double>(-d)) * std::pow(sq, p / q);
  }
  return std::pow(norm_p, 1.0 / p);
}

double lorentz_quasinorm(std::vector<double> coeffs, double p, double q) {
  if (!(p > 1.0) || !(q > 1.0)) throw ParamError("lorentz quasi-norm requires p,q > 1");
  for (auto& c : coeffs) c = std::abs(c);
  std::sort(coeffs.begin(), coeffs.end(), std::greater<>());
  double acc = 0.0;
  for (std::size_t pos = 1; pos <= coeffs.size(); pos <<= 1) {
    const double term = std::pow(static_cast<double>(pos), 1.0 / p) * coeffs[pos - 1];
    acc += std::pow(term, q);
  }
  return std::pow(acc, 1.0 / q);
}

}  // namespace wcga
