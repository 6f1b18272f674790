#include "wcga/haar.hpp"

#include <algorithm>
#include <cmath>

namespace wcga {

namespace {

// 1-D analysis of 2^L cell averages against the dual (L^{p'}-normalized)
// Haar system: <f, h_{(j,k),p'}> = 2^{-j/p} (avg_left - avg_right)/2.
// Output layout: c[0] = <f, h_0>, c[2^j + k] = <f, h_{(j,k),p'}>.
void analyze_1d(std::vector<double>& v, double p) {
  const std::size_t n = v.size();
  std::vector<double> avg = v;
  std::size_t len = n;
  int level = 0;
  while (len > 1) ++level, len >>= 1;  // level = log2(n)
  for (int j = level - 1; j >= 0; --j) {
    const std::size_t half = std::size_t{1} << j;
    const double factor = std::exp2(-static_cast<double>(j) / p);
    for (std::size_t k = 0; k < half; ++k) {
      const double m0 = avg[2 * k];
      const double m1 = avg[2 * k + 1];
      v[half + k] = factor * (m0 - m1) * 0.5;
      avg[k] = (m0 + m1) * 0.5;
    }
  }
  v[0] = avg[0];
}

// inverse of analyze_1d with the L^p-normalized system
void synthesize_1d(std::vector<double>& v, double p) {
  const std::size_t n = v.size();
  std::size_t len = n;
  int level = 0;
  while (len > 1) ++level, len >>= 1;
  std::vector<double> out(n, v[0]);
  for (int j = 0; j < level; ++j) {
    const std::size_t half = std::size_t{1} << j;
    const double factor = std::exp2(static_cast<double>(j) / p);
    const std::size_t block = n >> (j + 1);  // cells per half-interval at this stage
    std::vector<double> next(n);
    for (std::size_t k = 0; k < half; ++k) {
      const double c = v[half + k] * factor;
      for (std::size_t t = 0; t < block; ++t) {
        next[2 * k * block + t] = out[2 * k * block + t] + c;
        next[(2 * k + 1) * block + t] = out[(2 * k + 1) * block + t] - c;
      }
    }
    out = next;
  }
  v = out;
}

// apply a 1-D transform along one axis of the row-major d-cube
template <class Fn>
void transform_axis(std::vector<double>& data, int d, int level, int axis, Fn&& fn) {
  const std::size_t n = std::size_t{1} << level;
  std::size_t stride = 1;
  for (int a = d - 1; a > axis; --a) stride *= n;
  const std::size_t block = stride * n;
  std::vector<double> line(n);
  for (std::size_t base = 0; base < data.size(); base += block) {
    for (std::size_t off = 0; off < stride; ++off) {
      for (std::size_t t = 0; t < n; ++t) line[t] = data[base + off + t * stride];
      fn(line);
      for (std::size_t t = 0; t < n; ++t) data[base + off + t * stride] = line[t];
    }
  }
}

DyadicAxisIndex axis_from_flat(std::size_t b) {
  if (b == 0) return DyadicAxisIndex::zero();
  int j = 0;
  while ((std::size_t{2} << j) <= b) ++j;
  return DyadicAxisIndex::interval(j, static_cast<std::int64_t>(b - (std::size_t{1} << j)));
}

std::size_t axis_to_flat(const DyadicAxisIndex& a) {
  if (a.is_zero()) return 0;
  return (std::size_t{1} << a.level()) + static_cast<std::size_t>(a.offset());
}

}  // namespace

StepFunction::StepFunction(int d_in, int level_in, std::vector<double> v)
    : d(d_in), level(level_in), values(std::move(v)) {
  if (d < 1 || level < 0) throw ParamError("invalid step function shape");
  std::size_t expect = 1;
  for (int a = 0; a < d; ++a) expect <<= level;
  if (values.size() != expect) throw ParamError("step function value count mismatch");
}

double StepFunction::l2_norm() const {
  double acc = 0.0;
  for (double v : values) acc += v * v;
  return std::sqrt(acc * cell_volume());
}

double StepFunction::max_abs_diff(const StepFunction& o) const {
  if (d != o.d || level != o.level) throw ParamMismatchError("step function shape mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    m = std::max(m, std::abs(values[i] - o.values[i]));
  }
  return m;
}

int HaarExpansion::min_grid_level() const {
  int lev = 0;
  for (const auto& [I, v] : coeffs.entries()) {
    for (const auto& a : I.axes()) {
      if (!a.is_zero()) lev = std::max(lev, a.level() + 1);
    }
  }
  return lev;
}

HaarExpansion haar_coefficients(const StepFunction& f, double p) {
  std::vector<double> data = f.values;
  for (int a = 0; a < f.d; ++a) {
    transform_axis(data, f.d, f.level, a, [&](std::vector<double>& line) { analyze_1d(line, p); });
  }

  HaarExpansion out;
  out.p = p;
  out.d = f.d;
  out.coeffs = FpqVector(FpqParams(p, 2.0, f.d));
  const std::size_t n = std::size_t{1} << f.level;
  std::vector<std::size_t> idx(static_cast<std::size_t>(f.d), 0);
  for (std::size_t flat = 0; flat < data.size(); ++flat) {
    if (data[flat] != 0.0) {
      std::size_t rem = flat;
      std::vector<DyadicAxisIndex> axes(static_cast<std::size_t>(f.d));
      for (int a = f.d - 1; a >= 0; --a) {
        axes[static_cast<std::size_t>(a)] = axis_from_flat(rem % n);
        rem /= n;
      }
      out.coeffs.set(Rectangle(std::move(axes)), data[flat]);
    }
  }
  return out;
}

StepFunction haar_reconstruct(const HaarExpansion& e, int level) {
  if (level < e.min_grid_level()) throw ParamError("grid level does not resolve the expansion");
  const std::size_t n = std::size_t{1} << level;
  std::size_t total = 1;
  for (int a = 0; a < e.d; ++a) total *= n;
  std::vector<double> data(total, 0.0);

  for (const auto& [I, v] : e.coeffs.entries()) {
    std::size_t flat = 0;
    for (int a = 0; a < e.d; ++a) {
      flat = flat * n + axis_to_flat(I.axis(a));
    }
    data[flat] = v;
  }
  for (int a = 0; a < e.d; ++a) {
    transform_axis(data, e.d, level, a, [&](std::vector<double>& line) { synthesize_1d(line, e.p); });
  }
  return StepFunction(e.d, level, std::move(data));
}

double haar_lp_norm(const HaarExpansion& e) { return fpq_norm(e.coeffs); }

}  // namespace wcga
