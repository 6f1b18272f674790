#pragma once

#include <cmath>
#include <vector>

#include "wcga/fpq.hpp"

namespace wcga {

// Piecewise-constant function on the uniform dyadic grid of [0,1]^d with
// 2^level cells per axis, values stored row-major (last axis contiguous).
struct StepFunction {
  int d = 1;
  int level = 0;
  std::vector<double> values;

  StepFunction() = default;
  StepFunction(int d_in, int level_in, std::vector<double> v);

  std::size_t cell_count() const { return values.size(); }
  double cell_volume() const { return std::exp2(static_cast<double>(-level * d)); }

  double l2_norm() const;
  double max_abs_diff(const StepFunction& o) const;
};

// Finite expansion over the d-variate Haar system normalized in L^p; the
// coefficient sequence lives in f_{p,2} over rectangles whose axes may be the
// constant direction.
struct HaarExpansion {
  double p = 2.0;
  int d = 1;
  FpqVector coeffs;  // params (p, 2, d)

  int min_grid_level() const;  // smallest level that resolves every coefficient
};

// c_I(f) = <f, H_{I,p'}>, computed exactly on grid cells
HaarExpansion haar_coefficients(const StepFunction& f, double p);

// sum_I c_I H_{I,p} evaluated on the uniform grid at the given level
StepFunction haar_reconstruct(const HaarExpansion& e, int level);

// Littlewood-Paley norm of f: the f_{p,2} norm of its Haar coefficients
double haar_lp_norm(const HaarExpansion& e);

}  // namespace wcga
