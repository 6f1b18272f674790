#include "wcga/fit.hpp"

#include <algorithm>
#include <cmath>

#include "wcga/errors.hpp"

namespace wcga {

FitResult fit_linear(const std::vector<std::pair<double, double>>& xy) {
  if (xy.size() < 2) throw ParamError("fit needs at least two points");
  const double n = static_cast<double>(xy.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
  for (const auto& [x, y] : xy) {
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    syy += y * y;
  }
  FitResult out;
  const double denom = n * sxx - sx * sx;
  out.slope = (n * sxy - sx * sy) / denom;
  out.intercept = (sy - out.slope * sx) / n;
  const double ss_tot = syy - sy * sy / n;
  double ss_res = 0;
  for (const auto& [x, y] : xy) {
    const double e = y - (out.intercept + out.slope * x);
    ss_res += e * e;
  }
  out.r_squared = ss_tot > 0 ? 1.0 - ss_res / ss_tot : 1.0;
  out.points = xy;
  return out;
}

FitResult fit_loglog(const std::vector<std::pair<double, double>>& xy, double drop_low_fraction) {
  std::vector<std::pair<double, double>> logged;
  logged.reserve(xy.size());
  for (const auto& [x, y] : xy) {
    if (x > 0 && y > 0) logged.emplace_back(std::log(x), std::log(y));
  }
  if (logged.size() < 4) throw ParamError("log-log fit needs at least four positive points");

  double xmin = logged.front().first, xmax = logged.front().first;
  for (const auto& [x, y] : logged) {
    xmin = std::min(xmin, x);
    xmax = std::max(xmax, x);
  }
  const double cut = xmin + drop_low_fraction * (xmax - xmin);
  std::vector<std::pair<double, double>> kept;
  for (const auto& pt : logged) {
    if (pt.first >= cut) kept.push_back(pt);
  }
  if (kept.size() < 4) kept = logged;  // tiny ranges: keep everything
  return fit_linear(kept);
}

}  // namespace wcga
