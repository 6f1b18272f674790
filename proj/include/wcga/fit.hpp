#pragma once

#include <utility>
#include <vector>

namespace wcga {

// Ordinary least squares on log-transformed data.
struct FitResult {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  std::vector<std::pair<double, double>> points;  // the (log x, log y) pairs used
};

// Fits log y against log x.  Points whose x falls in the lowest
// drop_low_fraction of the log-x range are discarded as transient; at least
// four points must survive.
FitResult fit_loglog(const std::vector<std::pair<double, double>>& xy,
                     double drop_low_fraction = 0.25);

// Plain OLS on the given (x, y) pairs.
FitResult fit_linear(const std::vector<std::pair<double, double>>& xy);

}  // namespace wcga
