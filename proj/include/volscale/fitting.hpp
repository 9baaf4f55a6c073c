#pragma once

#include <span>

namespace volscale {

/// Ordinary least squares y = intercept + slope * x.
struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    double slope_se = 0.0; // from residual variance
    double r2 = 0.0;
    int n = 0;
};

/// OLS over the raw coordinates; needs >= 3 points and x spread.
LinearFit linear_fit(std::span<const double> x, std::span<const double> y);

/// OLS on (log10 x, log10 y); the slope is a scaling exponent.
/// All values must be positive.
LinearFit loglog_fit(std::span<const double> x, std::span<const double> y);

/// OLS of y against log10 x (x positive).
LinearFit semilog_fit(std::span<const double> x, std::span<const double> y);

} // namespace volscale
