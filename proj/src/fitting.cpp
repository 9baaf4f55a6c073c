#include "volscale/fitting.hpp"

#include <cmath>
#include <vector>

#include "volscale/errors.hpp"

namespace volscale {

LinearFit linear_fit(std::span<const double> x, std::span<const double> y) {
    const std::size_t n = x.size();
    if (n != y.size()) throw ConfigError("fit: x and y lengths differ");
    if (n < 3) throw DataError("fit: need at least 3 points");

    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);

    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = x[i] - mx;
        const double dy = y[i] - my;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if (sxx == 0.0) throw DataError("fit: no cross-sectional variation in x");

    LinearFit f;
    f.n = static_cast<int>(n);
    f.slope = sxy / sxx;
    f.intercept = my - f.slope * mx;

    double ssr = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = y[i] - (f.intercept + f.slope * x[i]);
        ssr += r * r;
    }
    f.slope_se = std::sqrt(ssr / static_cast<double>(n - 2) / sxx);
    f.r2 = syy == 0.0 ? 1.0 : 1.0 - ssr / syy;
    return f;
}

namespace {

std::vector<double> log10_all(std::span<const double> v, const char* axis) {
    std::vector<double> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!(v[i] > 0.0))
            throw DataError(std::string("fit: non-positive ") + axis +
                            " value in a logarithmic fit");
        out[i] = std::log10(v[i]);
    }
    return out;
}

} // namespace

LinearFit loglog_fit(std::span<const double> x, std::span<const double> y) {
    const auto lx = log10_all(x, "x");
    const auto ly = log10_all(y, "y");
    return linear_fit(lx, ly);
}

LinearFit semilog_fit(std::span<const double> x, std::span<const double> y) {
    const auto lx = log10_all(x, "x");
    return linear_fit(lx, y);
}

} // namespace volscale
