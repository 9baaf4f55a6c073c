#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "volscale/fitting.hpp"

namespace volscale {

/// Window sizes for the fluctuation function, approximately log-uniform.
struct ScaleGrid {
    std::vector<int> scales; // ordered, distinct

    int s_min() const { return scales.front(); }
    int s_max() const { return scales.back(); }
    std::size_t size() const { return scales.size(); }

    /// Scales as doubles, for fitting.
    std::vector<double> as_doubles() const;
};

/// n_scales log-spaced integer window sizes in [s_min, s_max], duplicates
/// removed after rounding. s_max defaults to M/4 when passed as 0.
ScaleGrid make_scale_grid(std::size_t series_length, int s_min = 20, int s_max = 0,
                          int n_scales = 30);

/// F_q(s) over a (q, s) grid. For a series with nonzero variance every
/// entry is positive, and F_q(s) is non-decreasing in q at fixed s.
struct FluctuationSurface {
    std::vector<double> q;
    ScaleGrid grid;
    std::vector<double> F; // row-major: F[qi * grid.size() + si]
    int detrend_order = 1;
    std::size_t zero_variance_windows = 0; // excluded from q <= 0 means

    double at(std::size_t qi, std::size_t si) const {
        return F[qi * grid.size() + si];
    }
    std::vector<double> row(std::size_t qi) const;
};

/// The q grid -4..4 in steps of 0.25.
std::vector<double> default_q_grid();

/// Detrended fluctuation function of a series over (q_grid, grid).
///
/// The profile Y(i) = sum_{k<=i}(x_k - mean) is split into floor(M/s)
/// non-overlapping windows from the start and the same number from the
/// end. In each window a polynomial of detrend_order is removed and
/// F^2 = mean squared residual. Then F_q(s) is the order-q/2 power mean
/// of F^2 over the windows, to the power 1/q; at q = 0 the log-average
/// limit exp(0.5 * mean ln F^2) is used. Windows with numerically zero
/// F^2 enter positive moments as zeros and are excluded (and counted)
/// for q <= 0.
FluctuationSurface fluctuation_surface(std::span<const double> series,
                                       std::vector<double> q_grid,
                                       const ScaleGrid& grid, int detrend_order = 1);

/// Generalized Hurst exponents, mass exponents and singularity spectrum
/// from a fluctuation surface.
struct MultifractalResult {
    std::vector<double> q;
    std::vector<double> h;       // loglog slope per q
    std::vector<double> h_se;
    std::vector<double> h_r2;
    std::vector<double> tau;     // q*h(q) - 1
    std::vector<double> alpha;   // h + q*h'
    std::vector<double> f_alpha; // q*(alpha - h) + 1
    double hurst = 0.0;          // h at q = 2 (interpolated if off-grid)
    double hurst_se = 0.0;
    double delta_h = 0.0;        // max h - min h over the q grid
    double delta_alpha = 0.0;    // max alpha - min alpha
    bool alpha_non_monotone = false; // spectrum may be unreliable
    std::size_t zero_variance_windows = 0;
    std::vector<int> scales;
};

MultifractalResult multifractal_analysis(const FluctuationSurface& surface);

/// Plain DFA: F_2(s) and the Hurst index as the log-log slope.
struct DfaResult {
    ScaleGrid grid;
    std::vector<double> f2; // F_2 per scale
    LinearFit fit;          // slope is the Hurst index
};

DfaResult dfa_hurst(std::span<const double> series, const ScaleGrid& grid,
                    int detrend_order = 1);

} // namespace volscale
