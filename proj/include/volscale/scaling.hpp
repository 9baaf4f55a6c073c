#pragma once

#include <optional>
#include <string>
#include <vector>

#include "volscale/series.hpp"

namespace volscale {

/// Per-instrument moments at one time scale, plus Hurst indexes when known.
struct InstrumentSummary {
    std::string id;
    Scale dt = Scale::minutes(1);
    double mean_volume = 0.0;
    double sd_volume = 0.0; // population standard deviation
    std::size_t n_bins = 0;
    std::optional<double> hurst_orig;
    std::optional<double> hurst_adj;
};

/// Arithmetic mean and population standard deviation over all bins.
InstrumentSummary summarize(const VolumeSeries& series, std::string id = {});

/// A fitted scaling law: exponent (slope), intercept, OLS slope standard
/// error and R^2, plus the scale the fit belongs to where applicable.
struct ScalingFit {
    std::string kind;
    double exponent = 0.0;
    double intercept = 0.0;
    double se = 0.0;
    double r2 = 0.0;
    int n = 0;
    double dt_minutes = 0.0;   // for per-dt fits
    int n_excluded = 0;        // instruments dropped (zero sd)
};

/// Cross-sectional fluctuation scaling at one scale: slope of log10 sd
/// against log10 mean across instruments. Instruments with zero sd are
/// excluded (counted); fewer than 3 left, or no spread in the means, is an
/// error.
ScalingFit fit_taylor(const std::vector<InstrumentSummary>& summaries);

/// Trend of the fluctuation-scaling exponent across time scales: OLS of
/// the exponent against log10 of the scale in trading minutes.
ScalingFit fit_beta_trend(const std::vector<ScalingFit>& taylor_fits);

/// OLS of the Hurst index against log10 of the mean volume.
ScalingFit fit_hurst_vs_volume(const std::vector<std::pair<double, double>>& hurst_and_mean,
                               std::string label = {});

/// Side-by-side comparison of the exponent-trend slope with the
/// Hurst-vs-volume slopes. Reports discrepancies in units of combined
/// standard error; no verdict is attached.
struct GammaComparison {
    std::string label;
    double gamma_hurst = 0.0;
    double gamma_hurst_se = 0.0;
    double discrepancy = 0.0; // |gamma_beta - gamma_hurst|
    double z = 0.0;           // discrepancy / sqrt(se_b^2 + se_h^2)
};

struct GammaReport {
    ScalingFit beta_trend;
    std::vector<GammaComparison> comparisons;
};

GammaReport gamma_consistency(const ScalingFit& beta_trend,
                              const std::vector<ScalingFit>& hurst_fits);

} // namespace volscale
