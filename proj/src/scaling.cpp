#include "volscale/scaling.hpp"

#include <cmath>
#include <limits>

#include "volscale/errors.hpp"
#include "volscale/fitting.hpp"

namespace volscale {

InstrumentSummary summarize(const VolumeSeries& series, std::string id) {
    if (series.empty()) throw DataError("summarize: empty series");
    InstrumentSummary s;
    s.id = std::move(id);
    s.dt = series.dt;
    s.n_bins = series.size();
    double mean = 0.0;
    for (double v : series.values) mean += v;
    mean /= static_cast<double>(series.size());
    double var = 0.0;
    for (double v : series.values) var += (v - mean) * (v - mean);
    s.mean_volume = mean;
    s.sd_volume = std::sqrt(var / static_cast<double>(series.size()));
    return s;
}

ScalingFit fit_taylor(const std::vector<InstrumentSummary>& summaries) {
    if (summaries.empty()) throw DataError("taylor: no instruments");
    const Scale dt = summaries.front().dt;
    std::vector<double> means, sds;
    int excluded = 0;
    for (const auto& s : summaries) {
        if (!(s.dt == dt))
            throw ConfigError("taylor: summaries must share one dt (got " +
                              dt.to_string() + " and " + s.dt.to_string() + ")");
        if (!(s.mean_volume > 0.0))
            throw DataError("taylor: non-positive mean volume for '" + s.id + "'");
        if (s.sd_volume == 0.0) {
            ++excluded;
            continue;
        }
        means.push_back(s.mean_volume);
        sds.push_back(s.sd_volume);
    }
    if (means.size() < 3)
        throw DataError("taylor: fewer than 3 instruments with nonzero dispersion");

    ScalingFit out;
    out.kind = "taylor";
    out.n_excluded = excluded;
    try {
        const auto fit = loglog_fit(means, sds);
        out.exponent = fit.slope;
        out.intercept = fit.intercept;
        out.se = fit.slope_se;
        out.r2 = fit.r2;
        out.n = fit.n;
    } catch (const DataError&) {
        throw DataError("taylor: no cross-sectional variation in mean volume");
    }
    out.dt_minutes = 0.0; // unknown here; caller sets trading minutes
    return out;
}

ScalingFit fit_beta_trend(const std::vector<ScalingFit>& taylor_fits) {
    std::vector<double> dts, betas;
    for (const auto& f : taylor_fits) {
        if (!(f.dt_minutes > 0.0))
            throw ConfigError("beta trend: every fit needs dt_minutes set");
        dts.push_back(f.dt_minutes);
        betas.push_back(f.exponent);
    }
    if (dts.size() < 3) throw DataError("beta trend: need at least 3 time scales");
    double lo = dts.front(), hi = dts.front();
    for (double d : dts) {
        lo = std::min(lo, d);
        hi = std::max(hi, d);
    }
    if (hi < 10.0 * lo)
        throw ConfigError("beta trend: dt grid must span at least one decade");

    const auto fit = semilog_fit(dts, betas);
    ScalingFit out;
    out.kind = "beta-trend";
    out.exponent = fit.slope;     // gamma
    out.intercept = fit.intercept; // beta at dt = 1 min
    out.se = fit.slope_se;
    out.r2 = fit.r2;
    out.n = fit.n;
    return out;
}

ScalingFit fit_hurst_vs_volume(const std::vector<std::pair<double, double>>& hurst_and_mean,
                               std::string label) {
    if (hurst_and_mean.size() < 3)
        throw DataError("hurst-vs-volume: need at least 3 instruments");
    std::vector<double> means, hs;
    for (const auto& [h, v] : hurst_and_mean) {
        hs.push_back(h);
        means.push_back(v);
    }
    ScalingFit out;
    out.kind = label.empty() ? "hurst-vs-volume" : std::move(label);
    try {
        const auto fit = semilog_fit(means, hs);
        out.exponent = fit.slope; // gamma
        out.intercept = fit.intercept;
        out.se = fit.slope_se;
        out.r2 = fit.r2;
        out.n = fit.n;
    } catch (const DataError&) {
        throw DataError("hurst-vs-volume: no cross-sectional variation in mean volume");
    }
    return out;
}

GammaReport gamma_consistency(const ScalingFit& beta_trend,
                              const std::vector<ScalingFit>& hurst_fits) {
    GammaReport rep;
    rep.beta_trend = beta_trend;
    for (const auto& hf : hurst_fits) {
        GammaComparison c;
        c.label = hf.kind;
        c.gamma_hurst = hf.exponent;
        c.gamma_hurst_se = hf.se;
        c.discrepancy = std::abs(beta_trend.exponent - hf.exponent);
        const double denom = std::sqrt(beta_trend.se * beta_trend.se + hf.se * hf.se);
        c.z = denom > 0.0 ? c.discrepancy / denom
                          : (c.discrepancy == 0.0 ? 0.0
                                                  : std::numeric_limits<double>::infinity());
        rep.comparisons.push_back(std::move(c));
    }
    return rep;
}

} // namespace volscale
