#include <doctest.h>

#include <cmath>
#include <vector>

#include "support.hpp"
#include "volscale/errors.hpp"
#include "volscale/fluctuation.hpp"
#include "volscale/intraday.hpp"
#include "volscale/scaling.hpp"
#include "volscale/synth.hpp"

using namespace volscale;

namespace {

InstrumentSummary summary_of(std::string id, double mean, double sd,
                             Scale dt = Scale::minutes(1)) {
    InstrumentSummary s;
    s.id = std::move(id);
    s.dt = dt;
    s.mean_volume = mean;
    s.sd_volume = sd;
    s.n_bins = 100;
    return s;
}

} // namespace

TEST_CASE("summarize computes mean and population sigma") {
    VolumeSeries s = wrap_sequence({1.0, 3.0}, SessionSpec::defaults());
    const auto sum = summarize(s, "a");
    CHECK(sum.mean_volume == 2.0);
    CHECK(sum.sd_volume == 1.0);

    VolumeSeries c = wrap_sequence(std::vector<double>(50, 4.0), SessionSpec::defaults());
    CHECK(summarize(c).sd_volume == 0.0);

    VolumeSeries e;
    CHECK_THROWS_AS(summarize(e), DataError);
}

TEST_CASE("deseasonalized series summarizes to unit mean") {
    const auto series = testsupport::pattern_modulated_volume(10, 0.7, 1.0, 17);
    const auto adj = deseasonalize(series, compute_pattern(series));
    CHECK(std::abs(summarize(adj).mean_volume - 1.0) < 1e-10);
}

TEST_CASE("exact fluctuation-scaling law is recovered with zero error") {
    std::vector<InstrumentSummary> sums;
    for (int j = 0; j < 10; ++j) {
        const double mean = std::pow(10.0, 2.0 + 0.2 * j);
        sums.push_back(summary_of("i" + std::to_string(j), mean, std::pow(mean, 0.75)));
    }
    const auto fit = fit_taylor(sums);
    CHECK(fit.exponent == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(fit.se == doctest::Approx(0.0).epsilon(1e-10));
    CHECK(fit.n == 10);
}

TEST_CASE("degenerate cross sections are rejected") {
    std::vector<InstrumentSummary> same{summary_of("a", 100, 10), summary_of("b", 100, 10),
                                        summary_of("c", 100, 10)};
    CHECK_THROWS_WITH_AS(fit_taylor(same), doctest::Contains("no cross-sectional"),
                         DataError);

    std::vector<InstrumentSummary> few{summary_of("a", 100, 10), summary_of("b", 200, 0),
                                       summary_of("c", 300, 0), summary_of("d", 400, 12)};
    CHECK_THROWS_AS(fit_taylor(few), DataError); // only 2 left after exclusions

    std::vector<InstrumentSummary> mixed_dt{summary_of("a", 100, 10),
                                            summary_of("b", 200, 20),
                                            summary_of("c", 300, 30, Scale::minutes(5))};
    CHECK_THROWS_AS(fit_taylor(mixed_dt), ConfigError);
}

TEST_CASE("zero-dispersion instruments are excluded but counted") {
    std::vector<InstrumentSummary> sums{summary_of("a", 100, 10), summary_of("b", 200, 15),
                                        summary_of("c", 400, 21),
                                        summary_of("flat", 300, 0)};
    const auto fit = fit_taylor(sums);
    CHECK(fit.n == 3);
    CHECK(fit.n_excluded == 1);
}

TEST_CASE("planted universe recovers the fluctuation-scaling exponent") {
    UniverseSpec spec;
    spec.beta = 0.75;
    spec.n_instruments = 20;
    spec.length = 1 << 12;
    spec.seed = 6;
    std::vector<InstrumentSummary> sums;
    for (const auto& inst : gen_taylor_universe(spec)) {
        const auto series = wrap_sequence(inst.values, SessionSpec::defaults());
        sums.push_back(summarize(series, inst.id));
    }
    const auto fit = fit_taylor(sums);
    CHECK(fit.exponent > 0.71);
    CHECK(fit.exponent < 0.79);
}

TEST_CASE("fluctuation scaling is invariant under a common volume rescale") {
    UniverseSpec spec;
    spec.n_instruments = 12;
    spec.length = 1 << 10;
    spec.seed = 9;
    const auto insts = gen_taylor_universe(spec);
    std::vector<InstrumentSummary> a, b;
    for (const auto& inst : insts) {
        auto scaled = inst.values;
        for (auto& v : scaled) v *= 42.0;
        a.push_back(summarize(wrap_sequence(inst.values, SessionSpec::defaults()), inst.id));
        b.push_back(summarize(wrap_sequence(scaled, SessionSpec::defaults()), inst.id));
    }
    CHECK(std::abs(fit_taylor(a).exponent - fit_taylor(b).exponent) < 1e-9);
}

TEST_CASE("exponent trend over time scales") {
    SUBCASE("exact line is recovered to machine precision") {
        std::vector<ScalingFit> fits;
        for (double dt : {1.0, 10.0, 120.0, 1200.0, 4800.0}) {
            ScalingFit f;
            f.kind = "taylor";
            f.exponent = 0.7 + 0.059 * std::log10(dt);
            f.dt_minutes = dt;
            fits.push_back(f);
        }
        const auto trend = fit_beta_trend(fits);
        CHECK(std::abs(trend.exponent - 0.059) < 1e-12);
        CHECK(std::abs(trend.intercept - 0.7) < 1e-12);
    }
    SUBCASE("constant exponent gives zero slope") {
        std::vector<ScalingFit> fits;
        for (double dt : {1.0, 10.0, 100.0}) {
            ScalingFit f;
            f.exponent = 0.8;
            f.dt_minutes = dt;
            fits.push_back(f);
        }
        CHECK(fit_beta_trend(fits).exponent == doctest::Approx(0.0));
    }
    SUBCASE("day scales convert to trading minutes") {
        // {1m, 120m, 20d} with 240 trading minutes per day; oracle: 20d = 4800m
        const int mpd = SessionSpec::defaults().minutes_per_day();
        CHECK(Scale::days(20).trading_minutes(mpd) == 4800);
        std::vector<ScalingFit> fits;
        for (const Scale dt : {Scale::minutes(1), Scale::minutes(120), Scale::days(20)}) {
            ScalingFit f;
            f.dt_minutes = dt.trading_minutes(mpd);
            f.exponent = 0.7 + 0.059 * std::log10(f.dt_minutes);
            fits.push_back(f);
        }
        const auto trend = fit_beta_trend(fits);
        CHECK(std::abs(trend.exponent - 0.059) < 1e-12);
    }
    SUBCASE("validation") {
        ScalingFit f;
        f.dt_minutes = 1.0;
        CHECK_THROWS_AS(fit_beta_trend({f, f}), DataError);
        std::vector<ScalingFit> narrow(3, f);
        narrow[1].dt_minutes = 2.0;
        narrow[2].dt_minutes = 5.0;
        CHECK_THROWS_AS(fit_beta_trend(narrow), ConfigError); // under one decade
    }
}

TEST_CASE("hurst-vs-volume fits") {
    SUBCASE("exact logarithmic relation") {
        std::vector<std::pair<double, double>> pairs;
        for (double v : {1e2, 1e3, 1e4, 1e5})
            pairs.push_back({0.6 + 0.06 * std::log10(v), v});
        const auto fit = fit_hurst_vs_volume(pairs);
        CHECK(fit.exponent == doctest::Approx(0.06).epsilon(1e-12));
    }
    SUBCASE("equal mean volumes are degenerate") {
        std::vector<std::pair<double, double>> pairs{{0.8, 100}, {0.9, 100}, {0.85, 100}};
        CHECK_THROWS_WITH_AS(fit_hurst_vs_volume(pairs),
                             doctest::Contains("no cross-sectional"), DataError);
    }
    SUBCASE("graded long-memory universe recovers the planted slope") {
        // 22 instruments, H_j = 0.6 + 0.06 log10(mean_j), estimated per series
        std::vector<std::pair<double, double>> pairs;
        const auto session = SessionSpec::defaults();
        for (int j = 0; j < 22; ++j) {
            const double mean = std::pow(10.0, 2.0 + 2.0 * j / 21.0);
            const double planted = 0.6 + 0.06 * std::log10(mean);
            auto x = gen_fgn(planted, 1 << 13, derive_seed(404, j));
            for (auto& v : x) v = mean * (1.0 + 0.2 * v);
            const auto series = wrap_sequence(std::move(x), session);
            const auto grid = make_scale_grid(series.size());
            pairs.push_back({dfa_hurst(series.values, grid).fit.slope,
                             summarize(series).mean_volume});
        }
        const auto fit = fit_hurst_vs_volume(pairs);
        CHECK(std::abs(fit.exponent - 0.06) < 2.0 * fit.se);
    }
}

TEST_CASE("gamma consistency report") {
    ScalingFit beta;
    beta.kind = "beta-trend";
    beta.exponent = 0.059;
    beta.se = 0.001;

    ScalingFit h1;
    h1.kind = "hurst-vs-volume-orig";
    h1.exponent = 0.06;
    h1.se = 0.03;

    const auto rep = gamma_consistency(beta, {h1});
    REQUIRE(rep.comparisons.size() == 1);
    CHECK(rep.comparisons[0].discrepancy == doctest::Approx(0.001).epsilon(1e-9));
    CHECK(rep.comparisons[0].z == doctest::Approx(0.0333).epsilon(1e-2));

    const auto same = gamma_consistency(beta, {beta});
    CHECK(same.comparisons[0].discrepancy == 0.0);
    CHECK(same.comparisons[0].z == 0.0);
}

TEST_CASE("a universe with matching planted slopes reports small z") {
    // both relations planted with slope 0.06 plus mild noise
    std::vector<ScalingFit> taylor_fits;
    for (double dt : {1.0, 5.0, 30.0, 240.0, 4800.0}) {
        ScalingFit f;
        f.exponent = 0.7 + 0.06 * std::log10(dt) + 1e-4 * std::sin(dt);
        f.dt_minutes = dt;
        taylor_fits.push_back(f);
    }
    std::vector<std::pair<double, double>> pairs;
    for (int j = 0; j < 20; ++j) {
        const double v = std::pow(10.0, 2.0 + j * 0.1);
        pairs.push_back({0.6 + 0.06 * std::log10(v) + 1e-3 * std::cos(j), v});
    }
    const auto rep = gamma_consistency(fit_beta_trend(taylor_fits),
                                       {fit_hurst_vs_volume(pairs)});
    CHECK(rep.comparisons[0].z < 2.0);
}
