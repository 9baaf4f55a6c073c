#include <doctest.h>

#include <cmath>

#include "support.hpp"
#include "volscale/errors.hpp"
#include "volscale/intraday.hpp"
#include "volscale/synth.hpp"

using namespace volscale;

namespace {

VolumeSeries two_day_series(const std::vector<double>& day0,
                            const std::vector<double>& day1) {
    std::vector<double> all = day0;
    all.insert(all.end(), day1.begin(), day1.end());
    return wrap_sequence(std::move(all), SessionSpec::defaults());
}

} // namespace

TEST_CASE("pattern is the per-minute mean over days") {
    std::vector<double> d0(240, 1.0), d1(240, 1.0);
    d0[5] = 10.0;
    d1[5] = 30.0;
    const auto pat = compute_pattern(two_day_series(d0, d1));
    CHECK(pat.values[5] == 20.0);
    CHECK(pat.values[0] == 1.0);
    CHECK(pat.n_days == 2);
    CHECK(pat.minute[0] == 570);
}

TEST_CASE("constant series gives a constant pattern") {
    const auto pat = compute_pattern(
        two_day_series(std::vector<double>(240, 3.5), std::vector<double>(240, 3.5)));
    for (double v : pat.values) CHECK(v == 3.5);
}

TEST_CASE("a 13:00 spike in the data survives into the pattern") {
    auto series = testsupport::pattern_modulated_volume(8, 0.8, 0.5, 2024);
    const auto pat = compute_pattern(series);
    CHECK(pat.values[120] > pat.values[119]);
    CHECK(pat.values[120] > pat.values[121]);
    CHECK(pat.minute[120] == 780);
}

TEST_CASE("zero-mean minute is an error naming the minute") {
    std::vector<double> d0(240, 1.0), d1(240, 1.0);
    d0[7] = 0.0;
    d1[7] = 0.0;
    CHECK_THROWS_WITH_AS(compute_pattern(two_day_series(d0, d1)),
                         doctest::Contains("577"), DataError);
}

TEST_CASE("fewer than two full days is an error") {
    auto series = wrap_sequence(std::vector<double>(300, 1.0), SessionSpec::defaults());
    CHECK_THROWS_AS(compute_pattern(series), DataError);
}

TEST_CASE("deseasonalization divides by the pattern") {
    std::vector<double> d0(240, 10.0), d1(240, 30.0);
    const auto series = two_day_series(d0, d1);
    const auto pat = compute_pattern(series); // every minute averages to 20
    const auto adj = deseasonalize(series, pat);
    CHECK(adj.values[0] == doctest::Approx(0.5));
    CHECK(adj.values[240] == doctest::Approx(1.5));
}

TEST_CASE("adjusted series has unit mean per minute and overall") {
    const auto series = testsupport::pattern_modulated_volume(12, 0.75, 1.0, 99);
    const auto adj = deseasonalize(series, compute_pattern(series));
    const int bpd = adj.bins_per_day();
    std::vector<double> mean(bpd, 0.0);
    std::vector<int> count(bpd, 0);
    for (std::size_t i = 0; i < adj.size(); ++i) {
        mean[i % bpd] += adj.values[i];
        ++count[i % bpd];
    }
    double global = 0.0;
    for (int b = 0; b < bpd; ++b) {
        CHECK(std::abs(mean[b] / count[b] - 1.0) < 1e-10);
        global += mean[b];
    }
    CHECK(std::abs(global / static_cast<double>(adj.size()) - 1.0) < 1e-10);
}

TEST_CASE("deseasonalization is idempotent") {
    const auto series = testsupport::pattern_modulated_volume(10, 0.7, 1.0, 5);
    const auto once = deseasonalize(series, compute_pattern(series));
    const auto twice = deseasonalize(once, compute_pattern(once));
    for (std::size_t i = 0; i < once.size(); ++i)
        CHECK(std::abs(twice.values[i] - once.values[i]) < 1e-10);
}

TEST_CASE("scaling the raw series leaves the adjusted series unchanged") {
    const auto series = testsupport::pattern_modulated_volume(6, 0.6, 0.8, 8);
    auto scaled = series;
    for (auto& v : scaled.values) v *= 7.25;
    const auto a = deseasonalize(series, compute_pattern(series));
    const auto b = deseasonalize(scaled, compute_pattern(scaled));
    for (std::size_t i = 0; i < a.size(); ++i)
        CHECK(a.values[i] == doctest::Approx(b.values[i]).epsilon(1e-12));
}

TEST_CASE("pattern length mismatch is a configuration error") {
    const auto series = testsupport::pattern_modulated_volume(5, 0.6, 0.5, 3);
    auto pat = compute_pattern(series);
    pat.values.pop_back();
    pat.minute.pop_back();
    CHECK_THROWS_AS(deseasonalize(series, pat), ConfigError);
}

TEST_CASE("coarse patterns sum the fine pattern") {
    const auto series = testsupport::pattern_modulated_volume(5, 0.6, 0.5, 4);
    const auto fine = compute_pattern(series);
    const auto coarse = aggregate_pattern(fine, Scale::minutes(30));
    REQUIRE(coarse.size() == 8);
    double sum = 0.0;
    for (int i = 0; i < 30; ++i) sum += fine.values[i];
    CHECK(coarse.values[0] == doctest::Approx(sum).epsilon(1e-14));
    CHECK(coarse.minute[0] == 570);
}

TEST_CASE("cross-instrument average pattern") {
    std::vector<IntradayPattern> pats;
    for (int k = 1; k <= 3; ++k) {
        std::vector<double> day(240, static_cast<double>(k));
        pats.push_back(compute_pattern(two_day_series(day, day)));
    }
    const auto avg = average_patterns(pats);
    for (double v : avg.values) CHECK(v == doctest::Approx(2.0));
}
