#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "volscale/errors.hpp"
#include "volscale/synth.hpp"

using namespace volscale;

TEST_CASE("generators are pure functions of (spec, seed)") {
    CHECK(gen_fgn(0.8, 2048, 42) == gen_fgn(0.8, 2048, 42));
    CHECK(gen_fgn(0.8, 2048, 42) != gen_fgn(0.8, 2048, 43));
    CHECK(gen_iid_normal(512, 5) == gen_iid_normal(512, 5));
    CHECK(gen_cascade(0.3, 10, 7, true) == gen_cascade(0.3, 10, 7, true));
    const std::vector<double> x{1, 2, 3, 4, 5, 6, 7, 8};
    CHECK(shuffled(x, 9) == shuffled(x, 9));
    CHECK(derive_seed(1, 0) != derive_seed(1, 1));
    CHECK(derive_seed(1, 0) != derive_seed(2, 0));
}

TEST_CASE("fGn at one half is white: negligible lag-1 correlation") {
    const std::size_t n = 1 << 14;
    const auto x = gen_fgn(0.5, n, 101);
    double mean = 0.0;
    for (double v : x) mean += v;
    mean /= static_cast<double>(n);
    double c0 = 0.0, c1 = 0.0;
    for (std::size_t i = 0; i < n; ++i) c0 += (x[i] - mean) * (x[i] - mean);
    for (std::size_t i = 0; i + 1 < n; ++i) c1 += (x[i] - mean) * (x[i + 1] - mean);
    CHECK(std::abs(c1 / c0) < 4.0 / std::sqrt(static_cast<double>(n)));
}

TEST_CASE("fGn sample moments are sane") {
    // the running sum of fGn is fBm, so sd(sample mean) = n^(H-1) exactly
    for (double H : {0.3, 0.5, 0.8}) {
        const std::size_t n = 1 << 14;
        const auto x = gen_fgn(H, n, 2024);
        double mean = 0.0;
        for (double v : x) mean += v;
        mean /= static_cast<double>(n);
        double var = 0.0;
        for (double v : x) var += (v - mean) * (v - mean);
        var /= static_cast<double>(n);
        CHECK(std::abs(mean) < 4.0 * std::pow(static_cast<double>(n), H - 1.0));
        CHECK(var > 0.9);
        CHECK(var < 1.1);
    }
}

TEST_CASE("fGn matches its target autocovariance") {
    const std::size_t n = 1 << 16;
    for (double H : {0.3, 0.8}) {
        const auto x = gen_fgn(H, n, 7);
        double mean = 0.0;
        for (double v : x) mean += v;
        mean /= static_cast<double>(n);
        for (int lag = 0; lag <= 3; ++lag) {
            double c = 0.0;
            for (std::size_t i = 0; i + lag < n; ++i)
                c += (x[i] - mean) * (x[i + lag] - mean);
            c /= static_cast<double>(n - lag);
            CHECK(std::abs(c - fgn_autocovariance(H, lag)) < 0.05);
        }
    }
}

TEST_CASE("fGn parameter validation") {
    CHECK_THROWS_AS(gen_fgn(0.0, 2048, 1), ConfigError);
    CHECK_THROWS_AS(gen_fgn(1.0, 2048, 1), ConfigError);
    CHECK_THROWS_AS(gen_fgn(0.5, 512, 1), ConfigError);
}

TEST_CASE("degenerate cascade is uniform") {
    const auto x = gen_cascade(0.5, 10);
    for (double v : x) CHECK(v == 1.0);
}

TEST_CASE("cascade conserves total mass") {
    const auto x = gen_cascade(0.3, 12);
    REQUIRE(x.size() == 4096);
    double sum = 0.0;
    for (double v : x) sum += v;
    CHECK(sum == doctest::Approx(4096.0).epsilon(1e-9));
    for (double v : x) CHECK(v > 0.0);
    // randomized child order preserves the multiset and the mass
    auto r = gen_cascade(0.3, 12, 99, true);
    std::sort(r.begin(), r.end());
    auto s = x;
    std::sort(s.begin(), s.end());
    CHECK(r == s);
}

TEST_CASE("cascade parameter validation") {
    CHECK_THROWS_AS(gen_cascade(0.0, 10), ConfigError);
    CHECK_THROWS_AS(gen_cascade(1.0, 10), ConfigError);
    CHECK_THROWS_AS(gen_cascade(0.3, 7), ConfigError);
    CHECK_THROWS_AS(gen_cascade(0.3, 25), ConfigError);
}

TEST_CASE("cascade reference spectrum") {
    const double p = 0.3;
    // measure normalization: tau(1) = 0
    CHECK(std::abs(cascade_tau_ref(p, 1.0)) < 1e-15);
    // frozen analytic values for the q in [-4, 4] window
    CHECK(cascade_alpha_ref(p, -4.0) == doctest::Approx(1.697072851971101).epsilon(1e-12));
    CHECK(cascade_alpha_ref(p, 4.0) == doctest::Approx(0.5544659150248641).epsilon(1e-12));
    CHECK(cascade_width_ref(p, -4.0, 4.0) ==
          doctest::Approx(1.1426069369462368).epsilon(1e-12));
    // h_ref is continuous through q = 0
    CHECK(std::abs(cascade_h_ref(p, 1e-7) - cascade_h_ref(p, 0.0)) < 1e-5);
    CHECK(std::abs(cascade_h_ref(p, -1e-7) - cascade_h_ref(p, 0.0)) < 1e-5);
    // and tau = q*h - 1 off q = 0
    CHECK(cascade_h_ref(p, 2.0) * 2.0 - 1.0 ==
          doctest::Approx(cascade_tau_ref(p, 2.0)).epsilon(1e-12));
}

TEST_CASE("shuffle preserves the multiset of values") {
    const auto x = gen_iid_normal(4096, 55);
    const auto y = shuffled(x, 77);
    CHECK(y != x);
    auto xs = x, ys = y;
    std::sort(xs.begin(), xs.end());
    std::sort(ys.begin(), ys.end());
    CHECK(xs == ys);
    CHECK_THROWS_AS(shuffled({}, 1), DataError);
}

TEST_CASE("planted universe has the declared cross-sectional structure") {
    UniverseSpec spec;
    spec.beta = 0.75;
    spec.n_instruments = 8;
    spec.length = 1 << 12;
    spec.seed = 31;
    const auto insts = gen_taylor_universe(spec);
    REQUIRE(insts.size() == 8);
    CHECK(insts.front().planted_mean == doctest::Approx(1e2));
    CHECK(insts.back().planted_mean == doctest::Approx(1e4));
    for (const auto& inst : insts) {
        double mean = 0.0;
        for (double v : inst.values) mean += v;
        mean /= static_cast<double>(inst.values.size());
        CHECK(std::abs(mean - inst.planted_mean) / inst.planted_mean < 0.05);
        for (double v : inst.values) CHECK(v >= 1e-9);
    }
    // independent streams per instrument
    CHECK(insts[0].values != insts[1].values);
}
