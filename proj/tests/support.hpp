#pragma once

#include <unistd.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <numbers>
#include <string>
#include <vector>

#include "volscale/series.hpp"
#include "volscale/session.hpp"
#include "volscale/synth.hpp"

namespace testsupport {

// Realistically shaped intraday profile over the default 240-minute day:
// rise-and-fall morning with two mild humps, a jump at the afternoon open,
// then a monotonic rise into the close.
inline std::vector<double> intraday_shape() {
    std::vector<double> shape(240);
    for (int m = 0; m < 120; ++m)
        shape[m] = 0.775 + 0.45 * std::sin(std::numbers::pi * m / 120.0) +
                   0.08 * std::sin(3.0 * std::numbers::pi * m / 120.0);
    for (int m = 120; m < 240; ++m)
        shape[m] = 0.7 + 0.6 * (m - 120) / 119.0;
    shape[120] = 1.9;
    return shape;
}

// Volume-like multi-day series: lognormal noise around a long-memory base,
// multiplied by the intraday profile. Noise dominates the profile, as in
// real 1-minute volume.
inline volscale::VolumeSeries pattern_modulated_volume(int days, double hurst,
                                                       double log_sigma,
                                                       std::uint64_t seed) {
    const auto session = volscale::SessionSpec::defaults();
    const auto shape = intraday_shape();
    const std::size_t n = static_cast<std::size_t>(days) * shape.size();
    auto x = volscale::gen_fgn(hurst, n, seed);
    for (std::size_t i = 0; i < n; ++i)
        x[i] = shape[i % shape.size()] * std::exp(log_sigma * x[i]);
    return volscale::wrap_sequence(std::move(x), session);
}

// Unique scratch directory under the system temp dir; removed on destruction.
class TempDir {
public:
    explicit TempDir(const std::string& tag) {
        static int counter = 0;
        path_ = std::filesystem::temp_directory_path() /
                ("volscale-" + tag + "-" + std::to_string(::getpid()) + "-" +
                 std::to_string(counter++));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    const std::filesystem::path& path() const { return path_; }

private:
    std::filesystem::path path_;
};

inline std::string cli_path() {
    const char* p = std::getenv("VOLSCALE_CLI");
    return p ? p : "";
}

} // namespace testsupport
