#pragma once

#include <filesystem>
#include <string>

#include "volscale/intraday.hpp"
#include "volscale/series.hpp"

namespace volscale {

/// Decimal text with the given number of significant digits.
std::string format_sig(double value, int significant_digits);

/// Shortest-ish exact round-trip decimal text.
std::string format_full(double value);

/// Writes a series as delimited text: two comment lines carrying the
/// scale and the session length, then day,minute,volume rows. Volumes are
/// written with full precision so the file round-trips exactly.
void write_volume_series(const std::filesystem::path& path, const VolumeSeries& series);

VolumeSeries read_volume_series(const std::filesystem::path& path);

/// Two-column pattern export: minute_of_day, mean_volume.
void write_pattern(const std::filesystem::path& path, const IntradayPattern& pattern,
                   int precision = 6);

} // namespace volscale
