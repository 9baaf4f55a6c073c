#pragma once

#include <vector>

#include "volscale/series.hpp"

namespace volscale {

/// Mean volume per bin-of-day across trading days. Usable as a divisor,
/// so every value must be positive.
struct IntradayPattern {
    Scale dt = Scale::minutes(1);
    int minutes_per_day = 240;
    std::vector<double> values;
    std::vector<int> minute; // wall-clock minute of each bin start
    int n_days = 0;          // days averaged (full days)

    std::size_t size() const { return values.size(); }
};

/// Per-bin-of-day mean over days. The series must cover at least two full
/// days; a zero mean at any bin is an error (the pattern is a divisor).
IntradayPattern compute_pattern(const VolumeSeries& series);

/// Coarser pattern from a finer one: sums groups of dt/src.dt bins.
IntradayPattern aggregate_pattern(const IntradayPattern& src, Scale dt);

/// Cross-instrument average pattern (all patterns on the same grid).
IntradayPattern average_patterns(const std::vector<IntradayPattern>& patterns);

/// Divides each bin by the pattern value for its bin-of-day. When the
/// pattern comes from the same series, the per-bin-of-day mean of the
/// result is 1 and the operation is idempotent.
VolumeSeries deseasonalize(const VolumeSeries& series, const IntradayPattern& pattern);

} // namespace volscale
