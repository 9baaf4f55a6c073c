#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "volscale/session.hpp"

namespace volscale {

/// Aggregation time scale: a number of trading minutes or of whole trading
/// days. Day scales ignore calendar gaps; "20 days" means 20 trading days.
struct Scale {
    enum class Unit { minutes, days };

    Unit unit = Unit::minutes;
    int count = 1;

    static Scale minutes(int n) { return {Unit::minutes, n}; }
    static Scale days(int n) { return {Unit::days, n}; }

    /// Parses "30", "30m" or "20d".
    static Scale parse(const std::string& text);

    bool is_intraday() const { return unit == Unit::minutes; }

    /// The scale expressed in trading minutes (days x minutes_per_day).
    int trading_minutes(int minutes_per_day) const {
        return unit == Unit::minutes ? count : count * minutes_per_day;
    }

    std::string to_string() const;

    friend bool operator==(const Scale&, const Scale&) = default;
};

/// Regularly spaced aggregated volumes. Bins are stored day-major in
/// trading-time order; `day` is the 0-based trading-day ordinal and
/// `minute` the wall-clock minute-of-day at which the bin starts.
struct VolumeSeries {
    Scale dt = Scale::minutes(1);
    int minutes_per_day = 240;
    std::vector<double> values;
    std::vector<int> day;
    std::vector<int> minute;

    std::size_t size() const { return values.size(); }
    bool empty() const { return values.empty(); }

    int bins_per_day() const; // intraday scales only
};

/// Wraps a raw sequence as a 1-minute VolumeSeries with a fabricated
/// calendar (bin i -> day i/bins_per_day), so synthetic signals flow
/// through the same pipeline as ingested data. The final day may be
/// partial when the length is not a multiple of minutes_per_day.
VolumeSeries wrap_sequence(std::vector<double> values, const SessionSpec& session);

} // namespace volscale
