#include "volscale/intraday.hpp"

#include <string>

#include "volscale/errors.hpp"

namespace volscale {

namespace {

// Bin-of-day index per value. Bins are stored day-major in slot order, so
// the slot is the position within the current day run.
std::vector<int> slots_of(const VolumeSeries& s) {
    std::vector<int> slots(s.size());
    int slot = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i > 0 && s.day[i] != s.day[i - 1]) slot = 0;
        slots[i] = slot++;
    }
    return slots;
}

} // namespace

IntradayPattern compute_pattern(const VolumeSeries& series) {
    const int bpd = series.bins_per_day();
    if (series.empty()) throw DataError("pattern: empty series");

    std::vector<double> sum(bpd, 0.0);
    std::vector<int> count(bpd, 0);
    std::vector<int> minute(bpd, -1);
    const auto slots = slots_of(series);
    for (std::size_t i = 0; i < series.size(); ++i) {
        const int b = slots[i];
        if (b >= bpd)
            throw DataError("pattern: day with more than " + std::to_string(bpd) + " bins");
        sum[b] += series.values[i];
        ++count[b];
        if (minute[b] < 0) minute[b] = series.minute[i];
    }

    IntradayPattern pat;
    pat.dt = series.dt;
    pat.minutes_per_day = series.minutes_per_day;
    pat.values.resize(bpd);
    pat.minute.assign(minute.begin(), minute.end());
    pat.n_days = count.empty() ? 0 : count[bpd - 1];
    for (int b = 0; b < bpd; ++b) {
        if (count[b] < 2)
            throw DataError("pattern: series covers fewer than 2 full days");
        pat.values[b] = sum[b] / count[b];
        if (pat.values[b] == 0.0)
            throw DataError("pattern: zero mean volume at minute " +
                            std::to_string(minute[b]) + " (divisor would be zero)");
    }
    return pat;
}

IntradayPattern aggregate_pattern(const IntradayPattern& src, Scale dt) {
    if (!dt.is_intraday() || !src.dt.is_intraday())
        throw ConfigError("aggregate_pattern: intraday scales only");
    if (dt.count % src.dt.count != 0)
        throw ConfigError("aggregate_pattern: target dt " + dt.to_string() +
                          " is not a multiple of source dt " + src.dt.to_string());
    if (src.minutes_per_day % dt.count != 0)
        throw ConfigError("dt " + dt.to_string() + " does not divide " +
                          std::to_string(src.minutes_per_day) + " minutes per day");
    const std::size_t k = static_cast<std::size_t>(dt.count / src.dt.count);

    IntradayPattern out;
    out.dt = dt;
    out.minutes_per_day = src.minutes_per_day;
    out.n_days = src.n_days;
    for (std::size_t i = 0; i + k <= src.size(); i += k) {
        double sum = 0.0;
        for (std::size_t j = 0; j < k; ++j) sum += src.values[i + j];
        out.values.push_back(sum);
        out.minute.push_back(src.minute[i]);
    }
    return out;
}

IntradayPattern average_patterns(const std::vector<IntradayPattern>& patterns) {
    if (patterns.empty()) throw DataError("average_patterns: no patterns");
    IntradayPattern out = patterns.front();
    for (std::size_t p = 1; p < patterns.size(); ++p) {
        const auto& q = patterns[p];
        if (q.size() != out.size() || q.dt != out.dt)
            throw ConfigError("average_patterns: patterns on different grids");
        for (std::size_t i = 0; i < out.size(); ++i) out.values[i] += q.values[i];
    }
    for (auto& v : out.values) v /= static_cast<double>(patterns.size());
    return out;
}

VolumeSeries deseasonalize(const VolumeSeries& series, const IntradayPattern& pattern) {
    const int bpd = series.bins_per_day();
    if (pattern.size() != static_cast<std::size_t>(bpd) || pattern.dt != series.dt ||
        pattern.minutes_per_day != series.minutes_per_day)
        throw ConfigError("deseasonalize: pattern length mismatch (pattern " +
                          std::to_string(pattern.size()) + " bins, series " +
                          std::to_string(bpd) + " bins per day)");

    VolumeSeries out = series;
    const auto slots = slots_of(series);
    for (std::size_t i = 0; i < series.size(); ++i)
        out.values[i] = series.values[i] / pattern.values[slots[i]];
    return out;
}

} // namespace volscale
