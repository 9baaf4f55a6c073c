#include "volscale/series.hpp"

#include <charconv>

#include "volscale/errors.hpp"

namespace volscale {

Scale Scale::parse(const std::string& text) {
    if (text.empty()) throw ConfigError("scale: empty");
    std::string digits = text;
    Unit unit = Unit::minutes;
    const char suffix = text.back();
    if (suffix == 'm' || suffix == 'd') {
        digits = text.substr(0, text.size() - 1);
        unit = suffix == 'd' ? Unit::days : Unit::minutes;
    }
    int n = 0;
    auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec != std::errc{} || p != digits.data() + digits.size() || n <= 0)
        throw ConfigError("scale: bad value '" + text + "', expected e.g. 5, 30m or 20d");
    return {unit, n};
}

std::string Scale::to_string() const {
    return std::to_string(count) + (unit == Unit::days ? "d" : "m");
}

int VolumeSeries::bins_per_day() const {
    if (!dt.is_intraday())
        throw ConfigError("bins_per_day is defined for intraday scales only");
    if (dt.count <= 0 || minutes_per_day % dt.count != 0)
        throw ConfigError("dt " + dt.to_string() + " does not divide " +
                          std::to_string(minutes_per_day) + " minutes per day");
    return minutes_per_day / dt.count;
}

VolumeSeries wrap_sequence(std::vector<double> values, const SessionSpec& session) {
    VolumeSeries s;
    s.dt = Scale::minutes(1);
    s.minutes_per_day = session.minutes_per_day();
    const int bpd = s.minutes_per_day;
    s.values = std::move(values);
    s.day.resize(s.values.size());
    s.minute.resize(s.values.size());
    for (std::size_t i = 0; i < s.values.size(); ++i) {
        s.day[i] = static_cast<int>(i) / bpd;
        s.minute[i] = session.wall_minute_of_slot(static_cast<int>(i) % bpd);
    }
    return s;
}

} // namespace volscale
