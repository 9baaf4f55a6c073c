#include "volscale/io.hpp"

#include <cstdio>
#include <fstream>

#include "volscale/errors.hpp"

namespace volscale {

std::string format_sig(double value, int significant_digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", significant_digits, value);
    return buf;
}

std::string format_full(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    // prefer the shorter form when it round-trips
    char probe[64];
    std::snprintf(probe, sizeof probe, "%.15g", value);
    double back = 0.0;
    if (std::sscanf(probe, "%lf", &back) == 1 && back == value) return probe;
    return buf;
}

void write_volume_series(const std::filesystem::path& path, const VolumeSeries& series) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path.string());
    out << "# volume-series v1\n";
    out << "# dt " << series.dt.to_string() << " minutes_per_day "
        << series.minutes_per_day << "\n";
    out << "day,minute,volume\n";
    for (std::size_t i = 0; i < series.size(); ++i)
        out << series.day[i] << ',' << series.minute[i] << ','
            << format_full(series.values[i]) << '\n';
    if (!out) throw Error("write failed for " + path.string());
}

VolumeSeries read_volume_series(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot read " + path.string());
    VolumeSeries s;
    std::string line;
    bool have_meta = false;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') {
            char dt_buf[32];
            int mpd = 0;
            if (std::sscanf(line.c_str(), "# dt %31s minutes_per_day %d", dt_buf,
                            &mpd) == 2) {
                s.dt = Scale::parse(dt_buf);
                s.minutes_per_day = mpd;
                have_meta = true;
            }
            continue;
        }
        if (line.rfind("day,", 0) == 0) continue; // column header
        int day = 0, minute = 0;
        double volume = 0.0;
        if (std::sscanf(line.c_str(), "%d,%d,%lf", &day, &minute, &volume) != 3)
            throw DataError(path.string() + ":" + std::to_string(line_no) +
                            ": bad series row '" + line + "'");
        s.day.push_back(day);
        s.minute.push_back(minute);
        s.values.push_back(volume);
    }
    if (!have_meta)
        throw DataError(path.string() + ": missing '# dt ...' metadata line");
    return s;
}

void write_pattern(const std::filesystem::path& path, const IntradayPattern& pattern,
                   int precision) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path.string());
    out << "# intraday-pattern v1\n";
    out << "# dt " << pattern.dt.to_string() << " n_days " << pattern.n_days << "\n";
    out << "minute_of_day,mean_volume\n";
    for (std::size_t i = 0; i < pattern.size(); ++i)
        out << pattern.minute[i] << ',' << format_sig(pattern.values[i], precision)
            << '\n';
    if (!out) throw Error("write failed for " + path.string());
}

} // namespace volscale
