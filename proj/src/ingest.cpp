#include "volscale/ingest.hpp"

#include <time.h>

#include <algorithm>
#include <charconv>
#include <cstring>
#include <map>

#include "volscale/errors.hpp"

namespace volscale {

namespace {

std::vector<std::string> split(const std::string& line, char delim) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (true) {
        std::size_t next = line.find(delim, pos);
        out.push_back(line.substr(pos, next == std::string::npos ? std::string::npos
                                                                 : next - pos));
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return out;
}

void trim(std::string& s) {
    while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t'))
        s.pop_back();
    std::size_t i = 0;
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    s.erase(0, i);
}

bool parse_timestamp(const std::string& text, const std::string& fmt, Timestamp& ts) {
    struct tm tm {};
    const char* rest = strptime(text.c_str(), fmt.c_str(), &tm);
    if (rest == nullptr) return false;
    double frac = 0.0;
    if (*rest == '.') {
        ++rest;
        double scale = 0.1;
        if (*rest < '0' || *rest > '9') return false;
        while (*rest >= '0' && *rest <= '9') {
            frac += (*rest - '0') * scale;
            scale *= 0.1;
            ++rest;
        }
    }
    if (*rest != '\0') return false;
    ts.year = tm.tm_year + 1900;
    ts.month = tm.tm_mon + 1;
    ts.day = tm.tm_mday;
    ts.second_of_day = tm.tm_hour * 3600.0 + tm.tm_min * 60.0 + tm.tm_sec + frac;
    return true;
}

bool parse_size(const std::string& text, std::int64_t& size, std::string& reason) {
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || p != text.data() + text.size()) {
        reason = "bad size '" + text + "'";
        return false;
    }
    if (v < 0) {
        reason = "negative size";
        return false;
    }
    size = v;
    return true;
}

} // namespace

std::vector<TradeRecord> parse_trades(std::istream& in, const TradeFormat& fmt,
                                      ParseReport* report) {
    ParseReport local;
    ParseReport& rep = report ? *report : local;
    rep = ParseReport{};

    const int need_cols = std::max(fmt.time_column, fmt.size_column) + 1;
    if (fmt.time_column < 0 || fmt.size_column < 0 ||
        fmt.time_column == fmt.size_column)
        throw ConfigError("trade format: time and size columns must be distinct and >= 0");

    std::vector<TradeRecord> trades;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        trim(line);
        if (line.empty()) continue;
        ++rep.lines_total;

        if (rep.lines_total == 1 && fmt.header == TradeFormat::Header::yes) {
            rep.header_skipped = true;
            continue;
        }
        // In automatic mode a first line whose timestamp field does not
        // parse is the header; anything else on line 1 is a real record.
        const bool may_be_header =
            rep.lines_total == 1 && fmt.header == TradeFormat::Header::automatic;

        auto record_issue = [&](const std::string& reason, bool header_like) {
            if (may_be_header && header_like) {
                rep.header_skipped = true;
                return;
            }
            ++rep.malformed;
            rep.issues.push_back({line_no, reason});
        };

        auto cols = split(line, fmt.delimiter);
        if (static_cast<int>(cols.size()) < need_cols) {
            record_issue("expected at least " + std::to_string(need_cols) + " columns",
                         true);
            continue;
        }
        std::string time_text = cols[fmt.time_column];
        std::string size_text = cols[fmt.size_column];
        trim(time_text);
        trim(size_text);

        TradeRecord rec;
        if (!parse_timestamp(time_text, fmt.time_format, rec.ts)) {
            record_issue("bad timestamp '" + time_text + "'", true);
            continue;
        }
        std::string reason;
        if (!parse_size(size_text, rec.size, reason)) {
            record_issue(reason, false);
            continue;
        }
        trades.push_back(rec);
    }

    rep.records = trades.size();
    rep.empty_input = rep.lines_total == 0;
    std::stable_sort(trades.begin(), trades.end(),
                     [](const TradeRecord& a, const TradeRecord& b) { return a.ts < b.ts; });
    return trades;
}

VolumeSeries aggregate_volume(const std::vector<TradeRecord>& trades, Scale dt,
                              const SessionSpec& session, AggregationReport* report) {
    AggregationReport local;
    AggregationReport& rep = report ? *report : local;
    rep = AggregationReport{};

    const int mpd = session.minutes_per_day();
    if (dt.count <= 0) throw ConfigError("dt must be positive");
    if (dt.is_intraday() && mpd % dt.count != 0)
        throw ConfigError("dt " + dt.to_string() + " does not divide " +
                          std::to_string(mpd) + " minutes per day");

    // Trading-day ordinals cover every date present in the data, whether or
    // not the day has in-session trades; missing days are simply absent.
    std::map<int, int> day_ordinal;
    for (const auto& t : trades) day_ordinal.emplace(t.ts.date_key(), 0);
    int ord = 0;
    for (auto& [key, o] : day_ordinal) o = ord++;
    const int n_days = ord;

    VolumeSeries out;
    out.dt = dt;
    out.minutes_per_day = mpd;

    std::vector<std::int64_t> sums;
    if (dt.is_intraday()) {
        const int bpd = mpd / dt.count;
        sums.assign(static_cast<std::size_t>(n_days) * bpd, 0);
        for (const auto& t : trades) {
            auto slot = session.slot_of_second(t.ts.second_of_day);
            if (!slot) {
                ++rep.discarded_out_of_session;
                continue;
            }
            ++rep.trades_in_session;
            const int d = day_ordinal[t.ts.date_key()];
            sums[static_cast<std::size_t>(d) * bpd + *slot / dt.count] += t.size;
        }
        out.values.reserve(sums.size());
        out.day.reserve(sums.size());
        out.minute.reserve(sums.size());
        for (int d = 0; d < n_days; ++d) {
            for (int b = 0; b < bpd; ++b) {
                out.values.push_back(static_cast<double>(sums[static_cast<std::size_t>(d) * bpd + b]));
                out.day.push_back(d);
                out.minute.push_back(session.wall_minute_of_slot(b * dt.count));
            }
        }
    } else {
        // whole trading days per bin; a short trailing group still forms a
        // bin so volume is conserved at every scale
        const int k = dt.count;
        const int n_bins = (n_days + k - 1) / k;
        sums.assign(static_cast<std::size_t>(n_bins), 0);
        for (const auto& t : trades) {
            auto slot = session.slot_of_second(t.ts.second_of_day);
            if (!slot) {
                ++rep.discarded_out_of_session;
                continue;
            }
            ++rep.trades_in_session;
            const int d = day_ordinal[t.ts.date_key()];
            sums[static_cast<std::size_t>(d / k)] += t.size;
        }
        rep.partial_tail_days = static_cast<std::size_t>(n_days % k);
        const int open_minute = session.windows().front().open_minute;
        for (int b = 0; b < n_bins; ++b) {
            out.values.push_back(static_cast<double>(sums[b]));
            out.day.push_back(b * k);
            out.minute.push_back(open_minute);
        }
    }

    rep.no_session_trades = rep.trades_in_session == 0;
    return out;
}

VolumeSeries coarsen(const VolumeSeries& src, Scale dt, CoarsenReport* report) {
    CoarsenReport local;
    CoarsenReport& rep = report ? *report : local;
    rep = CoarsenReport{};

    if (!src.dt.is_intraday())
        throw ConfigError("coarsen: source series must have an intraday scale");
    const int mpd = src.minutes_per_day;

    VolumeSeries out;
    out.dt = dt;
    out.minutes_per_day = mpd;

    if (dt.is_intraday()) {
        if (dt.count % src.dt.count != 0)
            throw ConfigError("coarsen: target dt " + dt.to_string() +
                              " is not a multiple of source dt " + src.dt.to_string());
        if (mpd % dt.count != 0)
            throw ConfigError("dt " + dt.to_string() + " does not divide " +
                              std::to_string(mpd) + " minutes per day");
        const std::size_t k = static_cast<std::size_t>(dt.count / src.dt.count);
        std::size_t i = 0;
        while (i < src.size()) {
            // group of k bins, all within the current day
            if (i + k > src.size() || src.day[i + k - 1] != src.day[i]) {
                ++rep.bins_dropped;
                ++i;
                continue;
            }
            double sum = 0.0;
            for (std::size_t j = 0; j < k; ++j) sum += src.values[i + j];
            out.values.push_back(sum);
            out.day.push_back(src.day[i]);
            out.minute.push_back(src.minute[i]);
            i += k;
        }
    } else {
        const int bpd = src.bins_per_day();
        // daily totals, complete days only
        std::vector<double> daily;
        std::vector<int> daily_day;
        std::size_t i = 0;
        while (i < src.size()) {
            const int d = src.day[i];
            std::size_t j = i;
            double sum = 0.0;
            while (j < src.size() && src.day[j] == d) sum += src.values[j++];
            if (j - i == static_cast<std::size_t>(bpd)) {
                daily.push_back(sum);
                daily_day.push_back(d);
            } else {
                rep.bins_dropped += j - i;
            }
            i = j;
        }
        const std::size_t k = static_cast<std::size_t>(dt.count);
        const int open_minute = src.minute.empty() ? 0 : src.minute.front();
        for (i = 0; i < daily.size(); i += k) {
            const std::size_t end = std::min(i + k, daily.size());
            double sum = 0.0;
            for (std::size_t j = i; j < end; ++j) sum += daily[j];
            out.values.push_back(sum);
            out.day.push_back(daily_day[i]);
            out.minute.push_back(open_minute);
        }
        rep.partial_tail_days = daily.size() % k;
    }
    return out;
}

} // namespace volscale
