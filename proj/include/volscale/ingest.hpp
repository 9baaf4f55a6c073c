#pragma once

#include <cstdint>
#include <istream>
#include <string>
#include <tuple>
#include <vector>

#include "volscale/series.hpp"
#include "volscale/session.hpp"

namespace volscale {

/// Timezone-naive local exchange time, second-or-finer resolution.
struct Timestamp {
    int year = 0;
    int month = 0;
    int day = 0;
    double second_of_day = 0.0;

    int date_key() const { return year * 10000 + month * 100 + day; }

    friend bool operator<(const Timestamp& a, const Timestamp& b) {
        return std::tie(a.year, a.month, a.day, a.second_of_day) <
               std::tie(b.year, b.month, b.day, b.second_of_day);
    }
};

/// One executed trade: when and how many shares.
struct TradeRecord {
    Timestamp ts;
    std::int64_t size = 0;
};

/// Column layout of a delimited trade file.
struct TradeFormat {
    char delimiter = ',';
    std::string time_format = "%Y-%m-%d %H:%M:%S"; // strptime syntax
    int time_column = 0;
    int size_column = 1;

    enum class Header { automatic, yes, no };
    Header header = Header::automatic;
};

struct LineIssue {
    std::size_t line = 0; // 1-based
    std::string reason;
};

struct ParseReport {
    std::size_t lines_total = 0;
    std::size_t records = 0;
    std::size_t malformed = 0;
    bool header_skipped = false;
    bool empty_input = false;
    std::vector<LineIssue> issues;
};

/// Reads delimited trade lines. Malformed lines are counted and reported
/// with their line number, never thrown. Output is sorted by timestamp.
std::vector<TradeRecord> parse_trades(std::istream& in, const TradeFormat& fmt,
                                      ParseReport* report = nullptr);

struct AggregationReport {
    std::size_t trades_in_session = 0;
    std::size_t discarded_out_of_session = 0;
    std::size_t partial_tail_days = 0; // day scales: days in a short final bin
    bool no_session_trades = false;
};

/// Sums trade sizes into fixed bins of width dt over the continuous
/// session. Bins are half-open in trading time; a trade stamped exactly at
/// a window close lands in the window's last bin. Trades outside the
/// session windows are discarded and counted. Accumulation is integer, so
/// the result is exact and independent of input order.
VolumeSeries aggregate_volume(const std::vector<TradeRecord>& trades, Scale dt,
                              const SessionSpec& session,
                              AggregationReport* report = nullptr);

struct CoarsenReport {
    std::size_t bins_dropped = 0;      // intraday: bins in incomplete groups
    std::size_t partial_tail_days = 0; // day scales: days in a short final bin
};

/// Re-aggregates a series to a coarser scale by summing consecutive bins:
/// k consecutive intraday bins within a day, or whole trading days for day
/// scales. Matches aggregate_volume at the coarser scale exactly
/// (refinement consistency); a trailing group short of k days still forms
/// a final bin so that volume is conserved. Partial days (possible only in
/// synthetic wrappers) are dropped from day-scale output and counted.
VolumeSeries coarsen(const VolumeSeries& src, Scale dt,
                     CoarsenReport* report = nullptr);

} // namespace volscale
