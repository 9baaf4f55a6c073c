#include "volscale/session.hpp"

#include <cstdio>

#include "volscale/errors.hpp"

namespace volscale {

SessionSpec::SessionSpec(std::vector<SessionWindow> windows)
    : windows_(std::move(windows)) {
    if (windows_.empty())
        throw ConfigError("session: at least one trading window required");
    int prev_close = -1;
    for (const auto& w : windows_) {
        if (w.open_minute < 0 || w.close_minute > 24 * 60 ||
            w.open_minute >= w.close_minute)
            throw ConfigError("session: window must satisfy 0 <= open < close <= 24:00");
        if (w.open_minute < prev_close)
            throw ConfigError("session: windows must be ordered and non-overlapping");
        prev_close = w.close_minute;
        slot_offset_.push_back(minutes_per_day_);
        minutes_per_day_ += w.length_minutes();
    }
}

SessionSpec SessionSpec::defaults() {
    return SessionSpec({{9 * 60 + 30, 11 * 60 + 30}, {13 * 60, 15 * 60}});
}

namespace {

int parse_hhmm(const std::string& s) {
    int h = 0, m = 0;
    if (std::sscanf(s.c_str(), "%d:%d", &h, &m) != 2 || h < 0 || h > 24 ||
        m < 0 || m > 59)
        throw ConfigError("session: bad time '" + s + "', expected HH:MM");
    return h * 60 + m;
}

} // namespace

SessionSpec SessionSpec::parse(const std::string& text) {
    std::vector<SessionWindow> windows;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string part = text.substr(pos, comma == std::string::npos
                                                ? std::string::npos
                                                : comma - pos);
        std::size_t dash = part.find('-');
        if (dash == std::string::npos)
            throw ConfigError("session: bad window '" + part +
                              "', expected HH:MM-HH:MM");
        windows.push_back({parse_hhmm(part.substr(0, dash)),
                           parse_hhmm(part.substr(dash + 1))});
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return SessionSpec(std::move(windows));
}

std::optional<int> SessionSpec::slot_of_second(double second_of_day) const {
    for (std::size_t i = 0; i < windows_.size(); ++i) {
        const auto& w = windows_[i];
        const double open_s = 60.0 * w.open_minute;
        const double close_s = 60.0 * w.close_minute;
        if (second_of_day >= open_s && second_of_day < close_s) {
            return slot_offset_[i] +
                   static_cast<int>((second_of_day - open_s) / 60.0);
        }
        // An instant exactly at the close belongs to the final minute.
        if (second_of_day == close_s)
            return slot_offset_[i] + w.length_minutes() - 1;
    }
    return std::nullopt;
}

int SessionSpec::wall_minute_of_slot(int slot) const {
    if (slot < 0 || slot >= minutes_per_day_)
        throw ConfigError("session: slot out of range");
    for (std::size_t i = 0; i < windows_.size(); ++i) {
        const int len = windows_[i].length_minutes();
        if (slot < slot_offset_[i] + len)
            return windows_[i].open_minute + (slot - slot_offset_[i]);
    }
    throw ConfigError("session: slot out of range"); // unreachable
}

std::string SessionSpec::to_string() const {
    std::string out;
    char buf[32];
    for (const auto& w : windows_) {
        if (!out.empty()) out += ',';
        std::snprintf(buf, sizeof buf, "%02d:%02d-%02d:%02d", w.open_minute / 60,
                      w.open_minute % 60, w.close_minute / 60, w.close_minute % 60);
        out += buf;
    }
    return out;
}

} // namespace volscale
