#pragma once

#include <optional>
#include <string>
#include <vector>

namespace volscale {

/// One continuous trading window, [open, close], in wall-clock minutes
/// since midnight.
struct SessionWindow {
    int open_minute = 0;
    int close_minute = 0;

    int length_minutes() const { return close_minute - open_minute; }
};

/// The continuous-auction trading day: an ordered list of non-overlapping
/// windows. Trading time concatenates the windows, so "session slot" k is
/// the k-th trading minute of the day regardless of gaps between windows.
class SessionSpec {
public:
    explicit SessionSpec(std::vector<SessionWindow> windows);

    /// Two 120-minute windows, 09:30-11:30 and 13:00-15:00 (240 min/day).
    static SessionSpec defaults();

    /// Parses "09:30-11:30,13:00-15:00".
    static SessionSpec parse(const std::string& text);

    int minutes_per_day() const { return minutes_per_day_; }
    const std::vector<SessionWindow>& windows() const { return windows_; }

    /// Session slot (0-based trading minute of the day) for a second-of-day,
    /// or nullopt when the instant falls outside every window. Windows are
    /// half-open [open, close) except that an instant exactly at a window
    /// close maps to the window's final minute.
    std::optional<int> slot_of_second(double second_of_day) const;

    /// Wall-clock minute-of-day at which a session slot starts.
    int wall_minute_of_slot(int slot) const;

    std::string to_string() const;

private:
    std::vector<SessionWindow> windows_;
    std::vector<int> slot_offset_; // cumulative slots before each window
    int minutes_per_day_ = 0;
};

} // namespace volscale
