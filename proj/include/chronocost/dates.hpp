#pragma once

#include <charconv>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace chronocost {

/// Proleptic Gregorian calendar date. Arithmetic goes through the
/// days-from-civil serial (Howard Hinnant's algorithms).
struct Date {
    int year = 1970;
    int month = 1; // 1..12
    int day = 1;   // 1..days_in_month

    auto operator<=>(const Date&) const = default;
};

inline bool is_leap_year(int y) {
    return y % 4 == 0 && (y % 100 != 0 || y % 400 == 0);
}

inline int days_in_month(int year, int month) {
    static constexpr int lengths[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    if (month == 2 && is_leap_year(year)) return 29;
    return lengths[month - 1];
}

inline bool is_valid(const Date& d) {
    return d.month >= 1 && d.month <= 12 && d.day >= 1 && d.day <= days_in_month(d.year, d.month);
}

/// Days since 1970-01-01.
inline std::int64_t to_serial(const Date& d) {
    const int y = d.year - (d.month <= 2);
    const int era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153u * (static_cast<unsigned>(d.month) + (d.month > 2 ? -3 : 9)) + 2) / 5 +
                         static_cast<unsigned>(d.day) - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return static_cast<std::int64_t>(era) * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

inline Date from_serial(std::int64_t serial) {
    serial += 719468;
    const std::int64_t era = (serial >= 0 ? serial : serial - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(serial - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const std::int64_t y = static_cast<std::int64_t>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    const unsigned d = doy - (153 * mp + 2) / 5 + 1;
    const unsigned m = mp + (mp < 10 ? 3 : -9);
    return Date{static_cast<int>(y + (m <= 2)), static_cast<int>(m), static_cast<int>(d)};
}

inline Date add_days(const Date& d, std::int64_t n) {
    return from_serial(to_serial(d) + n);
}

/// Adds calendar months, clamping the day to the target month's length
/// (2013-01-31 + 1 month = 2013-02-28).
inline Date add_months(const Date& d, int n) {
    const int total = d.year * 12 + (d.month - 1) + n;
    int year = total / 12;
    int month = total % 12;
    if (month < 0) {
        month += 12;
        year -= 1;
    }
    month += 1;
    const int day = std::min(d.day, days_in_month(year, month));
    return Date{year, month, day};
}

/// Number of whole calendar months from `start` to `d`: the largest k with
/// add_months(start, k) <= d. Negative when d precedes start.
inline int months_between(const Date& start, const Date& d) {
    int k = (d.year - start.year) * 12 + (d.month - start.month);
    if (to_serial(add_months(start, k)) > to_serial(d)) --k;
    return k;
}

/// Parses an ISO-8601 `YYYY-MM-DD` date; throws std::runtime_error with the
/// offending text otherwise.
inline Date parse_date(std::string_view text) {
    auto fail = [&]() -> Date {
        throw std::runtime_error("invalid date '" + std::string(text) + "', expected YYYY-MM-DD");
    };
    if (text.size() != 10 || text[4] != '-' || text[7] != '-') return fail();
    auto parse_int = [&](std::string_view part, int& out) {
        auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), out);
        return ec == std::errc() && ptr == part.data() + part.size();
    };
    Date d;
    if (!parse_int(text.substr(0, 4), d.year) || !parse_int(text.substr(5, 2), d.month) ||
        !parse_int(text.substr(8, 2), d.day) || !is_valid(d)) {
        return fail();
    }
    return d;
}

inline std::string to_string(const Date& d) {
    char buf[11];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", d.year, d.month, d.day);
    return std::string(buf);
}

} // namespace chronocost
