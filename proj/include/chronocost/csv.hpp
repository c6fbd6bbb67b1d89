#pragma once

#include <charconv>
#include <cstdint>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace chronocost {

/// Splits a line on `delim`. No quoting: the file formats used here never
/// embed the delimiter inside a field.
inline std::vector<std::string> split(std::string_view line, char delim) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(delim, start);
        if (pos == std::string_view::npos) {
            out.emplace_back(line.substr(start));
            break;
        }
        out.emplace_back(line.substr(start, pos - start));
        start = pos + 1;
    }
    return out;
}

/// Line-oriented CSV reader that keeps track of line numbers for error
/// messages. Trailing '\r' is stripped so CRLF files parse the same way.
class CsvReader {
public:
    CsvReader(std::istream& in, std::string source_name)
        : in_(in), source_(std::move(source_name)) {}

    /// Reads and validates the header row against `expected`.
    void expect_header(const std::vector<std::string>& expected) {
        std::vector<std::string> fields;
        if (!next_row(fields)) {
            throw std::runtime_error(source_ + ": missing header row");
        }
        if (fields != expected) {
            std::string want;
            for (std::size_t i = 0; i < expected.size(); ++i) {
                if (i) want += ',';
                want += expected[i];
            }
            throw std::runtime_error(source_ + " line 1: unexpected header, expected '" + want + "'");
        }
    }

    /// Fetches the next non-empty row; returns false at end of stream.
    bool next_row(std::vector<std::string>& fields) {
        std::string line;
        while (std::getline(in_, line)) {
            ++line_no_;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.empty()) continue;
            fields = split(line, ',');
            return true;
        }
        return false;
    }

    int line_number() const { return line_no_; }
    const std::string& source() const { return source_; }

    [[noreturn]] void fail(const std::string& field, const std::string& message) const {
        throw std::runtime_error(source_ + " line " + std::to_string(line_no_) + ", field '" +
                                 field + "': " + message);
    }

private:
    std::istream& in_;
    std::string source_;
    int line_no_ = 0;
};

inline std::int64_t parse_int64(const CsvReader& reader, const std::string& field,
                                std::string_view text) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        reader.fail(field, "not an integer: '" + std::string(text) + "'");
    }
    return value;
}

inline double parse_double(const CsvReader& reader, const std::string& field,
                           std::string_view text) {
    // std::from_chars for doubles is incomplete on some libstdc++ versions;
    // strtod on a NUL-terminated copy is portable.
    const std::string copy(text);
    char* end = nullptr;
    const double value = std::strtod(copy.c_str(), &end);
    if (copy.empty() || end != copy.c_str() + copy.size()) {
        reader.fail(field, "not a number: '" + copy + "'");
    }
    return value;
}

/// Formats a double with enough digits to round-trip exactly through
/// strtod. Integral values print compactly.
inline std::string format_double(double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    // Try the shortest representation that still round-trips.
    for (int precision = 1; precision < 17; ++precision) {
        char shorter[32];
        std::snprintf(shorter, sizeof(shorter), "%.*g", precision, value);
        if (std::strtod(shorter, nullptr) == value) return std::string(shorter);
    }
    return std::string(buf);
}

} // namespace chronocost
