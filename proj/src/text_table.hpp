#pragma once

// Shared reader for the whitespace-separated data tables under data/.
// '#' starts a comment line; blank lines are skipped.

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "maxaccel/errors.hpp"

namespace maxaccel::detail {

struct TableRow {
    std::size_t line = 0;
    std::vector<std::string> fields;
    std::string raw;

    /// Text of the row after the first `n` whitespace-separated fields, trimmed.
    std::string rest_after(std::size_t n) const {
        std::size_t pos = 0;
        for (std::size_t i = 0; i < n; ++i) {
            pos = raw.find_first_not_of(" \t", pos);
            if (pos == std::string::npos) return {};
            pos = raw.find_first_of(" \t", pos);
            if (pos == std::string::npos) return {};
        }
        pos = raw.find_first_not_of(" \t", pos);
        if (pos == std::string::npos) return {};
        auto end = raw.find_last_not_of(" \t\r");
        return raw.substr(pos, end - pos + 1);
    }
};

inline std::vector<TableRow> table_rows(std::string_view text) {
    std::vector<TableRow> rows;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        ++line_no;
        start = end + 1;

        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string_view::npos || line[first] == '#') {
            if (end == text.size()) break;
            continue;
        }
        TableRow row;
        row.line = line_no;
        row.raw = std::string(line);
        std::size_t pos = first;
        while (pos < line.size()) {
            auto stop = line.find_first_of(" \t\r", pos);
            if (stop == std::string_view::npos) stop = line.size();
            row.fields.emplace_back(line.substr(pos, stop - pos));
            pos = line.find_first_not_of(" \t\r", stop);
            if (pos == std::string_view::npos) break;
        }
        rows.push_back(std::move(row));
        if (end == text.size()) break;
    }
    return rows;
}

inline double parse_double(std::string_view s, std::size_t line) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        throw ParseError("line " + std::to_string(line) + ": '" + std::string(s) +
                         "' is not a number");
    }
    return v;
}

}  // namespace maxaccel::detail
