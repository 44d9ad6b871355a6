#pragma once

#include "ccrgraph/errors.hpp"

#include <charconv>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace ccrgraph::detail {

// A non-blank, comment-stripped line and its 1-based line number.
struct Line {
    std::size_t number = 0;
    std::string_view text;
};

inline std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

// Splits on '\n', strips '#' comments and surrounding blanks. Keeps blank
// lines when keep_blank is set (family files use them for the empty set).
inline std::vector<Line> split_lines(std::string_view text, bool keep_blank)
{
    std::vector<Line> lines;
    std::size_t number = 0;
    while (!text.empty() || number == 0) {
        ++number;
        const auto end = text.find('\n');
        std::string_view raw = text.substr(0, end);
        text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
        const bool had_comment = raw.find('#') != std::string_view::npos;
        raw = trim(raw.substr(0, raw.find('#')));
        if (!raw.empty() || (keep_blank && !had_comment))
            lines.push_back({number, raw});
        if (text.empty())
            break;
    }
    return lines;
}

inline std::size_t parse_index(std::string_view token, std::size_t line)
{
    token = trim(token);
    std::size_t value = 0;
    const auto* begin = token.data();
    const auto* end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (token.empty() || ec != std::errc{} || ptr != end)
        throw ParseError("line " + std::to_string(line) + ": expected a non-negative integer, got '" +
                         std::string(token) + "'");
    return value;
}

// Parses "<key>=<int>".
inline std::size_t parse_header(const Line& line, std::string_view key)
{
    const auto eq = line.text.find('=');
    if (eq == std::string_view::npos || trim(line.text.substr(0, eq)) != key)
        throw ParseError("line " + std::to_string(line.number) + ": expected '" + std::string(key) + "=<int>'");
    return parse_index(line.text.substr(eq + 1), line.number);
}

} // namespace ccrgraph::detail
