#pragma once

// Line/token helpers shared by the plain-text parsers.

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "edgeslide/error.hpp"

namespace edgeslide::detail {

struct Line {
    int number;
    std::vector<std::string_view> tokens;
};

/// Splits on LF, drops comment (`#`) and blank lines, tokenizes on whitespace.
inline std::vector<Line> content_lines(std::string_view text) {
    std::vector<Line> out;
    int number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view raw = text.substr(pos, end - pos);
        ++number;
        pos = end + 1;
        if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);

        std::vector<std::string_view> tokens;
        std::size_t i = 0;
        while (i < raw.size()) {
            while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t')) ++i;
            std::size_t j = i;
            while (j < raw.size() && raw[j] != ' ' && raw[j] != '\t') ++j;
            if (j > i) tokens.push_back(raw.substr(i, j - i));
            i = j;
        }
        if (tokens.empty() || tokens.front().front() == '#') continue;
        out.push_back({number, std::move(tokens)});
        if (end == text.size()) break;
    }
    return out;
}

inline int parse_int(std::string_view token, int line) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        throw ParseError(line, "expected integer, got '" + std::string(token) + "'");
    return value;
}

}  // namespace edgeslide::detail
