#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace allclear::csv {

// Line-oriented CSV without quoting: fields must not contain ',' or
// newlines (writers enforce this). Trailing '\r' is stripped on read.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    // Column index by name; throws DataError when absent.
    std::size_t column(const std::string& name) const;
};

Table read_file(const std::string& path);
Table read_string(const std::string& text);

std::vector<std::string> split_line(const std::string& line);

// Shortest decimal text that round-trips to the same double bits.
std::string format_double(double v);

// Strict full-token parse; returns nullopt on malformed text.
std::optional<double> parse_double(const std::string& text);
std::optional<std::int64_t> parse_int(const std::string& text);

void write_field(std::string& out, const std::string& field);

} // namespace allclear::csv
