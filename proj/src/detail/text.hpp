#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace compdc::detail {

// Splits one CSV line on commas; no quoting support, fields are plain tokens.
std::vector<std::string> split_csv_line(std::string_view line);

// Splits text into lines, tolerating trailing newline and CRLF endings.
std::vector<std::string> split_lines(std::string_view text);

std::string trim(std::string_view s);

// Shortest round-trip decimal form; integers print without a decimal point.
std::string format_number(double value);

// Strict parsers; return false on any trailing garbage.
bool parse_int(std::string_view s, int& out);
bool parse_double(std::string_view s, double& out);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

} // namespace compdc::detail
