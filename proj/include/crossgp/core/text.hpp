#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace crossgp::text {

/// Shortest decimal that parses back to the same double.
std::string format_double(double value);
std::optional<double> parse_double(std::string_view s);
std::optional<std::uint64_t> parse_uint(std::string_view s);

std::string_view trim(std::string_view s);
std::vector<std::string_view> split(std::string_view s, char sep);

/// Splits on '\n', dropping a trailing '\r' from each line.
std::vector<std::string_view> lines(std::string_view s);

/// Whole file contents. Throws ConfigError when the file cannot be read.
std::string read_file(const std::string& path);

} // namespace crossgp::text
