#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace bsplan {

// Shortest round-trip decimal form (std::to_chars); parsing recovers the
// exact double, which keeps file-based pipelines bit-stable.
std::string format_double(double v);

double parse_double(std::string_view s); // throws ParseError
long long parse_int(std::string_view s); // throws ParseError

std::string_view trim(std::string_view s);

// Splits on ','; fields are trimmed.
std::vector<std::string_view> split_csv(std::string_view line);

std::string read_file(const std::string& path);           // throws ParseError
void write_file(const std::string& path, std::string_view content);

} // namespace bsplan
