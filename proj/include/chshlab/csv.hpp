#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace chshlab {

/// Fixed 17-significant-digit formatting; parses back to the same double.
std::string format_g17(double x);

/// Shortest representation that parses back to the same double.
std::string format_shortest(double x);

double parse_double(std::string_view text);

/// Data rows of a CSV document: the header is checked and comment lines
/// starting with '#' are skipped.
std::vector<std::vector<double>> parse_numeric_csv(std::string_view text, std::string_view expected_header);

}  // namespace chshlab
