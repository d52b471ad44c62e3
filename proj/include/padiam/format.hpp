#pragma once

#include <string>
#include <string_view>

namespace padiam {

/// Shortest decimal form that reads back to the same double.
std::string format_double(double x);

/// Strict whole-string parses; throw std::invalid_argument on junk.
double parse_double(std::string_view token);
long long parse_int(std::string_view token);
unsigned long long parse_uint(std::string_view token);

}  // namespace padiam
