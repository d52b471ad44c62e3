#include "padiam/format.hpp"

#include <array>
#include <charconv>
#include <stdexcept>
#include <string>

namespace padiam {

namespace {

template <typename T>
T parse_whole(std::string_view token, const char* what) {
  T value{};
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (!token.empty() && token.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (token.empty() || ec != std::errc() || ptr != last) {
    throw std::invalid_argument(std::string("bad ") + what + " '" +
                                std::string(token) + "'");
  }
  return value;
}

}  // namespace

std::string format_double(double x) {
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), end);
}

double parse_double(std::string_view token) {
  return parse_whole<double>(token, "real number");
}

long long parse_int(std::string_view token) {
  return parse_whole<long long>(token, "integer");
}

unsigned long long parse_uint(std::string_view token) {
  return parse_whole<unsigned long long>(token, "unsigned integer");
}

}  // namespace padiam
