#include "ubtr/format.hpp"

#include <array>
#include <charconv>

namespace ubtr {

std::string shortest(double v) {
  std::array<char, 32> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return {buf.data(), res.ptr};
}

std::string scientific(double v, int precision) {
  std::array<char, 48> buf{};
  const auto res =
      std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::scientific, precision);
  return {buf.data(), res.ptr};
}

}  // namespace ubtr
