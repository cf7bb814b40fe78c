#pragma once

#include <string>

namespace ubtr {

/// Shortest decimal string that reads back to exactly `v`.
std::string shortest(double v);

/// printf-style "%.1e" (or any precision) without locale dependence.
std::string scientific(double v, int precision = 1);

}  // namespace ubtr
