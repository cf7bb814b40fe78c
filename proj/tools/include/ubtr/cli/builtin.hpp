#pragma once

#include "ubtr/types.hpp"

#include <string>
#include <vector>

namespace ubtr::cli {

/// A small problem with a known solution.
struct BuiltinProblem {
  std::string name;
  std::string description;
  Problem problem;
  Vector solution;
};

/// quadratic:     1/2 (x - 1)^2 from x0 = 0, minimizer 1.
/// lasso:         1/2 (x - 1)^2 + 0.5 |x|, minimizer 0.5.
/// box_quadratic: 1/2 ||x - c||^2 on [-1, 1]^3, c = (2, -3, 0.5); minimizer (1, -1, 0.5).
/// box_lasso:     sum 1/2 d_i (x_i - c_i)^2 + 0.5 ||x||_1 on [-1, 2]^4 with
///                d = (1, 2, 4, 0.5), c = (3, -0.2, 0.7, -4); minimizer (2, 0, 0.575, -1).
BuiltinProblem make_builtin(const std::string& name);

std::vector<std::string> builtin_names();

}  // namespace ubtr::cli
