#include "ubtr/cli/builtin.hpp"

namespace ubtr::cli {

namespace {

// 1/2 sum d_i (x_i - c_i)^2
Problem separable_quadratic(Vector d, Vector c) {
  Problem p;
  p.f = [d, c](const Vector& x) { return 0.5 * (d.array() * (x - c).array().square()).sum(); };
  p.grad = [d, c](const Vector& x) -> Vector { return d.array() * (x - c).array(); };
  p.lower = Vector::Constant(c.size(), -kInf);
  p.upper = Vector::Constant(c.size(), kInf);
  p.x0 = Vector::Zero(c.size());
  return p;
}

}  // namespace

std::vector<std::string> builtin_names() { return {"quadratic", "lasso", "box_quadratic", "box_lasso"}; }

BuiltinProblem make_builtin(const std::string& name) {
  BuiltinProblem out;
  out.name = name;
  if (name == "quadratic") {
    out.description = "1/2 (x - 1)^2";
    out.problem = separable_quadratic(Vector::Ones(1), Vector::Ones(1));
    out.solution = Vector::Ones(1);
  } else if (name == "lasso") {
    out.description = "1/2 (x - 1)^2 + 0.5 |x|";
    out.problem = separable_quadratic(Vector::Ones(1), Vector::Ones(1));
    out.problem.regularizer = RegularizerSpec::l1(0.5);
    out.solution = Vector::Constant(1, 0.5);
  } else if (name == "box_quadratic") {
    out.description = "1/2 ||x - (2, -3, 0.5)||^2 on [-1, 1]^3";
    out.problem = separable_quadratic(Vector::Ones(3), Vector{{2.0, -3.0, 0.5}});
    out.problem.lower = Vector::Constant(3, -1.0);
    out.problem.upper = Vector::Constant(3, 1.0);
    out.solution = Vector{{1.0, -1.0, 0.5}};
  } else if (name == "box_lasso") {
    out.description = "sum 1/2 d_i (x_i - c_i)^2 + 0.5 ||x||_1 on [-1, 2]^4";
    out.problem = separable_quadratic(Vector{{1.0, 2.0, 4.0, 0.5}}, Vector{{3.0, -0.2, 0.7, -4.0}});
    out.problem.regularizer = RegularizerSpec::l1(0.5);
    out.problem.lower = Vector::Constant(4, -1.0);
    out.problem.upper = Vector::Constant(4, 2.0);
    out.solution = Vector{{2.0, 0.0, 0.575, -1.0}};
  } else {
    std::string known;
    for (const auto& n : builtin_names()) known += (known.empty() ? "" : ", ") + n;
    throw InputError("unknown builtin problem '" + name + "' (known: " + known + ")");
  }
  return out;
}

}  // namespace ubtr::cli
