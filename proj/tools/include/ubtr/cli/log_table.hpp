#pragma once

#include "ubtr/driver.hpp"

#include <iosfwd>
#include <string>

namespace ubtr::cli {

/// Column header of the iteration log.
const std::string& log_header();

/// One log line: outer (1-based), inner, then f, h, criticality, sqrt_xi, rho,
/// Delta, ||x||, ||s||, ||B|| in %.1e. NaN fields (terminal row) are blank.
std::string format_log_row(const IterationRecord& rec);

/// Header, every row, then the termination lines.
void print_log(const SolveResult& result, std::ostream& out, bool color = false);

/// History as CSV: k,inner,f,h,criticality,sqrt_xi,rho,delta,x_norm,s_norm,B_norm,status.
void write_history_csv(const SolveResult& result, std::ostream& out);

}  // namespace ubtr::cli
