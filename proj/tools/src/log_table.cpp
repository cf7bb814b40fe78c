#include "ubtr/cli/log_table.hpp"

#include "ubtr/format.hpp"

#include <cmath>
#include <ostream>

namespace ubtr::cli {

namespace {

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? " " + s : std::string(width - s.size(), ' ') + s;
}

std::string cell(double v, std::size_t width) {
  if (std::isnan(v)) return std::string(width, ' ');
  return pad(scientific(v, 1), width);
}

std::string csv_field(double v) { return std::isnan(v) ? std::string() : shortest(v); }

}  // namespace

const std::string& log_header() {
  static const std::string header =
      "outer    inner     f(x)     h(x) √ξcp/√ν      √ξ        ρ       Δ     ‖x‖     ‖s‖    ‖Bₖ‖";
  return header;
}

std::string format_log_row(const IterationRecord& rec) {
  std::string line = pad(std::to_string(rec.k + 1), 5);
  line += pad(std::to_string(rec.inner), 9);
  line += cell(rec.f_val, 9);
  line += cell(rec.h_val, 9);
  line += cell(rec.criticality, 8);
  line += cell(rec.sqrt_xi, 8);
  line += cell(rec.rho, 9);
  line += cell(rec.delta, 8);
  line += cell(rec.x_norm, 8);
  line += cell(rec.s_norm, 8);
  line += cell(rec.B_norm, 8);
  return line;
}

void print_log(const SolveResult& result, std::ostream& out, bool color) {
  if (color) {
    out << "\x1b[1m" << log_header() << "\x1b[0m\n";
  } else {
    out << log_header() << '\n';
  }
  for (const auto& rec : result.history) out << format_log_row(rec) << '\n';
  if (const IterationRecord* last = result.terminal()) {
    out << "TR: terminating with √ξcp/√ν = " << shortest(last->criticality) << '\n';
  }
  out << "\"Execution stats: " << to_string(result.status) << "\"\n";
  if (result.status == SolveStatus::Error) out << "error: " << result.message << '\n';
}

void write_history_csv(const SolveResult& result, std::ostream& out) {
  out << "k,inner,f,h,criticality,sqrt_xi,rho,delta,x_norm,s_norm,B_norm,status\n";
  for (const auto& r : result.history) {
    out << r.k << ',' << r.inner << ',' << csv_field(r.f_val) << ',' << csv_field(r.h_val) << ','
        << csv_field(r.criticality) << ',' << csv_field(r.sqrt_xi) << ',' << csv_field(r.rho) << ','
        << csv_field(r.delta) << ',' << csv_field(r.x_norm) << ',' << csv_field(r.s_norm) << ','
        << csv_field(r.B_norm) << ',' << to_string(r.status) << '\n';
  }
}

}  // namespace ubtr::cli
