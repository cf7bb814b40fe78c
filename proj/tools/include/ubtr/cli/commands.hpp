#pragma once

#include "ubtr/adversary.hpp"
#include "ubtr/cli/config.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace ubtr::cli {

/// Process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitMismatch = 1,       // iteration count mismatch, failed audit, or solver error
  kExitNotConverged = 2,   // max_iter reached
  kExitIo = 3,             // output file could not be written
  kExitUsage = 4,          // invalid config or arguments
};

/// Options shared by every command besides the config itself.
struct OutputOptions {
  bool color = false;
};

/// Adversarial run in analytic mode; exit 0 iff the observed iteration count
/// equals k_eps and every runtime audit passed.
int cmd_verify(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err,
               const OutputOptions& opts = {});

/// Builtin problem; history CSV written to cfg.out when set.
int cmd_solve(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err,
              const OutputOptions& opts = {});

/// Writes f.csv, fprime.csv, iterates.csv, steps.csv and instance.csv into
/// the directory cfg.out (default ".").
int cmd_emit(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err);

/// Prints Delta_succ, Delta_min, the successful / unsuccessful iteration
/// bounds and, for adversarial configs, k_eps.
int cmd_bounds(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err);

/// x samples for the f / f' tables: `samples` uniform points over
/// [x_{-1}, x_{k_eps+1}] merged with every knot.
std::vector<double> emit_grid(const AdversarialInstance& inst, int samples);

/// Entry point used by main(): parses argv with CLI11 and dispatches.
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace ubtr::cli
