#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "weylmoe/entropy.hpp"
#include "weylmoe/linalg.hpp"

namespace weylmoe {

enum class Command {
  chi,
  verify_theorem,
  verify_theorem2,
  verify_decomposition,
  additivity,
  sweep,
  check_channel,
};

enum class ReportFormat { json, csv };

/// Inclusive fixed-count grid start:stop:count.
struct GridSpec {
  double start = 0.0;
  double stop = 0.0;
  int count = 1;

  double at(int i) const;
};

/// How to build the channel under test (or the partner channel Psi).
struct ChannelSpec {
  std::string kind = "identity";  // identity|depolarizing|qc|weyl|phase-damping|random|json
  std::optional<std::string> json_path;
};

/// Fully resolved invocation; identical RunConfig (including seed) yields
/// a byte-identical report.
struct RunConfig {
  Command command = Command::chi;
  std::optional<Command> sweep_command;  // sweep only

  std::optional<int> d;
  std::optional<double> r;
  std::optional<double> p;
  std::optional<double> q;
  std::optional<double> lambda;

  ChannelSpec channel;

  // Partner channel Psi for verify-theorem / additivity.
  ChannelSpec psi;
  std::optional<int> psi_d;
  std::optional<double> psi_q;
  int psi_rank = 2;

  int starts = 32;
  int samples = 0;
  int trials = 200;
  RngSeed seed{0};
  LogBase log_base = LogBase::two;
  ReportFormat format = ReportFormat::json;
  std::optional<std::string> output_path;

  std::optional<GridSpec> p_grid;
  std::optional<GridSpec> q_grid;
  std::optional<GridSpec> r_grid;
};

/// Executes the pipeline for a parsed config. Writes the report to
/// cfg.output_path or `out`; machine-readable errors go to `err`.
/// Returns 0 when every checked tolerance passes, 1 on verification
/// failure, 2 on invalid arguments.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// argv-level entry point (parse + validate + run).
int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

}  // namespace weylmoe
