#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "csdp/listing.hpp"
#include "csdp/problem.hpp"
#include "csdp/solver.hpp"

namespace csdp::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitViolation = 2;
inline constexpr int kExitDivergence = 3;
inline constexpr int kExitIterationCap = 4;

struct RunConfig {
  std::string subcommand;
  std::optional<std::filesystem::path> problem;
  std::optional<std::filesystem::path> report;
  std::optional<std::filesystem::path> trace;
  std::optional<std::filesystem::path> listing;
  std::optional<double> epsilon;
  std::optional<double> nu;
  std::optional<double> sigma;
  std::optional<double> gap_ceiling;
  std::optional<int> max_iterations;
  RunMode mode = RunMode::kAudit;
  std::string flavor = "pseudo-matlab";
  std::uint64_t seed = 1;
  int count = 50;
};

/**
 *   Converged, no failed record   0
 *   Converged with failures       2
 *   InvariantViolation            2
 *   DivergenceGuard               3
 *   IterationCap                  4
 */
int exit_code(SolveStatus status, RunMode mode, bool clean);

/// σ: --sigma, else --nu, else the problem's sigma, else the problem's ν.
SolverOptions resolve_options(const SdpProblem& prob, const RunConfig& cfg);

/// Final gap, iterations, budget and the per-contract minimum slack table.
std::string format_report(const SdpProblem& prob, const SolveReport& rep);

int cmd_solve(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_annotate(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_check_trace(const RunConfig& cfg, std::ostream& out, std::ostream& err);
/// solve, annotate and check-trace on the bundled running example.
int cmd_demo(const RunConfig& cfg, std::ostream& out, std::ostream& err);
/// Solves cfg.count random instances and compares iterations to the bound.
int cmd_budget_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches; I/O, parse and usage errors exit 1.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace csdp::cli
