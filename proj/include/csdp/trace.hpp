#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "csdp/problem.hpp"
#include "csdp/solver.hpp"

namespace csdp {

inline constexpr std::string_view kTraceSchema = "cts-1";
inline constexpr std::string_view kToolVersion = "credible-sdp 1.0.0";
inline constexpr std::string_view kVectorization =
    "vecs: upper triangle, row-major, off-diagonal scaled by sqrt(2)";

/**
 * JSON-lines proof trace of a finished or aborted solve:
 *
 *   header   schema, problem hash, options, tool version, vectorization
 *   state    iteration 0: X, Z, p, phi, phim, mu
 *   record   one per initialization contract
 *   step     per iteration: Xm, Zm, pm, dX, dZ, dp, followed by I1..I12
 *   state    final point
 *   footer   status, iterations, final gap, budget, violations, offending
 *
 * Numbers carry 17 significant digits. Throws Error if the sink fails.
 */
void write_trace(const SdpProblem& prob, const SolveReport& report,
                 std::ostream& sink);
std::string trace_text(const SdpProblem& prob, const SolveReport& report);

struct Finding {
  /// 1-based trace line, 0 when the finding concerns the trace as a whole.
  int line = 0;
  /// -1 when not tied to an iteration.
  int iteration = -1;
  /// Contract id, or the field or section name.
  std::string subject;
  std::string message;
};

std::string format_finding(const Finding& f);

struct CheckReport {
  std::vector<Finding> findings;
  int iterations = 0;
  int records_checked = 0;
  std::string status;

  bool clean() const { return findings.empty(); }
};

enum class CheckMode { kParallel, kSerial };

/**
 * Re-derives every record of `trace` from the embedded snapshots and checks
 * the run's bookkeeping: step chaining, loop and divergence guards, catalog
 * completeness and order, footer status, violation count and iteration
 * budget. Numbers must agree to 1e-12 relative. Problems with the content are
 * findings; the function throws ParseError for text that is not JSON lines
 * with a header, SchemaError for another schema version and HashMismatch when
 * the trace was produced for a different problem.
 *
 * kParallel re-checks iteration groups concurrently; kSerial is the
 * reference and yields the same report.
 */
CheckReport check_trace(std::string_view trace, const SdpProblem& prob,
                        CheckMode mode = CheckMode::kParallel);

}  // namespace csdp
