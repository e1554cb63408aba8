#pragma once

#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "csdp/monitor.hpp"
#include "csdp/problem.hpp"
#include "csdp/symvec.hpp"

namespace csdp {

enum class RunMode { kAudit, kStrict };

enum class SolveStatus {
  kConverged,
  kDivergenceGuard,
  kIterationCap,
  kInvariantViolation,
};

/// Where the reduction factor σ came from.
enum class SigmaSource { kNu, kProblem, kOverride };

std::string_view to_string(RunMode m);
std::string_view to_string(SolveStatus s);
std::string_view to_string(SigmaSource s);

struct SolverOptions {
  double epsilon = 1e-8;
  double nu = 0.4714;
  /// Unset means σ = sigma_from_nu(n, nu).
  std::optional<double> sigma;
  SigmaSource sigma_source = SigmaSource::kOverride;
  /// Unset means max(1, 10·bound_iterations).
  std::optional<int> max_iterations;
  double gap_ceiling = 0.1;
  Tolerances tolerances;
  RunMode mode = RunMode::kAudit;

  /// Defaults overlaid with the problem's hints (epsilon, nu, sigma,
  /// gap_ceiling).
  static SolverOptions for_problem(const SdpProblem& prob);
};

/// n/(n + ν√n). Throws std::invalid_argument unless n ≥ 1 and ν > 0.
double sigma_from_nu(int n, double nu);

/// σ actually used: the explicit value if set, otherwise derived from ν.
double effective_sigma(const SdpProblem& prob, const SolverOptions& opts);

struct IterateState {
  SymMatrix x, z;
  Eigen::VectorXd p;
  SymMatrix xm, zm;
  Eigen::VectorXd pm;
  double mu = 0;
  double phi = 0;
  double phim = 0;
  int iteration = 0;
};

struct NewtonStep {
  SymMatrix dx, dz;
  Eigen::VectorXd dp;
  Eigen::MatrixXd g, h;
  SymMatrix r;
  SymMatrix zh, zhi;
};

/**
 * Z₀ = mats(lsqr(Fmat, −b)), p₀ = lsqr(Fmatᵀ, vecs(−X₀ − F₀)),
 * φ = Tr(X₀Z₀), φ₋ = φ/σ, μ = φ/n.
 *
 * Throws InitializationError when X₀ is missing (argument and problem hint
 * both unset), when X₀ or Z₀ is not positive definite, or when
 * ‖Z₀^½X₀Z₀^½ − μI‖_F > 0.3105μ. The remaining initialization contracts are
 * evaluated by check_initialization, not here.
 */
IterateState initialize(const SdpProblem& prob,
                        const std::optional<SymMatrix>& x0,
                        const SolverOptions& opts);

/// G, H, r, Zh, Zhi at (state.xm, state.zm) with μ = state.mu.
NewtonStep assemble_newton(const SdpProblem& prob, const IterateState& state,
                           double sigma);

/// dZ = lsqr(Fmat, 0), dX = lsqr(H, vecs(r) − G·vecs(dZ)), dp = lsqr(Fmatᵀ, −vecs(dX)).
void solve_newton(const SdpProblem& prob, NewtonStep& step,
                  const Tolerances& tol = {});

/// Full step from (xm, zm, pm) with φ, φ₋ and μ recomputed.
IterateState take_step(const IterateState& state, const NewtonStep& step);

/// What the loop guard and divergence guard conclude about a state.
struct GuardState {
  bool keep_going;
  bool diverged;
};
GuardState evaluate_guards(const IterateState& state, double epsilon);

struct IterationLog {
  StepSnapshot step;
  std::vector<InvariantRecord> records;
};

struct SolveReport {
  SolveStatus status = SolveStatus::kConverged;
  RunMode mode = RunMode::kAudit;
  int iterations = 0;
  double final_gap = 0;
  InitialPoint initial;
  std::vector<InvariantRecord> init_records;
  std::vector<IterationLog> log;
  IterateState final_state;
  ConvergenceBudget budget;
  ContractParams params;
  SigmaSource sigma_source = SigmaSource::kOverride;
  double nu = 0;
  int max_iterations = 0;
  bool max_iterations_default = true;
  /// Failed records across initialization and every iteration.
  int violations = 0;
  std::optional<InvariantRecord> offending;
  /// min over iterations of the Tanabe potential drop; NaN if none.
  double min_potential_decrease = 0;

  bool clean() const { return violations == 0; }
};

using MonitorHook =
    std::function<void(const IterateState& prev, const NewtonStep& step,
                       const IterateState& next,
                       const std::vector<InvariantRecord>& records)>;

/**
 * Runs the short-path loop from initialize() until φ ≤ ε, the divergence
 * guard fires, or max_iterations steps have been taken. In strict mode the
 * first failed record ends the run with kInvariantViolation.
 */
SolveReport solve(const SdpProblem& prob, const SolverOptions& opts,
                  const MonitorHook& hook = {},
                  const std::optional<SymMatrix>& x0 = std::nullopt);

}  // namespace csdp
