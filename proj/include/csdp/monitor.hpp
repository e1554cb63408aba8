#pragma once

#include <string>
#include <vector>

#include <Eigen/Core>

#include "csdp/catalog.hpp"
#include "csdp/problem.hpp"
#include "csdp/symvec.hpp"

namespace csdp {

struct Tolerances {
  double lsqr_consistency = 1e-9;
  double pd_margin = 1e-12;
  /// Relative tolerance of the equality contracts I7, I8, I10, init.mu and
  /// the first link of I11, whose sides coincide in exact arithmetic.
  double identity_check = 1e-9;

  /// Defaults, with identity_check taken from CREDIBLE_SDP_TOL when set.
  /// Throws InitializationError if the variable is not a positive number.
  static Tolerances from_environment();
};

/// Constants the contracts are instantiated with.
struct ContractParams {
  double sigma = 0.75;
  double epsilon = 1e-8;
  double gap_ceiling = 0.1;
  Tolerances tol;
};

struct AuxValue {
  std::string name;
  double value;
};

struct InvariantRecord {
  std::string id;
  int iteration = 0;
  double measured = 0;
  double bound = 0;
  /// Positive when satisfied.
  double slack = 0;
  bool passed = false;
  std::string anchor;
  std::vector<AuxValue> aux;
};

/// Iterate and bookkeeping scalars right after initialization.
struct InitialPoint {
  SymMatrix x, z;
  Eigen::VectorXd p;
  double phi = 0, phim = 0, mu = 0;
};

/// One loop iteration: the point it started from and the directions taken.
struct StepSnapshot {
  SymMatrix xm, zm;
  Eigen::VectorXd pm;
  SymMatrix dx, dz;
  Eigen::VectorXd dp;
};

struct PointXZp {
  SymMatrix x, z;
  Eigen::VectorXd p;
};

/// The full step: (Xm + dX, Zm + dZ, pm + dp).
PointXZp advance(const StepSnapshot& s);

/// Records for the initialization catalog, in catalog order.
std::vector<InvariantRecord> check_initialization(const SdpProblem& prob,
                                                  const InitialPoint& s0,
                                                  const ContractParams& params);

/**
 * Records I1..I12 for one iteration. `next` is the point the step produced;
 * Zh and Zhi are recomputed from Zm rather than taken from the solver.
 */
std::vector<InvariantRecord> check_iteration(const SdpProblem& prob,
                                             const StepSnapshot& step,
                                             const PointXZp& next,
                                             int iteration,
                                             const ContractParams& params);

struct ConvergenceBudget {
  double initial_gap = 0;
  double epsilon = 0;
  double sigma = 0;
  int bound_iterations = 0;
};

/**
 * ⌈log(initial_gap/ε)/log(1/σ)⌉, or 0 when initial_gap ≤ ε. Throws
 * std::invalid_argument unless ε > 0 and 0 < σ < 1.
 */
ConvergenceBudget iteration_bound(double initial_gap, double epsilon,
                                  double sigma);

/// min over records of the given id, +inf if none.
double min_slack(const std::vector<InvariantRecord>& records,
                 std::string_view id);

}  // namespace csdp
