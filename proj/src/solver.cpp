#include "csdp/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "csdp/errors.hpp"
#include "csdp/linalg.hpp"

namespace csdp {

using Eigen::MatrixXd;
using Eigen::VectorXd;

std::string_view to_string(RunMode m) {
  return m == RunMode::kStrict ? "strict" : "audit";
}

std::string_view to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::kConverged: return "Converged";
    case SolveStatus::kDivergenceGuard: return "DivergenceGuard";
    case SolveStatus::kIterationCap: return "IterationCap";
    case SolveStatus::kInvariantViolation: return "InvariantViolation";
  }
  return "?";
}

std::string_view to_string(SigmaSource s) {
  switch (s) {
    case SigmaSource::kNu: return "nu";
    case SigmaSource::kProblem: return "problem";
    case SigmaSource::kOverride: return "override";
  }
  return "?";
}

SolverOptions SolverOptions::for_problem(const SdpProblem& prob) {
  SolverOptions o;
  const ProblemHints& h = prob.hints();
  if (h.epsilon) o.epsilon = *h.epsilon;
  if (h.nu) o.nu = *h.nu;
  if (h.gap_ceiling) o.gap_ceiling = *h.gap_ceiling;
  if (h.sigma) {
    o.sigma = *h.sigma;
    o.sigma_source = SigmaSource::kProblem;
  } else {
    o.sigma_source = SigmaSource::kNu;
  }
  return o;
}

double sigma_from_nu(int n, double nu) {
  if (n < 1) throw std::invalid_argument("sigma_from_nu: n must be >= 1");
  if (!(nu > 0) || !std::isfinite(nu)) {
    throw std::invalid_argument("sigma_from_nu: nu must be positive");
  }
  return n / (n + nu * std::sqrt(static_cast<double>(n)));
}

double effective_sigma(const SdpProblem& prob, const SolverOptions& opts) {
  return opts.sigma ? *opts.sigma : sigma_from_nu(prob.n(), opts.nu);
}

IterateState initialize(const SdpProblem& prob,
                        const std::optional<SymMatrix>& x0,
                        const SolverOptions& opts) {
  const int n = prob.n();
  const std::optional<SymMatrix>& given = x0 ? x0 : prob.hints().x0;
  if (!given) throw InitializationError("no initial X0 given");
  if (given->dim() != n) {
    throw InitializationError("X0 is " + std::to_string(given->dim()) +
                              "x" + std::to_string(given->dim()) +
                              ", expected n=" + std::to_string(n));
  }
  const double sigma = effective_sigma(prob, opts);
  if (!(sigma > 0 && sigma < 1)) {
    throw InitializationError("sigma must lie in (0,1), got " +
                              std::to_string(sigma));
  }
  if (!(opts.epsilon > 0)) throw InitializationError("epsilon must be > 0");

  const Tolerances& tol = opts.tolerances;
  IterateState s;
  s.x = *given;
  if (!is_pd(s.x, tol.pd_margin)) {
    throw InitializationError("X0 is not positive definite (min eigenvalue " +
                              std::to_string(min_eigenvalue(s.x)) + ")");
  }
  s.z = mats(lsqr_solve(prob.fmat(), -prob.b(), tol.lsqr_consistency,
                        "F*vecs(Z)==-b"),
             n);
  if (!is_pd(s.z, tol.pd_margin)) {
    throw InitializationError(
        "Z0 = mats(lsqr(F,-b)) is not positive definite (min eigenvalue " +
        std::to_string(min_eigenvalue(s.z)) + ")");
  }
  s.p = lsqr_solve(prob.fmat().transpose(), -vecs(s.x + prob.f0()).data,
                   tol.lsqr_consistency, "Ft*p==vecs(-X-F0)");

  s.phi = trace_product(s.x.matrix(), s.z.matrix());
  s.phim = s.phi / sigma;
  s.mu = s.phi / n;

  const MatrixXd zh = sym_sqrt(s.z).matrix();
  const double dist = frob_norm(MatrixXd(zh * s.x.matrix() * zh -
                                         s.mu * MatrixXd::Identity(n, n)));
  if (!(dist <= 0.3105 * s.mu)) {
    throw InitializationError(
        "X0 is outside the central-path neighborhood: ||Z^0.5*X*Z^0.5-mu*I|| "
        "= " + std::to_string(dist) + " > 0.3105*mu = " +
        std::to_string(0.3105 * s.mu));
  }
  s.xm = s.x;
  s.zm = s.z;
  s.pm = s.p;
  return s;
}

NewtonStep assemble_newton(const SdpProblem& prob, const IterateState& state,
                           double sigma) {
  const int n = prob.n();
  NewtonStep st;
  st.zh = sym_sqrt(state.zm);
  st.zhi = sym_inv(st.zh);
  const MatrixXd& zh = st.zh.matrix();
  const MatrixXd& zhi = st.zhi.matrix();
  const MatrixXd& xm = state.xm.matrix();
  st.g = krons(zhi, zh.transpose() * xm);
  st.h = krons(zhi * state.zm.matrix(), zh.transpose());
  st.r = SymMatrix(MatrixXd(sigma * state.mu * MatrixXd::Identity(n, n) -
                            zh * xm * zh));
  return st;
}

void solve_newton(const SdpProblem& prob, NewtonStep& step,
                  const Tolerances& tol) {
  const int n = prob.n();
  const VectorXd dz = lsqr_solve(prob.fmat(), VectorXd::Zero(prob.m()),
                                 tol.lsqr_consistency, "F*dZm==0");
  const VectorXd dx = lsqr_solve(step.h, vecs(step.r).data - step.g * dz,
                                 tol.lsqr_consistency,
                                 "H*dXm==vecs(r)-G*dZm");
  step.dp = lsqr_solve(prob.fmat().transpose(), -dx, tol.lsqr_consistency,
                       "Ft*dpm==-dXm");
  step.dz = mats(dz, n);
  step.dx = mats(dx, n);
}

IterateState take_step(const IterateState& state, const NewtonStep& step) {
  IterateState next = state;
  next.x = state.xm + step.dx;
  next.z = state.zm + step.dz;
  next.p = state.pm + step.dp;
  next.phim = trace_product(state.xm.matrix(), state.zm.matrix());
  next.phi = trace_product(next.x.matrix(), next.z.matrix());
  next.mu = next.phi / next.x.dim();
  next.iteration = state.iteration + 1;
  return next;
}

GuardState evaluate_guards(const IterateState& state, double epsilon) {
  const bool diverged = state.iteration > 0 && state.phi - state.phim > 0;
  return {!diverged && state.phi > epsilon, diverged};
}

namespace {

const InvariantRecord* first_failure(const std::vector<InvariantRecord>& rs) {
  for (const auto& r : rs) {
    if (!r.passed) return &r;
  }
  return nullptr;
}

int count_failures(const std::vector<InvariantRecord>& rs) {
  return static_cast<int>(
      std::count_if(rs.begin(), rs.end(), [](const auto& r) { return !r.passed; }));
}

double tanabe_or_nan(const SymMatrix& x, const SymMatrix& z, double nu) {
  if (!is_pd(x) || !is_pd(z)) return std::numeric_limits<double>::quiet_NaN();
  return potential_tanabe(x, z, nu);
}

}  // namespace

SolveReport solve(const SdpProblem& prob, const SolverOptions& opts,
                  const MonitorHook& hook, const std::optional<SymMatrix>& x0) {
  const int n = prob.n();
  const double sigma = effective_sigma(prob, opts);
  IterateState state = initialize(prob, x0, opts);

  SolveReport rep;
  rep.mode = opts.mode;
  rep.params = {sigma, opts.epsilon, opts.gap_ceiling, opts.tolerances};
  rep.sigma_source = opts.sigma ? opts.sigma_source : SigmaSource::kNu;
  rep.nu = opts.nu;
  rep.initial = {state.x, state.z, state.p, state.phi, state.phim, state.mu};
  rep.budget = iteration_bound(state.phi, opts.epsilon, sigma);
  rep.max_iterations_default = !opts.max_iterations.has_value();
  rep.max_iterations =
      opts.max_iterations.value_or(std::max(1, 10 * rep.budget.bound_iterations));
  rep.min_potential_decrease = std::numeric_limits<double>::quiet_NaN();

  rep.init_records = check_initialization(prob, rep.initial, rep.params);
  rep.violations = count_failures(rep.init_records);
  const bool strict = opts.mode == RunMode::kStrict;
  if (const auto* bad = strict ? first_failure(rep.init_records) : nullptr) {
    rep.status = SolveStatus::kInvariantViolation;
    rep.offending = *bad;
    rep.final_state = state;
    rep.final_gap = state.phi;
    return rep;
  }

  rep.status = SolveStatus::kConverged;
  while (state.phi > opts.epsilon) {
    if (state.iteration >= rep.max_iterations) {
      rep.status = SolveStatus::kIterationCap;
      break;
    }
    IterateState prev = state;
    state.xm = state.x;
    state.zm = state.z;
    state.pm = state.p;
    state.mu = trace_product(state.xm.matrix(), state.zm.matrix()) / n;

    NewtonStep step = assemble_newton(prob, state, sigma);
    solve_newton(prob, step, opts.tolerances);
    IterateState next = take_step(state, step);

    IterationLog entry;
    entry.step = {state.xm, state.zm, state.pm, step.dx, step.dz, step.dp};
    entry.records = check_iteration(prob, entry.step, {next.x, next.z, next.p},
                                    next.iteration, rep.params);
    rep.violations += count_failures(entry.records);
    if (hook) hook(prev, step, next, entry.records);

    const double drop = tanabe_or_nan(prev.x, prev.z, opts.nu) -
                        tanabe_or_nan(next.x, next.z, opts.nu);
    rep.min_potential_decrease = std::isnan(rep.min_potential_decrease)
                                     ? drop
                                     : std::fmin(rep.min_potential_decrease, drop);

    const InvariantRecord* bad = strict ? first_failure(entry.records) : nullptr;
    if (bad) rep.offending = *bad;
    rep.log.push_back(std::move(entry));
    state = std::move(next);

    if (bad) {
      rep.status = SolveStatus::kInvariantViolation;
      break;
    }
    if (evaluate_guards(state, opts.epsilon).diverged) {
      rep.status = SolveStatus::kDivergenceGuard;
      break;
    }
  }
  rep.iterations = state.iteration;
  rep.final_state = state;
  rep.final_gap = state.phi;
  return rep;
}

}  // namespace csdp
