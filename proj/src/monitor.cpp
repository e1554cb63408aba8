#include "csdp/monitor.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <string>

#include "csdp/errors.hpp"
#include "csdp/linalg.hpp"

namespace csdp {

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kNeighborhood = 0.3105;
constexpr double kContraction = 0.76;
constexpr double kStepNormBound = 0.7;

double safe_min_eig(const SymMatrix& s) {
  if (!s.matrix().allFinite()) return kNaN;
  return min_eigenvalue(s);
}

MatrixXd nan_matrix(int n) { return MatrixXd::Constant(n, n, kNaN); }

MatrixXd safe_sqrt(const SymMatrix& s) {
  const double lo = safe_min_eig(s);
  if (!(lo > 0)) return nan_matrix(s.dim());
  return sym_sqrt(s).matrix();
}

MatrixXd safe_inv(const MatrixXd& s) {
  if (!s.allFinite()) return nan_matrix(static_cast<int>(s.rows()));
  const SymMatrix sym(s);
  if (!(safe_min_eig(sym) > 0)) return nan_matrix(sym.dim());
  return sym_inv(sym).matrix();
}

class Recorder {
 public:
  explicit Recorder(int iteration) : iteration_(iteration) {}

  InvariantRecord& add(std::string_view id, double measured, double bound,
                       double slack, bool passed) {
    InvariantRecord r;
    r.id = std::string(id);
    r.iteration = iteration_;
    r.measured = measured;
    r.bound = bound;
    r.slack = slack;
    r.passed = passed;
    r.anchor = std::string(catalog_entry(id).anchor);
    records_.push_back(std::move(r));
    return records_.back();
  }
  InvariantRecord& at_most(std::string_view id, double measured, double bound) {
    return add(id, measured, bound, bound - measured, measured <= bound);
  }
  InvariantRecord& below(std::string_view id, double measured, double bound) {
    return add(id, measured, bound, bound - measured, measured < bound);
  }
  InvariantRecord& above(std::string_view id, double measured, double bound) {
    return add(id, measured, bound, measured - bound, measured > bound);
  }

  std::vector<InvariantRecord> take() { return std::move(records_); }

 private:
  int iteration_;
  std::vector<InvariantRecord> records_;
};

double max_asymmetry(const MatrixXd& m) {
  return (m - m.transpose()).cwiseAbs().maxCoeff();
}

double neighborhood_xz(const SymMatrix& x, const SymMatrix& z, double mu) {
  const int n = x.dim();
  return frob_norm(MatrixXd(x.matrix() * z.matrix()) -
                   mu * MatrixXd::Identity(n, n));
}

}  // namespace

Tolerances Tolerances::from_environment() {
  Tolerances t;
  if (const char* env = std::getenv("CREDIBLE_SDP_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v > 0) || !std::isfinite(v)) {
      throw InitializationError(std::string("CREDIBLE_SDP_TOL is not a "
                                            "positive number: ") + env);
    }
    t.identity_check = v;
  }
  return t;
}

PointXZp advance(const StepSnapshot& s) {
  return {s.xm + s.dx, s.zm + s.dz, s.pm + s.dp};
}

std::vector<InvariantRecord> check_initialization(const SdpProblem& prob,
                                                  const InitialPoint& s0,
                                                  const ContractParams& params) {
  const int n = prob.n();
  const int m = prob.m();
  const double c = params.gap_ceiling;
  const Tolerances& tol = params.tol;
  Recorder rec(0);

  rec.above("init.F0_pd", safe_min_eig(prob.f0()), tol.pd_margin);

  double asym = 0;
  for (const auto& fi : prob.f()) asym = std::max(asym, max_asymmetry(fi.matrix()));
  rec.at_most("init.F_symmetric", asym, 0.0);

  const double sizes = std::min(n, m);
  rec.add("init.sizes", sizes, 1.0, sizes - 1.0, sizes >= 1.0);

  rec.above("init.Z_pd", safe_min_eig(s0.z), tol.pd_margin);

  const double dual_res = dual_residual(prob, s0.z).norm();
  rec.at_most("init.Z_feasible", dual_res,
              tol.lsqr_consistency * std::max(1.0, prob.b().norm()));

  rec.above("init.X_pd", safe_min_eig(s0.x), tol.pd_margin);

  const double gap = trace_product(s0.x.matrix(), s0.z.matrix());
  rec.at_most("init.gap_ceiling", gap, c);
  rec.above("init.gap_positive", gap, 0.0);

  double p_asym = 0;
  if (s0.p.size() == sym_size(n)) p_asym = max_asymmetry(mats(s0.p, n).matrix());
  rec.at_most("init.P_symmetric", p_asym, 0.0);

  const double rhs_norm = frob_norm(s0.x + prob.f0());
  auto& pf = rec.at_most(
      "init.p_feasible",
      s0.p.size() == m ? frob_norm(primal_residual(prob, s0.x, s0.p)) : kNaN,
      tol.lsqr_consistency * std::max(1.0, rhs_norm));
  pf.aux.push_back({"rhs_norm", rhs_norm});

  rec.above("init.epsilon_positive", params.epsilon, 0.0);

  const double s = params.sigma;
  rec.add("init.sigma_value", s, 1.0, std::min(s, 1.0 - s), s > 0 && s < 1);

  rec.at_most("init.phi_gap", std::abs(s0.phi - gap),
              tol.identity_check * std::max(1.0, std::abs(gap)));

  rec.add("init.phi_bounds", s0.phi, c, std::min(s0.phi, c - s0.phi),
          s0.phi > 0 && s0.phi <= c);

  auto& pc = rec.below("init.phi_contraction", s0.phi - kContraction * s0.phim,
                       0.0);
  pc.aux.push_back({"phim", s0.phim});

  rec.at_most("init.mu", std::abs(n * s0.mu - gap),
              tol.identity_check * std::max(1.0, std::abs(gap)));

  const double mu = gap / n;
  rec.at_most("init.central_path", neighborhood_xz(s0.x, s0.z, mu),
              kNeighborhood * mu);

  const MatrixXd zh = safe_sqrt(s0.z);
  const MatrixXd scaled = zh * s0.x.matrix() * zh;
  rec.at_most("init.central_path_scaled",
              frob_norm(MatrixXd(scaled - mu * MatrixXd::Identity(n, n))),
              kNeighborhood * mu);

  return rec.take();
}

std::vector<InvariantRecord> check_iteration(const SdpProblem& prob,
                                             const StepSnapshot& step,
                                             const PointXZp& next,
                                             int iteration,
                                             const ContractParams& params) {
  const int n = prob.n();
  const Tolerances& tol = params.tol;
  const double sigma = params.sigma;
  const MatrixXd eye = MatrixXd::Identity(n, n);
  const MatrixXd& xm = step.xm.matrix();
  const MatrixXd& zm = step.zm.matrix();
  const MatrixXd& dx = step.dx.matrix();
  const MatrixXd& dz = step.dz.matrix();
  const MatrixXd& x = next.x.matrix();
  const MatrixXd& z = next.z.matrix();

  const double phim = trace_product(xm, zm);
  const double mu = phim / n;
  const double smu = sigma * mu;
  const double phi = trace_product(x, z);
  const double mu_next = phi / n;

  const MatrixXd zh = safe_sqrt(step.zm);
  const MatrixXd zhi = safe_inv(zh);

  Recorder rec(iteration);

  // I1
  const double x_eig = safe_min_eig(next.x);
  const double z_eig = safe_min_eig(next.z);
  auto& i1 = rec.above("I1", std::fmin(x_eig, z_eig), tol.pd_margin);
  if (std::isnan(x_eig) || std::isnan(z_eig)) i1.measured = kNaN, i1.slack = kNaN, i1.passed = false;
  i1.aux = {{"x_min_eig", x_eig}, {"z_min_eig", z_eig}};

  // I2
  const double c = params.gap_ceiling;
  rec.add("I2", phi, c, std::min(phi, c - phi), phi > 0 && phi <= c);

  // I3
  auto& i3 = rec.below("I3", phi - kContraction * phim, 0.0);
  i3.aux = {{"phi", phi}, {"phim", phim}};

  // I4
  rec.at_most("I4", neighborhood_xz(next.x, next.z, mu_next),
              kNeighborhood * mu_next);

  // I5
  const MatrixXd scaled_dz = zhi * dz * zhi;
  rec.at_most("I5", frob_norm(scaled_dz), kStepNormBound);

  // I6
  rec.at_most("I6", frob_norm(MatrixXd(zhi * dx * dz * zh)),
              kNeighborhood * smu);

  // I7
  const double target = sigma * n * mu;
  const double i7 = trace_product(xm, dz) + trace_product(dx, zm) + phim - target;
  rec.at_most("I7", std::abs(i7),
              tol.identity_check * std::max({1.0, std::abs(phim), std::abs(target)}));

  // I8
  auto& i8 = rec.at_most("I8", std::abs(phi - sigma * phim),
                         tol.identity_check * std::max(1.0, std::abs(phim)));
  i8.aux = {{"ratio", phi / phim}};

  // I9
  const double r1 = (prob.fmat() * vecs(step.dz).data).norm();
  double r2 = kNaN;
  if (step.dp.size() == prob.m()) {
    r2 = frob_norm(MatrixXd(prob.combine(step.dp).matrix() + dx));
  }
  auto& i9 = rec.at_most("I9", std::fmax(r1, r2),
                         tol.lsqr_consistency * std::max(1.0, frob_norm(dx)));
  if (std::isnan(r1) || std::isnan(r2)) i9.measured = kNaN, i9.slack = kNaN, i9.passed = false;
  i9.aux = {{"dual_residual", r1}, {"primal_residual", r2}};

  // I10
  const MatrixXd r = smu * eye - zh * xm * zh;
  const MatrixXd lhs =
      0.5 * (zhi * (dz * xm + zm * dx) * zh + zh * (xm * dz + dx * zm) * zhi);
  auto& i10 = rec.at_most("I10", frob_norm(MatrixXd(lhs - r)),
                          tol.identity_check * std::max(1.0, frob_norm(r)));
  i10.aux = {{"r_norm", frob_norm(r)}};

  // I11
  const MatrixXd zh_next = safe_sqrt(next.z);
  const double left = frob_norm(MatrixXd(zh_next * x * zh_next - smu * eye));
  const double middle =
      0.5 * frob_norm(MatrixXd(zhi * (z * x - smu * eye) * zh +
                               zh * (x * z - smu * eye) * zhi));
  const double right = kNeighborhood * smu;
  const double link = tol.identity_check * std::fmax(1.0, std::fmax(left, middle));
  auto& i11 = rec.add("I11", left, right,
                      std::fmin(middle + link - left, right - middle),
                      left <= middle + link && middle <= right);
  if (std::isnan(left) || std::isnan(middle)) i11.slack = kNaN;
  i11.aux = {{"middle", middle}};

  // I12
  const double cert = safe_min_eig(SymMatrix(MatrixXd(eye + scaled_dz)));
  auto& i12 = rec.add("I12", cert, tol.pd_margin,
                      std::fmin(cert, z_eig) - tol.pd_margin,
                      cert > tol.pd_margin && z_eig > tol.pd_margin);
  if (std::isnan(cert) || std::isnan(z_eig)) i12.slack = kNaN;
  i12.aux = {{"z_min_eig", z_eig}};

  return rec.take();
}

ConvergenceBudget iteration_bound(double initial_gap, double epsilon,
                                  double sigma) {
  if (!(epsilon > 0) || !(sigma > 0 && sigma < 1)) {
    throw std::invalid_argument("iteration_bound needs epsilon > 0 and "
                                "0 < sigma < 1");
  }
  ConvergenceBudget b{initial_gap, epsilon, sigma, 0};
  if (!(initial_gap > epsilon)) return b;
  const double k = std::log(initial_gap / epsilon) / std::log(1.0 / sigma);
  b.bound_iterations = static_cast<int>(std::ceil(k - 1e-9 * std::max(1.0, k)));
  return b;
}

double min_slack(const std::vector<InvariantRecord>& records,
                 std::string_view id) {
  double s = std::numeric_limits<double>::infinity();
  for (const auto& r : records) {
    if (r.id == id) s = std::fmin(s, r.slack);
  }
  return s;
}

}  // namespace csdp
