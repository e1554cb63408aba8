#include "csdp/generate.hpp"

#include <random>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "csdp/linalg.hpp"
#include "csdp/monitor.hpp"
#include "csdp/solver.hpp"

namespace csdp {

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

MatrixXd gaussian(int rows, int cols, std::mt19937_64& rng) {
  std::normal_distribution<double> d;
  MatrixXd m(rows, cols);
  for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = d(rng);
  return m;
}

MatrixXd random_orthogonal(int n, std::mt19937_64& rng) {
  Eigen::HouseholderQR<MatrixXd> qr(gaussian(n, n, rng));
  return qr.householderQ();
}

SymMatrix spectrum(int n, double lo, double hi, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(lo, hi);
  VectorXd eig(n);
  for (int i = 0; i < n; ++i) eig(i) = u(rng);
  const MatrixXd q = random_orthogonal(n, rng);
  return SymMatrix(MatrixXd(q * eig.asDiagonal() * q.transpose()));
}

std::optional<SdpProblem> attempt(int n, std::mt19937_64& rng) {
  const int m = sym_size(n);
  std::uniform_real_distribution<double> u01(0.0, 1.0);

  std::vector<SymMatrix> f;
  MatrixXd fmat(m, m);
  for (int i = 0; i < m; ++i) {
    f.emplace_back(gaussian(n, n, rng));
    fmat.row(i) = vecs(f.back()).data.transpose();
  }
  Eigen::JacobiSVD<MatrixXd> svd(fmat);
  const VectorXd sv = svd.singularValues();
  if (sv(sv.size() - 1) < 1e-3 * sv(0)) return std::nullopt;

  const SymMatrix z0 = spectrum(n, 0.5, 2.0, rng);
  const VectorXd b = -fmat * vecs(z0).data;
  const SymMatrix f0 = spectrum(n, 0.5, 2.0, rng);

  const double gap = 0.02 + 0.06 * u01(rng);
  const double mu = gap / n;
  MatrixXd s = gaussian(n, n, rng);
  s = 0.5 * (s + s.transpose());
  s *= 0.05 / frob_norm(s);
  const MatrixXd zhi = sym_inv(sym_sqrt(z0)).matrix();
  const SymMatrix x0(MatrixXd(mu * zhi * (MatrixXd::Identity(n, n) + s) * zhi));

  ProblemHints hints;
  hints.x0 = x0;
  hints.epsilon = 1e-8;
  hints.sigma = 0.75;
  SdpProblem prob = SdpProblem::create(f0, std::move(f), b, hints);

  const SolverOptions opts = SolverOptions::for_problem(prob);
  try {
    const IterateState st = initialize(prob, std::nullopt, opts);
    const ContractParams params{effective_sigma(prob, opts), opts.epsilon,
                                opts.gap_ceiling, opts.tolerances};
    const auto records = check_initialization(
        prob, {st.x, st.z, st.p, st.phi, st.phim, st.mu}, params);
    for (const auto& r : records) {
      if (!r.passed) return std::nullopt;
    }
  } catch (const std::exception&) {
    return std::nullopt;
  }
  return prob;
}

}  // namespace

SdpProblem feasible_instance(int n, std::uint64_t seed) {
  if (n < 1 || n > 8) {
    throw std::invalid_argument("feasible_instance: n must be in [1, 8]");
  }
  std::mt19937_64 rng(seed);
  for (int tries = 0; tries < 1000; ++tries) {
    if (auto prob = attempt(n, rng)) return *std::move(prob);
  }
  throw std::runtime_error("feasible_instance: no instance found");
}

}  // namespace csdp
