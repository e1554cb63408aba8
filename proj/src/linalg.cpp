#include "csdp/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

#include "csdp/errors.hpp"

namespace csdp {

namespace {

Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(const SymMatrix& s) {
  return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(s.matrix());
}

void require_pd(const Eigen::VectorXd& lambda, const char* who) {
  const double lo = lambda.minCoeff();
  if (!(lo > kPdMargin)) {
    throw ContractViolation(std::string(who) +
                                ": argument is not positive definite (min "
                                "eigenvalue " +
                                std::to_string(lo) + ")",
                            lo);
  }
}

SymMatrix spectral(const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>& es,
                   const Eigen::VectorXd& f) {
  const auto& v = es.eigenvectors();
  return SymMatrix(v * f.asDiagonal() * v.transpose());
}

}  // namespace

double min_eigenvalue(const SymMatrix& s) {
  return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(s.matrix(),
                                                        Eigen::EigenvaluesOnly)
      .eigenvalues()
      .minCoeff();
}

PdCheck is_pd(const SymMatrix& s, double tol) {
  return PdCheck(min_eigenvalue(s), tol);
}

SymMatrix sym_sqrt(const SymMatrix& s) {
  const auto es = eig(s);
  require_pd(es.eigenvalues(), "sym_sqrt");
  return spectral(es, es.eigenvalues().cwiseSqrt());
}

SymMatrix sym_inv(const SymMatrix& s) {
  const auto es = eig(s);
  require_pd(es.eigenvalues(), "sym_inv");
  return spectral(es, es.eigenvalues().cwiseInverse());
}

double log_det(const SymMatrix& s) {
  const Eigen::VectorXd lambda =
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(s.matrix(),
                                                     Eigen::EigenvaluesOnly)
          .eigenvalues();
  require_pd(lambda, "log_det");
  return lambda.array().log().sum();
}

double trace_inner(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("trace_inner: dimension mismatch");
  }
  return a.cwiseProduct(b).sum();
}

double trace_product(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  if (a.cols() != b.rows() || a.rows() != b.cols()) {
    throw DimensionError("trace_product: dimension mismatch");
  }
  return a.cwiseProduct(b.transpose()).sum();
}

double frob_norm(const Eigen::MatrixXd& m) { return m.norm(); }

Eigen::VectorXd lsqr_solve(const Eigen::MatrixXd& a, const Eigen::VectorXd& b,
                           double tol, const char* label) {
  if (a.rows() != b.size()) {
    throw DimensionError(std::string(label) + ": A has " +
                         std::to_string(a.rows()) + " rows but b has " +
                         std::to_string(b.size()) + " entries");
  }
  if (!b.allFinite() || !a.allFinite()) {
    throw ContractViolation(std::string(label) + ": non-finite input", NAN);
  }
  if (a.size() == 0 || a.isZero(0.0)) {
    throw DimensionError(std::string(label) + ": A must be nonzero");
  }
  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(a);
  Eigen::VectorXd x = cod.solve(b);
  if (tol >= 0.0) {
    const double residual = (a * x - b).norm();
    const double bound = tol * std::max(1.0, b.norm());
    if (!(residual <= bound)) {
      throw LsqrContractViolation(std::string(label) + ": residual " +
                                      std::to_string(residual) +
                                      " exceeds " + std::to_string(bound),
                                  residual, bound);
    }
  }
  return x;
}

}  // namespace csdp
