#pragma once

#include <optional>

#include <Eigen/Core>

#include "csdp/symvec.hpp"

namespace csdp {

/// Default absolute margin on the minimum eigenvalue for "S ≻ 0".
inline constexpr double kPdMargin = 1e-12;

/// Witness that a symmetric matrix is positive definite.
struct PdCertificate {
  double min_eigenvalue;
  double tolerance;
};

/**
 * Outcome of a positive-definiteness test. Failure is a value, not an
 * exception; the smallest eigenvalue is reported either way.
 */
class PdCheck {
 public:
  PdCheck(double min_eigenvalue, double tolerance)
      : min_eigenvalue_(min_eigenvalue), tolerance_(tolerance) {}

  explicit operator bool() const { return min_eigenvalue_ > tolerance_; }
  double min_eigenvalue() const { return min_eigenvalue_; }
  double tolerance() const { return tolerance_; }

  std::optional<PdCertificate> certificate() const {
    if (!*this) return std::nullopt;
    return PdCertificate{min_eigenvalue_, tolerance_};
  }

 private:
  double min_eigenvalue_;
  double tolerance_;
};

/// Smallest eigenvalue of s.
double min_eigenvalue(const SymMatrix& s);

PdCheck is_pd(const SymMatrix& s, double tol = kPdMargin);

/**
 * Symmetric positive-definite square root T with T·T = S, built from the
 * eigendecomposition. Throws ContractViolation if S is not positive definite.
 */
SymMatrix sym_sqrt(const SymMatrix& s);

/// Inverse of a symmetric positive-definite matrix (ContractViolation otherwise).
SymMatrix sym_inv(const SymMatrix& s);

/// log det S as a sum of log-eigenvalues (ContractViolation if not PD).
double log_det(const SymMatrix& s);

/// ⟨A, B⟩ = Tr(BᵀA).
double trace_inner(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);
inline double trace_inner(const SymMatrix& a, const SymMatrix& b) {
  return trace_inner(a.matrix(), b.matrix());
}

/// Tr(A·B) for general square A, B (no transpose).
double trace_product(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);

double frob_norm(const Eigen::MatrixXd& m);
inline double frob_norm(const SymMatrix& m) { return frob_norm(m.matrix()); }

/// Default lsqr consistency tolerance, relative to max(1, ‖b‖₂).
inline constexpr double kLsqrTolerance = 1e-9;

/**
 * Minimum-norm least-squares solve: among the minimizers of ‖A·x − b‖₂
 * returns the one of smallest ‖x‖₂.
 *
 * The function carries the default lsqr contract A·x = b: if the residual
 * exceeds tol·max(1, ‖b‖₂) an LsqrContractViolation is thrown, tagged with
 * `label` so callers can tell which equation failed. Pass tol < 0 to skip
 * the contract and accept a plain least-squares answer.
 */
Eigen::VectorXd lsqr_solve(const Eigen::MatrixXd& a, const Eigen::VectorXd& b,
                           double tol = kLsqrTolerance,
                           const char* label = "lsqr");

}  // namespace csdp
