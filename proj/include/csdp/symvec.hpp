#pragma once

#include <Eigen/Core>

namespace csdp {

/**
 * Dense symmetric matrix. Construction from an arbitrary square matrix keeps
 * its symmetric part, so entries (i, j) and (j, i) are always bit-identical.
 */
class SymMatrix {
 public:
  SymMatrix() = default;

  /// Keeps ½(m + mᵀ). Throws DimensionError on empty or non-square input.
  explicit SymMatrix(const Eigen::MatrixXd& m);

  /**
   * Accepts m only if max|mᵢⱼ − mⱼᵢ| ≤ tol·max(1, max|mᵢⱼ|); throws
   * SymmetryError otherwise.
   */
  static SymMatrix checked(const Eigen::MatrixXd& m, double tol = 0.0);

  static SymMatrix identity(int n);
  static SymMatrix zero(int n);

  int dim() const { return static_cast<int>(m_.rows()); }
  const Eigen::MatrixXd& matrix() const { return m_; }
  double operator()(int i, int j) const { return m_(i, j); }

  SymMatrix operator+(const SymMatrix& rhs) const;
  SymMatrix operator-(const SymMatrix& rhs) const;
  SymMatrix operator*(double s) const;

  bool operator==(const SymMatrix& rhs) const { return m_ == rhs.m_; }

 private:
  Eigen::MatrixXd m_;
};

/// Symmetric-vectorized matrix; data has n(n+1)/2 entries.
struct SymVec {
  int n = 0;
  Eigen::VectorXd data;
};

/// n(n+1)/2.
constexpr int sym_size(int n) { return n * (n + 1) / 2; }

/// Inverse of sym_size; returns -1 if len is not triangular.
int sym_dim(int len);

// Entry ordering shared by vecs/mats/svec/smat/krons: (i, j) with i ≤ j,
// row-major over the upper triangle.
int sym_index(int i, int j, int n);

/// [M₁₁, …, √2·Mᵢⱼ, …, Mₙₙ]; ⟨vecs A, vecs B⟩ = Tr(AB).
SymVec vecs(const SymMatrix& m);

/// Inverse of vecs. Throws DimensionError if v.size() ≠ n(n+1)/2.
SymMatrix mats(const Eigen::VectorXd& v, int n);
inline SymMatrix mats(const SymVec& v) { return mats(v.data, v.n); }

/// Like vecs with off-diagonals scaled by 2 instead of √2.
SymVec svec(const SymMatrix& m);

/// Inverse of svec.
SymMatrix smat(const Eigen::VectorXd& v, int n);
inline SymMatrix smat(const SymVec& v) { return smat(v.data, v.n); }

/**
 * Symmetric Kronecker product Q1 ⊗ₛ Q2 as a dense N×N matrix,
 * N = n(n+1)/2, defined by
 *
 *   (Q1 ⊗ₛ Q2)·vecs(M) = vecs(½(Q1·M·Q2ᵀ + Q2·M·Q1ᵀ))
 *
 * for every symmetric M. Q1 and Q2 must be square of equal size but need not
 * be symmetric.
 */
Eigen::MatrixXd krons(const Eigen::MatrixXd& q1, const Eigen::MatrixXd& q2);

}  // namespace csdp
