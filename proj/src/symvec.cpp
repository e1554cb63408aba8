#include "csdp/symvec.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "csdp/errors.hpp"
#include "csdp/kernels.hpp"

namespace csdp {

namespace {

void require_square(const Eigen::MatrixXd& m, const char* who) {
  if (m.rows() == 0 || m.rows() != m.cols()) {
    throw DimensionError(std::string(who) + ": expected a non-empty square matrix, got " +
                         std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

SymVec vectorize(const SymMatrix& m, double off_diag) {
  const int n = m.dim();
  SymVec v{n, Eigen::VectorXd(sym_size(n))};
  int k = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      v.data(k++) = i == j ? m(i, j) : off_diag * m(i, j);
    }
  }
  return v;
}

SymMatrix unvectorize(const Eigen::VectorXd& v, int n, double off_diag,
                      const char* who) {
  if (n < 1 || v.size() != sym_size(n)) {
    throw DimensionError(std::string(who) + ": vector of length " +
                         std::to_string(v.size()) + " does not match n = " +
                         std::to_string(n));
  }
  Eigen::MatrixXd m(n, n);
  int k = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      const double x = i == j ? v(k) : v(k) / off_diag;
      m(i, j) = x;
      m(j, i) = x;
      ++k;
    }
  }
  return SymMatrix(m);
}

}  // namespace

SymMatrix::SymMatrix(const Eigen::MatrixXd& m) {
  require_square(m, "SymMatrix");
  m_ = 0.5 * (m + m.transpose());
}

SymMatrix SymMatrix::checked(const Eigen::MatrixXd& m, double tol) {
  require_square(m, "SymMatrix");
  const double asym = (m - m.transpose()).cwiseAbs().maxCoeff();
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if (asym > tol * scale) {
    throw SymmetryError("matrix is not symmetric: max |a_ij - a_ji| = " +
                        std::to_string(asym));
  }
  return SymMatrix(m);
}

SymMatrix SymMatrix::identity(int n) {
  return SymMatrix(Eigen::MatrixXd::Identity(n, n));
}

SymMatrix SymMatrix::zero(int n) {
  return SymMatrix(Eigen::MatrixXd::Zero(n, n));
}

SymMatrix SymMatrix::operator+(const SymMatrix& rhs) const {
  if (dim() != rhs.dim()) throw DimensionError("SymMatrix +: dimension mismatch");
  return SymMatrix(m_ + rhs.m_);
}

SymMatrix SymMatrix::operator-(const SymMatrix& rhs) const {
  if (dim() != rhs.dim()) throw DimensionError("SymMatrix -: dimension mismatch");
  return SymMatrix(m_ - rhs.m_);
}

SymMatrix SymMatrix::operator*(double s) const { return SymMatrix(m_ * s); }

int sym_dim(int len) {
  for (int n = 1; sym_size(n) <= len; ++n) {
    if (sym_size(n) == len) return n;
  }
  return -1;
}

int sym_index(int i, int j, int n) {
  if (i > j) std::swap(i, j);
  // Entries before row i: n + (n-1) + ... + (n-i+1).
  return i * n - i * (i - 1) / 2 + (j - i);
}

SymVec vecs(const SymMatrix& m) { return vectorize(m, std::numbers::sqrt2); }

SymMatrix mats(const Eigen::VectorXd& v, int n) {
  return unvectorize(v, n, std::numbers::sqrt2, "mats");
}

SymVec svec(const SymMatrix& m) { return vectorize(m, 2.0); }

SymMatrix smat(const Eigen::VectorXd& v, int n) {
  return unvectorize(v, n, 2.0, "smat");
}

Eigen::MatrixXd krons(const Eigen::MatrixXd& q1, const Eigen::MatrixXd& q2) {
  return kernels::krons_parallel(q1, q2);
}

}  // namespace csdp
