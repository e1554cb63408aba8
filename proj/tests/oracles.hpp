#pragma once

// Reference computations written independently of the library: plain loops
// and textbook algorithms that share no code with src/.

#include <cmath>
#include <cstdint>
#include <random>

#include <Eigen/Dense>

namespace oracle {

using Eigen::MatrixXd;
using Eigen::VectorXd;

inline MatrixXd example_f0() {
  MatrixXd m(2, 2);
  m << 1, 0, 0, 0.1;
  return m;
}

inline MatrixXd example_f(int i) {
  MatrixXd m(2, 2);
  if (i == 0) m << -0.750999, 0.00499, 0.00499, 0.0001;
  if (i == 1) m << 0.03992, -0.999101, -0.999101, 0.00002;
  if (i == 2) m << 0.0016, 0.00004, 0.00004, -0.999999;
  return m;
}

inline VectorXd example_b() {
  VectorXd b(3);
  b << 0.4, -0.2, 0.2;
  return b;
}

inline MatrixXd example_x0() {
  MatrixXd m(2, 2);
  m << 0.3409, 0.2407, 0.2407, 0.9021;
  return m;
}

/// Upper triangle, row by row, off-diagonals times `scale`.
inline VectorXd pack(const MatrixXd& m, double scale) {
  const int n = static_cast<int>(m.rows());
  VectorXd v(n * (n + 1) / 2);
  int k = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) v(k++) = i == j ? m(i, j) : scale * m(i, j);
  }
  return v;
}

inline MatrixXd unpack(const VectorXd& v, int n, double scale) {
  MatrixXd m(n, n);
  int k = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      const double x = i == j ? v(k) : v(k) / scale;
      m(i, j) = x;
      m(j, i) = x;
      ++k;
    }
  }
  return m;
}

inline VectorXd vecs(const MatrixXd& m) { return pack(m, std::sqrt(2.0)); }
inline MatrixXd mats(const VectorXd& v, int n) { return unpack(v, n, std::sqrt(2.0)); }

/// Q1 ⊗ₛ Q2 column by column from its defining action on the vecs basis.
inline MatrixXd krons(const MatrixXd& q1, const MatrixXd& q2) {
  const int n = static_cast<int>(q1.rows());
  const int big = n * (n + 1) / 2;
  MatrixXd k(big, big);
  for (int c = 0; c < big; ++c) {
    const MatrixXd e = mats(VectorXd::Unit(big, c), n);
    k.col(c) = vecs(0.5 * (q1 * e * q2.transpose() + q2 * e * q1.transpose()));
  }
  return k;
}

/// Positive definiteness by attempting a Cholesky factorization.
inline bool cholesky_pd(const MatrixXd& s) {
  Eigen::LLT<MatrixXd> llt(s);
  return llt.info() == Eigen::Success;
}

/// Minimum-norm least-squares solution through the SVD pseudo-inverse.
inline VectorXd pinv_solve(const MatrixXd& a, const VectorXd& b) {
  Eigen::JacobiSVD<MatrixXd> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const VectorXd& s = svd.singularValues();
  const double cut = 1e-12 * (s.size() ? s(0) : 0.0);
  VectorXd ub = svd.matrixU().transpose() * b;
  VectorXd y = VectorXd::Zero(a.cols());
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s(i) > cut) y(i) = ub(i) / s(i);
  }
  return svd.matrixV() * y;
}

/// Orthonormal basis of the null space of a, from the SVD.
inline MatrixXd null_space(const MatrixXd& a) {
  Eigen::JacobiSVD<MatrixXd> svd(a, Eigen::ComputeFullV);
  const VectorXd& s = svd.singularValues();
  const double cut = 1e-12 * (s.size() ? s(0) : 0.0);
  Eigen::Index rank = 0;
  while (rank < s.size() && s(rank) > cut) ++rank;
  return svd.matrixV().rightCols(a.cols() - rank);
}

/// Square root by Denman-Beavers iteration.
inline MatrixXd sqrtm(const MatrixXd& s) {
  MatrixXd y = s;
  MatrixXd z = MatrixXd::Identity(s.rows(), s.cols());
  for (int it = 0; it < 100; ++it) {
    const MatrixXd yn = 0.5 * (y + z.inverse());
    const MatrixXd zn = 0.5 * (z + y.inverse());
    y = yn;
    z = zn;
  }
  return y;
}

/// Number of σ-contractions that take gap below or onto ε, by counting.
inline int contractions_to(double gap, double epsilon, double sigma) {
  int k = 0;
  long double g = gap;
  while (g > epsilon) {
    g *= sigma;
    ++k;
  }
  return k;
}

inline MatrixXd random_matrix(int r, int c, std::mt19937_64& rng) {
  std::normal_distribution<double> d;
  MatrixXd m(r, c);
  for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = d(rng);
  return m;
}

inline MatrixXd random_symmetric(int n, std::mt19937_64& rng) {
  const MatrixXd a = random_matrix(n, n, rng);
  return 0.5 * (a + a.transpose());
}

inline MatrixXd random_spd(int n, std::mt19937_64& rng, double shift = 0.5) {
  const MatrixXd a = random_matrix(n, n, rng);
  return a * a.transpose() / n + shift * MatrixXd::Identity(n, n);
}

inline double rel_err(const MatrixXd& got, const MatrixXd& want) {
  return (got - want).norm() / std::max(1.0, want.norm());
}

}  // namespace oracle
