#include <numbers>
#include <vector>

#include "csdp/errors.hpp"
#include "csdp/kernels.hpp"
#include "csdp/symvec.hpp"

namespace csdp::kernels {

namespace {

struct Pair {
  int i;
  int j;
};

std::vector<Pair> upper_pairs(int n) {
  std::vector<Pair> pairs;
  pairs.reserve(sym_size(n));
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) pairs.push_back({i, j});
  }
  return pairs;
}

int checked_dim(const Eigen::MatrixXd& q1, const Eigen::MatrixXd& q2) {
  if (q1.rows() == 0 || q1.rows() != q1.cols() || q2.rows() != q2.cols() ||
      q1.rows() != q2.rows()) {
    throw DimensionError("krons: operands must be square and of equal size");
  }
  return static_cast<int>(q1.rows());
}

// Row (a, b) of vecs(½(Q1·E·Q2ᵀ + Q2·E·Q1ᵀ)) where E = mats(e_col) and col
// is the index of (i, j).
inline double entry(const Eigen::MatrixXd& q1, const Eigen::MatrixXd& q2,
                    Pair row, Pair col) {
  const auto [a, b] = row;
  const auto [i, j] = col;
  double v;
  if (i == j) {
    v = 0.5 * (q1(a, i) * q2(b, i) + q2(a, i) * q1(b, i));
  } else {
    v = 0.5 * (q1(a, i) * q2(b, j) + q1(a, j) * q2(b, i) + q2(a, i) * q1(b, j) +
               q2(a, j) * q1(b, i)) /
        std::numbers::sqrt2;
  }
  return a == b ? v : std::numbers::sqrt2 * v;
}

}  // namespace

Eigen::MatrixXd krons_serial(const Eigen::MatrixXd& q1,
                             const Eigen::MatrixXd& q2) {
  const int n = checked_dim(q1, q2);
  const auto pairs = upper_pairs(n);
  const int len = static_cast<int>(pairs.size());
  Eigen::MatrixXd k(len, len);
  for (int c = 0; c < len; ++c) {
    for (int r = 0; r < len; ++r) k(r, c) = entry(q1, q2, pairs[r], pairs[c]);
  }
  return k;
}

Eigen::MatrixXd krons_parallel(const Eigen::MatrixXd& q1,
                               const Eigen::MatrixXd& q2,
                               int min_parallel_dim) {
  const int n = checked_dim(q1, q2);
  const auto pairs = upper_pairs(n);
  const int len = static_cast<int>(pairs.size());
  Eigen::MatrixXd k(len, len);
#pragma omp parallel for schedule(static) if (n >= min_parallel_dim)
  for (int c = 0; c < len; ++c) {
    for (int r = 0; r < len; ++r) k(r, c) = entry(q1, q2, pairs[r], pairs[c]);
  }
  return k;
}

}  // namespace csdp::kernels
