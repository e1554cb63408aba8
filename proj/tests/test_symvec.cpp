#include <doctest.h>

#include <cmath>
#include <random>

#include "csdp/errors.hpp"
#include "csdp/symvec.hpp"
#include "oracles.hpp"

using namespace csdp;
using Eigen::MatrixXd;
using Eigen::VectorXd;

TEST_CASE("sym_size, sym_dim and sym_index agree with the packing order") {
  for (int n = 1; n <= 6; ++n) {
    CHECK(sym_dim(sym_size(n)) == n);
    int k = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) CHECK(sym_index(i, j, n) == k++);
    }
  }
  CHECK(sym_dim(4) == -1);
  CHECK(sym_dim(0) == -1);
}

TEST_CASE("SymMatrix keeps the symmetric part and validates shape") {
  MatrixXd a(2, 2);
  a << 1, 2, 4, 3;
  const SymMatrix s(a);
  CHECK(s(0, 1) == 3.0);
  CHECK(s(1, 0) == 3.0);
  CHECK_THROWS_AS(SymMatrix::checked(a), SymmetryError);
  CHECK_THROWS_AS(SymMatrix(MatrixXd(2, 3)), DimensionError);
  CHECK_THROWS_AS(SymMatrix(MatrixXd(0, 0)), DimensionError);
  CHECK(SymMatrix::identity(3).matrix() == MatrixXd::Identity(3, 3));
  CHECK((s + s).matrix() == (s * 2.0).matrix());
  CHECK((s - s) == SymMatrix::zero(2));
}

TEST_CASE("vecs and svec match the reference packing") {
  std::mt19937_64 rng(11);
  for (int n = 1; n <= 5; ++n) {
    const MatrixXd m = oracle::random_symmetric(n, rng);
    CHECK(vecs(SymMatrix(m)).data.isApprox(oracle::vecs(m), 1e-15));
    CHECK(svec(SymMatrix(m)).data.isApprox(oracle::pack(m, 2.0), 1e-15));
  }
}

TEST_CASE("smat reproduces the documented 2x2 example exactly") {
  VectorXd v(3);
  v << 0.4, -0.2, 0.2;
  MatrixXd want(2, 2);
  want << 0.4, -0.1, -0.1, 0.2;
  CHECK(smat(v, 2).matrix() == want);
}

TEST_CASE("vectorizations reject lengths that do not fit n") {
  CHECK_THROWS_AS(mats(VectorXd::Zero(4), 2), DimensionError);
  CHECK_THROWS_AS(smat(VectorXd::Zero(2), 2), DimensionError);
}

TEST_CASE("round trips and the trace isometry hold on random matrices") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 6;
    const MatrixXd a = oracle::random_symmetric(n, rng);
    const MatrixXd b = oracle::random_symmetric(n, rng);
    const SymMatrix sa(a);
    CHECK(oracle::rel_err(mats(vecs(sa)).matrix(), a) < 1e-14);
    CHECK(oracle::rel_err(smat(svec(sa)).matrix(), a) < 1e-14);
    const double lhs = vecs(sa).data.dot(vecs(SymMatrix(b)).data);
    const double rhs = (a * b).trace();
    CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(rhs)));
  }
}

TEST_CASE("krons matches the column-by-column definition") {
  std::mt19937_64 rng(7);
  for (int n = 1; n <= 5; ++n) {
    const MatrixXd q1 = oracle::random_matrix(n, n, rng);
    const MatrixXd q2 = oracle::random_matrix(n, n, rng);
    CHECK(oracle::rel_err(krons(q1, q2), oracle::krons(q1, q2)) < 1e-13);
  }
}

TEST_CASE("krons acts as the symmetrized two-sided product") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 5;
    const MatrixXd q1 = oracle::random_matrix(n, n, rng);
    const MatrixXd q2 = oracle::random_matrix(n, n, rng);
    const MatrixXd m = oracle::random_symmetric(n, rng);
    const VectorXd lhs = krons(q1, q2) * oracle::vecs(m);
    const VectorXd rhs =
        oracle::vecs(0.5 * (q1 * m * q2.transpose() + q2 * m * q1.transpose()));
    CHECK((lhs - rhs).norm() <= 1e-12 * std::max(1.0, rhs.norm()));
  }
}

TEST_CASE("krons of identities is the identity and is symmetric in its operands") {
  for (int n = 1; n <= 4; ++n) {
    const MatrixXd i = MatrixXd::Identity(n, n);
    CHECK(krons(i, i) == MatrixXd::Identity(sym_size(n), sym_size(n)));
  }
  std::mt19937_64 rng(3);
  const MatrixXd q1 = oracle::random_matrix(3, 3, rng);
  const MatrixXd q2 = oracle::random_matrix(3, 3, rng);
  CHECK(krons(q1, q2).isApprox(krons(q2, q1), 1e-15));
  CHECK_THROWS_AS(krons(MatrixXd(2, 2), MatrixXd(3, 3)), DimensionError);
}
