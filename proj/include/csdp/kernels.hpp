#pragma once

#include <functional>

#include <Eigen/Core>

namespace csdp::kernels {

/// Serial symmetric Kronecker product. Reference for krons_parallel.
Eigen::MatrixXd krons_serial(const Eigen::MatrixXd& q1,
                             const Eigen::MatrixXd& q2);

/**
 * OpenMP symmetric Kronecker product, parallel over output columns. Every
 * entry is produced by the same arithmetic as krons_serial, so the results
 * are bit-identical. Below min_parallel_dim the loop runs on one thread.
 */
Eigen::MatrixXd krons_parallel(const Eigen::MatrixXd& q1,
                               const Eigen::MatrixXd& q2,
                               int min_parallel_dim = 12);

/**
 * Calls task(0) .. task(count - 1), each exactly once, in index order on the
 * calling thread. Reference for for_each_group_parallel.
 */
void for_each_group_serial(int count, const std::function<void(int)>& task);

/**
 * Same contract as for_each_group_serial with the calls spread over OpenMP
 * threads; tasks must only write state owned by their index. If tasks throw,
 * the exception of the lowest failing index is rethrown after all tasks ran.
 */
void for_each_group_parallel(int count, const std::function<void(int)>& task,
                             int min_parallel_count = 4);

}  // namespace csdp::kernels
