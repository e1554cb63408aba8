#include <exception>
#include <vector>

#include "csdp/kernels.hpp"

namespace csdp::kernels {

void for_each_group_serial(int count, const std::function<void(int)>& task) {
  for (int i = 0; i < count; ++i) task(i);
}

void for_each_group_parallel(int count, const std::function<void(int)>& task,
                             int min_parallel_count) {
  std::vector<std::exception_ptr> errors(count > 0 ? count : 0);
#pragma omp parallel for schedule(dynamic) if (count >= min_parallel_count)
  for (int i = 0; i < count; ++i) {
    try {
      task(i);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace csdp::kernels
