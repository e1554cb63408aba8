#pragma once

#include <cstdint>

#include "csdp/problem.hpp"

namespace csdp {

/**
 * Random instance with n×n data and m = n(n+1)/2 constraints whose bundled
 * X0 hint passes every initialization contract at the default tolerances:
 * Z0 has eigenvalues in [0.5, 2], X0 sits within 0.05μ of μZ0⁻¹ in the
 * scaled norm, Tr(X0Z0) lies in [0.02, 0.08] and the σ hint is 0.75, inside
 * the 0.76 contraction bound for every n. Deterministic in
 * (n, seed). Throws std::invalid_argument unless 1 ≤ n ≤ 8.
 */
SdpProblem feasible_instance(int n, std::uint64_t seed);

}  // namespace csdp
