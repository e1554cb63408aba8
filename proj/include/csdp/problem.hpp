#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "csdp/linalg.hpp"
#include "csdp/symvec.hpp"

namespace csdp {

/**
 * Optional run parameters a problem file may carry next to its data. Command
 * line options take precedence over these.
 */
struct ProblemHints {
  std::optional<SymMatrix> x0;
  std::optional<double> epsilon;
  std::optional<double> nu;
  std::optional<double> sigma;
  std::optional<double> gap_ceiling;
};

/**
 * Semidefinite program in the paired forms
 *
 *   dual:    sup ⟨F₀, Z⟩  s.t. ⟨Fᵢ, Z⟩ + bᵢ = 0, Z ⪰ 0
 *   primal:  inf ⟨b, p⟩   s.t. F₀ + Σ pᵢFᵢ + X = 0, X ⪰ 0
 *
 * Immutable after construction. The stacked constraint matrix
 * Fmat = [vecs(F₁); …; vecs(Fₘ)] (m × n(n+1)/2) is cached.
 */
class SdpProblem {
 public:
  /**
   * Validates dimensions (n ≥ 1, m ≥ 1, |b| = m, every Fᵢ n×n). Throws
   * ContractViolation when require_pd_f0 is set and F₀ is not positive
   * definite.
   */
  static SdpProblem create(SymMatrix f0, std::vector<SymMatrix> f,
                           Eigen::VectorXd b, ProblemHints hints = {},
                           bool require_pd_f0 = true);

  int n() const { return f0_.dim(); }
  int m() const { return static_cast<int>(f_.size()); }
  const SymMatrix& f0() const { return f0_; }
  const std::vector<SymMatrix>& f() const { return f_; }
  const SymMatrix& f(int i) const { return f_.at(i); }
  const Eigen::VectorXd& b() const { return b_; }
  const Eigen::MatrixXd& fmat() const { return fmat_; }
  const PdCheck& f0_check() const { return f0_check_; }
  const ProblemHints& hints() const { return hints_; }

  /// Σ pᵢFᵢ.
  SymMatrix combine(const Eigen::VectorXd& p) const;

 private:
  SdpProblem(SymMatrix f0, std::vector<SymMatrix> f, Eigen::VectorXd b,
             Eigen::MatrixXd fmat, PdCheck f0_check, ProblemHints hints)
      : f0_(std::move(f0)),
        f_(std::move(f)),
        b_(std::move(b)),
        fmat_(std::move(fmat)),
        f0_check_(f0_check),
        hints_(std::move(hints)) {}

  SymMatrix f0_;
  std::vector<SymMatrix> f_;
  Eigen::VectorXd b_;
  Eigen::MatrixXd fmat_;
  PdCheck f0_check_;
  ProblemHints hints_;
};

/**
 * Parses a problem file:
 *
 *   {"n": 2, "m": 3, "F0": [[..],[..]], "F": [[[..]],...], "b": [..],
 *    "X0": [[..]], "epsilon": 1e-8, "nu": 0.4714, "sigma": 0.75,
 *    "gap_ceiling": 0.1}
 *
 * X0 onwards are optional. Matrices are row-major and must be exactly
 * symmetric. Throws ParseError, SymmetryError or ContractViolation (F₀ not
 * positive definite).
 */
SdpProblem load_problem(std::string_view json_text);
SdpProblem load_problem_file(const std::filesystem::path& path);

/// Serializes a problem (and its hints) in the load_problem format.
std::string problem_to_json(const SdpProblem& prob);

/// SHA-256 (hex) of the problem data n, m, F₀, Fᵢ, b; hints are excluded.
std::string problem_hash(const SdpProblem& prob);

/// The bundled 2×2, three-constraint example with X₀, ε = 1e-8, σ = 0.75.
const SdpProblem& running_example();

/// ⟨F₀, Z⟩.
double dual_cost(const SdpProblem& prob, const SymMatrix& z);
/// ⟨b, p⟩.
double primal_cost(const SdpProblem& prob, const Eigen::VectorXd& p);

/// G(X, Z) = Tr(XZ).
double duality_gap(const SymMatrix& x, const SymMatrix& z);

/// F₀ + Σ pᵢFᵢ + X.
SymMatrix primal_residual(const SdpProblem& prob, const SymMatrix& x,
                          const Eigen::VectorXd& p);
/// ⟨Fᵢ, Z⟩ + bᵢ for i = 1..m.
Eigen::VectorXd dual_residual(const SdpProblem& prob, const SymMatrix& z);

/// (n + ν√n)·log Tr(XZ) − log det(XZ) − n·log n. Requires X, Z ≻ 0.
double potential_tanabe(const SymMatrix& x, const SymMatrix& z, double nu);

/// log Tr(XZ). Throws ContractViolation if the gap is not positive.
double potential_loggap(const SymMatrix& x, const SymMatrix& z);

/// −log det X − log det Z. Requires X, Z ≻ 0.
double barrier(const SymMatrix& x, const SymMatrix& z);

}  // namespace csdp
