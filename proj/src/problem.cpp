#include "csdp/problem.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <openssl/evp.h>

#include "csdp/detail/json_io.hpp"
#include "csdp/errors.hpp"

namespace csdp {

using detail::read_matrix;
using detail::read_number;
using detail::read_vector;

SdpProblem SdpProblem::create(SymMatrix f0, std::vector<SymMatrix> f,
                              Eigen::VectorXd b, ProblemHints hints,
                              bool require_pd_f0) {
  const int n = f0.dim();
  const int m = static_cast<int>(f.size());
  if (n < 1) throw DimensionError("problem: n must be at least 1");
  if (m < 1) throw DimensionError("problem: m must be at least 1");
  if (b.size() != m) {
    throw DimensionError("problem: |b| = " + std::to_string(b.size()) +
                         " but m = " + std::to_string(m));
  }
  Eigen::MatrixXd fmat(m, sym_size(n));
  for (int i = 0; i < m; ++i) {
    if (f[i].dim() != n) {
      throw DimensionError("problem: F" + std::to_string(i + 1) +
                           " is not " + std::to_string(n) + "x" +
                           std::to_string(n));
    }
    fmat.row(i) = vecs(f[i]).data.transpose();
  }
  if (hints.x0 && hints.x0->dim() != n) {
    throw DimensionError("problem: X0 has the wrong dimension");
  }
  const PdCheck f0_check = is_pd(f0);
  if (require_pd_f0 && !f0_check) {
    throw ContractViolation("problem: F0 is not positive definite",
                            f0_check.min_eigenvalue());
  }
  return SdpProblem(std::move(f0), std::move(f), std::move(b), std::move(fmat),
                    f0_check, std::move(hints));
}

SymMatrix SdpProblem::combine(const Eigen::VectorXd& p) const {
  if (p.size() != m()) throw DimensionError("combine: |p| != m");
  Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(n(), n());
  for (int i = 0; i < m(); ++i) acc += p(i) * f_[i].matrix();
  return SymMatrix(acc);
}

namespace {

SymMatrix read_sym(const nlohmann::json& j, const std::string& what, int n) {
  const Eigen::MatrixXd raw = read_matrix(j, what);
  if (raw.rows() != n || raw.cols() != n) {
    throw ParseError(what + ": expected " + std::to_string(n) + "x" +
                     std::to_string(n));
  }
  try {
    return SymMatrix::checked(raw, 0.0);
  } catch (const SymmetryError& e) {
    throw SymmetryError(what + ": " + e.what());
  }
}

std::optional<double> optional_number(const nlohmann::json& doc,
                                      const char* key) {
  if (!doc.contains(key) || doc[key].is_null()) return std::nullopt;
  return read_number(doc[key], key);
}

}  // namespace

SdpProblem load_problem(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("problem file: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("problem file: expected an object");
  for (const char* key : {"n", "m", "F0", "F", "b"}) {
    if (!doc.contains(key)) {
      throw ParseError(std::string("problem file: missing \"") + key + "\"");
    }
  }
  const long long n = detail::read_integer(doc["n"], "n");
  const long long m = detail::read_integer(doc["m"], "m");
  if (n < 1 || m < 1) throw ParseError("problem file: n and m must be >= 1");
  const int ni = static_cast<int>(n);

  SymMatrix f0 = read_sym(doc["F0"], "F0", ni);
  if (!doc["F"].is_array() || doc["F"].size() != static_cast<std::size_t>(m)) {
    throw ParseError("problem file: \"F\" must hold m matrices");
  }
  std::vector<SymMatrix> f;
  for (std::size_t i = 0; i < doc["F"].size(); ++i) {
    f.push_back(read_sym(doc["F"][i], "F" + std::to_string(i + 1), ni));
  }
  Eigen::VectorXd b = read_vector(doc["b"], "b");
  if (b.size() != m) throw ParseError("problem file: |b| != m");

  ProblemHints hints;
  if (doc.contains("X0") && !doc["X0"].is_null()) {
    hints.x0 = read_sym(doc["X0"], "X0", ni);
  }
  hints.epsilon = optional_number(doc, "epsilon");
  hints.nu = optional_number(doc, "nu");
  hints.sigma = optional_number(doc, "sigma");
  hints.gap_ceiling = optional_number(doc, "gap_ceiling");
  return SdpProblem::create(std::move(f0), std::move(f), std::move(b),
                            std::move(hints));
}

SdpProblem load_problem_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open problem file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return load_problem(ss.str());
}

std::string problem_to_json(const SdpProblem& prob) {
  using detail::matrix17;
  using detail::num17;
  std::string out = "{\n";
  out += "  \"n\": " + std::to_string(prob.n()) + ",\n";
  out += "  \"m\": " + std::to_string(prob.m()) + ",\n";
  out += "  \"F0\": " + matrix17(prob.f0().matrix()) + ",\n";
  out += "  \"F\": [";
  for (int i = 0; i < prob.m(); ++i) {
    out += (i ? ",\n        " : "") + matrix17(prob.f(i).matrix());
  }
  out += "],\n";
  out += "  \"b\": " + detail::vector17(prob.b());
  const auto& h = prob.hints();
  if (h.x0) out += ",\n  \"X0\": " + matrix17(h.x0->matrix());
  if (h.epsilon) out += ",\n  \"epsilon\": " + num17(*h.epsilon);
  if (h.nu) out += ",\n  \"nu\": " + num17(*h.nu);
  if (h.sigma) out += ",\n  \"sigma\": " + num17(*h.sigma);
  if (h.gap_ceiling) out += ",\n  \"gap_ceiling\": " + num17(*h.gap_ceiling);
  return out + "\n}\n";
}

std::string problem_hash(const SdpProblem& prob) {
  std::string canon = "sdp:" + std::to_string(prob.n()) + ":" +
                      std::to_string(prob.m()) + ":" +
                      detail::matrix17(prob.f0().matrix());
  for (const auto& fi : prob.f()) canon += ":" + detail::matrix17(fi.matrix());
  canon += ":" + detail::vector17(prob.b());

  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(canon.data(), canon.size(), digest, &len, EVP_sha256(), nullptr);
  static constexpr char kHex[] = "0123456789abcdef";
  std::string hex;
  hex.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    hex += kHex[digest[i] >> 4];
    hex += kHex[digest[i] & 0xF];
  }
  return hex;
}

const SdpProblem& running_example() {
  static const SdpProblem prob = [] {
    auto sym2 = [](double a, double b, double d) {
      Eigen::Matrix2d m;
      m << a, b, b, d;
      return SymMatrix(m);
    };
    ProblemHints hints;
    hints.x0 = sym2(0.3409, 0.2407, 0.9021);
    hints.epsilon = 1e-8;
    hints.nu = 0.4714;
    hints.sigma = 0.75;
    hints.gap_ceiling = 0.1;
    Eigen::Vector3d b(0.4, -0.2, 0.2);
    return SdpProblem::create(sym2(1, 0, 0.1),
                              {sym2(-0.750999, 0.00499, 0.0001),
                               sym2(0.03992, -0.999101, 0.00002),
                               sym2(0.0016, 0.00004, -0.999999)},
                              b, std::move(hints));
  }();
  return prob;
}

double dual_cost(const SdpProblem& prob, const SymMatrix& z) {
  return trace_inner(prob.f0(), z);
}

double primal_cost(const SdpProblem& prob, const Eigen::VectorXd& p) {
  if (p.size() != prob.m()) throw DimensionError("primal_cost: |p| != m");
  return prob.b().dot(p);
}

double duality_gap(const SymMatrix& x, const SymMatrix& z) {
  return trace_product(x.matrix(), z.matrix());
}

SymMatrix primal_residual(const SdpProblem& prob, const SymMatrix& x,
                          const Eigen::VectorXd& p) {
  return prob.f0() + prob.combine(p) + x;
}

Eigen::VectorXd dual_residual(const SdpProblem& prob, const SymMatrix& z) {
  if (z.dim() != prob.n()) throw DimensionError("dual_residual: dim(Z) != n");
  Eigen::VectorXd r(prob.m());
  for (int i = 0; i < prob.m(); ++i) r(i) = trace_inner(prob.f(i), z) + prob.b()(i);
  return r;
}

double potential_tanabe(const SymMatrix& x, const SymMatrix& z, double nu) {
  const double n = x.dim();
  const double ldx = log_det(x);
  const double ldz = log_det(z);
  return (n + nu * std::sqrt(n)) * std::log(duality_gap(x, z)) - (ldx + ldz) -
         n * std::log(n);
}

double potential_loggap(const SymMatrix& x, const SymMatrix& z) {
  const double g = duality_gap(x, z);
  if (!(g > 0.0)) {
    throw ContractViolation("potential_loggap: duality gap is not positive", g);
  }
  return std::log(g);
}

double barrier(const SymMatrix& x, const SymMatrix& z) {
  return -log_det(x) - log_det(z);
}

}  // namespace csdp
