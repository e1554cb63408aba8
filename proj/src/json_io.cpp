#include "csdp/detail/json_io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>

#include "csdp/errors.hpp"

namespace csdp::detail {

std::string num17(double x) {
  if (!std::isfinite(x)) return "null";
  std::array<char, 40> buf{};
  const int len = std::snprintf(buf.data(), buf.size(), "%.17g", x);
  return std::string(buf.data(), static_cast<std::size_t>(len));
}

std::string num_short(double x) {
  std::array<char, 40> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), res.ptr);
}

std::string matrix17(const Eigen::MatrixXd& m) {
  std::string out = "[";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    if (i) out += ',';
    out += '[';
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) out += ',';
      out += num17(m(i, j));
    }
    out += ']';
  }
  return out + "]";
}

std::string vector17(const Eigen::VectorXd& v) {
  std::string out = "[";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += num17(v(i));
  }
  return out + "]";
}

std::string quoted(std::string_view s) { return nlohmann::json(s).dump(); }

double read_number(const nlohmann::json& j, std::string_view what) {
  if (!j.is_number()) {
    throw ParseError(std::string(what) + ": expected a number");
  }
  return j.get<double>();
}

long long read_integer(const nlohmann::json& j, std::string_view what) {
  if (j.is_number_integer()) return j.get<long long>();
  if (j.is_number_float()) {
    const double d = j.get<double>();
    if (std::isfinite(d) && d == std::floor(d) && std::abs(d) < 9.0e15) {
      return static_cast<long long>(d);
    }
  }
  throw ParseError(std::string(what) + ": expected an integer");
}

Eigen::VectorXd read_vector(const nlohmann::json& j, std::string_view what) {
  if (!j.is_array()) throw ParseError(std::string(what) + ": expected an array");
  Eigen::VectorXd v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    v(static_cast<Eigen::Index>(i)) = read_number(j[i], what);
  }
  return v;
}

Eigen::MatrixXd read_matrix(const nlohmann::json& j, std::string_view what) {
  if (!j.is_array() || j.empty()) {
    throw ParseError(std::string(what) + ": expected a non-empty array of rows");
  }
  const std::size_t rows = j.size();
  if (!j[0].is_array()) throw ParseError(std::string(what) + ": rows must be arrays");
  const std::size_t cols = j[0].size();
  Eigen::MatrixXd m(static_cast<Eigen::Index>(rows),
                    static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) {
      throw ParseError(std::string(what) + ": ragged matrix");
    }
    for (std::size_t c = 0; c < cols; ++c) {
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          read_number(j[r][c], what);
    }
  }
  return m;
}

}  // namespace csdp::detail
