#pragma once

#include <string>
#include <string_view>

#include <Eigen/Core>
#include <json.hpp>

namespace csdp::detail {

/// "%.17g" text for finite values, "null" otherwise.
std::string num17(double x);

/// Shortest text that round-trips to x.
std::string num_short(double x);

/// Row-major nested array of num17 values.
std::string matrix17(const Eigen::MatrixXd& m);
std::string vector17(const Eigen::VectorXd& v);

/// JSON string literal with escaping.
std::string quoted(std::string_view s);

/// Strict readers; throw ParseError naming `what` on shape or type problems.
Eigen::MatrixXd read_matrix(const nlohmann::json& j, std::string_view what);
Eigen::VectorXd read_vector(const nlohmann::json& j, std::string_view what);
double read_number(const nlohmann::json& j, std::string_view what);
long long read_integer(const nlohmann::json& j, std::string_view what);

}  // namespace csdp::detail
