#pragma once

// Seeded property checks over every module, grouped into suites.

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "fueterkit/operator_calculus.hpp"
#include "fueterkit/quaternion.hpp"

namespace fueterkit {

struct CheckResult {
  std::string check;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct VerifyReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;  // sorted by check name

  bool pass() const;
};

/// symbolic, kernel, series, contour, operator, pde.
const std::vector<std::string>& verify_suites();

/// Runs one suite or "all". Throws InvalidArgument for unknown suites.
VerifyReport run_verify(std::string_view suite, std::uint64_t seed = 0);

/// {"suite":..,"seed":..,"pass":..,"checks":[{check,max_residual,tolerance,pass},..]}
std::string report_json(const VerifyReport& report);

/// Uniform quaternion with each component in [-scale, scale].
Quaternion random_quaternion(std::mt19937_64& rng, double scale = 1.0);

/// T_i = a_i I + b_i A + c_i A^2 for one random A, so the components commute.
/// The result satisfies norm_bound() <= target_norm.
CommutingOperator random_commuting_operator(std::mt19937_64& rng, int dim, double target_norm = 1.0);

}  // namespace fueterkit
