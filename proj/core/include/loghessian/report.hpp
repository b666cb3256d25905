#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "loghessian/reduce.hpp"

namespace loghessian {

// Flattened, serialization-ready view of a reduction run. Field names match
// the JSON schema one-to-one.
struct AnalysisReport {
  int n = 0;
  std::size_t support_size = 0;
  int exponent_rank = 0;
  int hessian_rank = 0;
  int k = 0;
  bool det_af_is_zero = false;
  std::vector<std::vector<Integer>> lambda_basis;
  std::vector<std::vector<Integer>> m_basis;
  std::vector<std::vector<Integer>> automorphism_rows;
  std::string reduced_polynomial;
  bool verified = false;
  std::int64_t elapsed_ms = 0;

  ReductionResult result;  // full certificate for programmatic callers
};

AnalysisReport analyze(const LaurentPolynomial& f);

// JSON with a fixed key order; byte-stable across runs apart from elapsed_ms.
// Matrices serialize as arrays of row arrays of integers.
std::string report_to_json(const AnalysisReport& report);

std::string report_to_text(const AnalysisReport& report);

}  // namespace loghessian
