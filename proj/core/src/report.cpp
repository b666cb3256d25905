#include "loghessian/report.hpp"

#include <chrono>
#include <sstream>

#include <json.hpp>

namespace loghessian {

namespace {

std::vector<std::vector<Integer>> matrix_rows(const IntegerMatrix& m) {
  std::vector<std::vector<Integer>> rows;
  rows.reserve(static_cast<std::size_t>(m.rows()));
  for (int i = 0; i < m.rows(); ++i) {
    rows.push_back(m.row(i));
  }
  return rows;
}

nlohmann::ordered_json rows_to_json(const std::vector<std::vector<Integer>>& rows) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    nlohmann::ordered_json jrow = nlohmann::ordered_json::array();
    for (const Integer& x : row) {
      jrow.push_back(checked_int64(x, "report matrix entry"));
    }
    out.push_back(std::move(jrow));
  }
  return out;
}

void print_rows(std::ostringstream& out, const std::string& label,
                const std::vector<std::vector<Integer>>& rows) {
  out << label << ":";
  if (rows.empty()) {
    out << " (empty)\n";
    return;
  }
  out << '\n';
  for (const auto& row : rows) {
    out << "  [";
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j > 0) {
        out << ", ";
      }
      out << row[j];
    }
    out << "]\n";
  }
}

}  // namespace

AnalysisReport analyze(const LaurentPolynomial& f) {
  const auto start = std::chrono::steady_clock::now();
  AnalysisReport report;
  report.result = reduce_variables(f);
  const ReductionResult& res = report.result;
  report.n = res.n;
  report.support_size = f.term_count();
  report.exponent_rank = res.r;
  report.hessian_rank = res.hessian_rank;
  report.k = res.k;
  report.det_af_is_zero = res.hessian_rank < res.n;
  report.lambda_basis = res.lambda_basis.vectors;
  report.m_basis = res.m_basis.vectors;
  report.automorphism_rows = matrix_rows(res.automorphism.matrix);
  report.reduced_polynomial = format_canonical(res.reduced);
  report.verified = res.verified;
  report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return report;
}

std::string report_to_json(const AnalysisReport& report) {
  nlohmann::ordered_json j;
  j["n"] = report.n;
  j["support_size"] = report.support_size;
  j["exponent_rank"] = report.exponent_rank;
  j["hessian_rank"] = report.hessian_rank;
  j["k"] = report.k;
  j["det_af_is_zero"] = report.det_af_is_zero;
  j["lambda_basis"] = rows_to_json(report.lambda_basis);
  j["m_basis"] = rows_to_json(report.m_basis);
  j["automorphism_rows"] = rows_to_json(report.automorphism_rows);
  j["reduced_polynomial"] = report.reduced_polynomial;
  j["verified"] = report.verified;
  j["elapsed_ms"] = report.elapsed_ms;
  return j.dump(2);
}

std::string report_to_text(const AnalysisReport& report) {
  std::ostringstream out;
  out << "variables:        " << report.n << '\n';
  out << "support size:     " << report.support_size << '\n';
  out << "exponent rank:    " << report.exponent_rank << '\n';
  out << "hessian rank:     " << report.hessian_rank << '\n';
  out << "eliminable k:     " << report.k << '\n';
  out << "det(Af) == 0:     " << (report.det_af_is_zero ? "yes" : "no") << '\n';
  print_rows(out, "support lattice", report.lambda_basis);
  print_rows(out, "orthogonal lattice", report.m_basis);
  print_rows(out, "automorphism rows", report.automorphism_rows);
  out << "reduced:          " << report.reduced_polynomial << '\n';
  out << "verified:         " << (report.verified ? "yes" : "no") << '\n';
  out << "elapsed:          " << report.elapsed_ms << " ms\n";
  return out.str();
}

}  // namespace loghessian
