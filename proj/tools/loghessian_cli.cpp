// Command-line frontend: analyze/reduce a Laurent polynomial, print Hessian
// matrices, evaluate the logarithmic Gauss map, and drive the randomized
// property corpus. Exit codes: 0 success, 1 internal invariant violation,
// 2 usage or parse error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "loghessian/corpus.hpp"
#include "loghessian/report.hpp"

namespace {

using namespace loghessian;

constexpr int kExitOk = 0;
constexpr int kExitInvariantViolation = 1;
constexpr int kExitUsage = 2;

// "@path" pulls the expression from a file.
std::string resolve_expression(const std::string& raw) {
  if (raw.empty() || raw.front() != '@') {
    return raw;
  }
  const std::string path = raw.substr(1);
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open expression file: " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  std::string text = buffer.str();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) {
    text.pop_back();
  }
  return text;
}

Rational parse_rational_token(const std::string& token) {
  const auto slash = token.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(Integer(token));
    }
    const Integer num(token.substr(0, slash));
    const Integer den(token.substr(slash + 1));
    return make_rational(num, den);
  } catch (const std::exception&) {
    throw std::invalid_argument("invalid rational number: " + token);
  }
}

std::vector<Rational> parse_point(const std::string& text, int vars) {
  std::vector<Rational> point;
  std::stringstream stream(text);
  std::string token;
  while (std::getline(stream, token, ',')) {
    while (!token.empty() && token.front() == ' ') {
      token.erase(token.begin());
    }
    while (!token.empty() && token.back() == ' ') {
      token.pop_back();
    }
    point.push_back(parse_rational_token(token));
  }
  if (point.size() != static_cast<std::size_t>(vars)) {
    throw std::invalid_argument("point has " + std::to_string(point.size()) +
                                " coordinates, expected " + std::to_string(vars));
  }
  return point;
}

void print_matrix(const PolyMatrix& m) {
  for (int i = 0; i < m.dim(); ++i) {
    std::cout << "[ ";
    for (int j = 0; j < m.dim(); ++j) {
      if (j > 0) {
        std::cout << ", ";
      }
      std::cout << format_canonical(m.at(i, j));
    }
    std::cout << " ]\n";
  }
}

int run_analyze(const std::string& raw_expr, int vars, const std::string& format) {
  const LaurentPolynomial f = parse_laurent(resolve_expression(raw_expr), vars);
  const AnalysisReport report = analyze(f);
  if (format == "json") {
    std::cout << report_to_json(report) << '\n';
  } else {
    std::cout << report_to_text(report);
  }
  if (!report.verified) {
    std::cerr << "error: reduction failed self-verification\n";
    std::vector<std::string> reasons;
    verify_reduction(f, report.result, &reasons);
    for (const auto& reason : reasons) {
      std::cerr << "  - " << reason << '\n';
    }
    return kExitInvariantViolation;
  }
  return kExitOk;
}

int run_hessian(const std::string& raw_expr, int vars, bool classical, bool log_matrix,
                bool symmetric) {
  if (static_cast<int>(classical) + static_cast<int>(log_matrix) +
          static_cast<int>(symmetric) > 1) {
    throw std::invalid_argument("choose at most one of --classical, --log, --symmetric");
  }
  const LaurentPolynomial f = parse_laurent(resolve_expression(raw_expr), vars);
  PolyMatrix m(0);
  if (classical) {
    std::cout << "classical Hessian:\n";
    m = classical_hessian(f);
  } else if (symmetric) {
    std::cout << "symmetric logarithmic Hessian:\n";
    m = log_hessian_symmetric(f);
  } else {
    std::cout << "logarithmic Hessian:\n";
    m = log_hessian(f);
  }
  print_matrix(m);
  std::cout << "det = " << format_canonical(determinant(m)) << '\n';
  return kExitOk;
}

int run_gauss(const std::string& raw_expr, int vars, const std::string& at) {
  const LaurentPolynomial f = parse_laurent(resolve_expression(raw_expr), vars);
  const std::vector<Rational> point = parse_point(at, vars);
  const std::vector<Rational> image = log_gauss_point(f, point);
  std::cout << '(';
  for (std::size_t i = 0; i < image.size(); ++i) {
    if (i > 0) {
      std::cout << " : ";
    }
    std::cout << format_rational(image[i]);
  }
  std::cout << ")\n";
  return kExitOk;
}

int run_fuzz_command(const CorpusSpec& spec) {
  const FuzzSummary summary = run_fuzz(spec, &std::cout);
  std::cout << "instances: " << summary.total << "  passed: " << summary.passed
            << "  failed: " << summary.failed << '\n';
  if (!summary.all_passed()) {
    std::cout << "first failure: seed=" << summary.first_fail_seed
              << " index=" << summary.first_fail_index << " (" << summary.first_fail_message
              << ")\n";
    return kExitInvariantViolation;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact analysis of logarithmic Hessians of Laurent polynomials on the torus"};
  app.require_subcommand(1);

  int vars = 0;
  std::string expr;
  std::string format = "text";

  CLI::App* analyze_cmd =
      app.add_subcommand("analyze", "decide vanishing and construct the variable reduction");
  analyze_cmd->alias("reduce");
  analyze_cmd->add_option("--vars", vars, "ambient variable count")->required();
  analyze_cmd->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  analyze_cmd->add_option("expr", expr, "Laurent polynomial (or @file)")->required();

  bool classical = false;
  bool log_matrix = false;
  bool symmetric = false;
  CLI::App* hessian_cmd = app.add_subcommand("hessian", "print a Hessian matrix and its determinant");
  hessian_cmd->add_option("--vars", vars, "ambient variable count")->required();
  hessian_cmd->add_flag("--classical", classical, "matrix of second partial derivatives");
  hessian_cmd->add_flag("--log", log_matrix, "logarithmic Hessian (default)");
  hessian_cmd->add_flag("--symmetric", symmetric, "symmetric theta-theta matrix");
  hessian_cmd->add_option("expr", expr, "Laurent polynomial (or @file)")->required();

  std::string at;
  CLI::App* gauss_cmd =
      app.add_subcommand("gauss", "evaluate the logarithmic Gauss map at a torus point");
  gauss_cmd->add_option("--vars", vars, "ambient variable count")->required();
  gauss_cmd->add_option("--at", at, "comma-separated rational coordinates")->required();
  gauss_cmd->add_option("expr", expr, "Laurent polynomial (or @file)")->required();

  CorpusSpec spec;
  CLI::App* fuzz_cmd = app.add_subcommand("fuzz", "run the randomized property corpus");
  fuzz_cmd->add_option("--vars", spec.n, "ambient variable count")->required();
  fuzz_cmd->add_option("--rank", spec.lattice_rank, "support-lattice rank of the instances")
      ->required();
  fuzz_cmd->add_option("--terms", spec.max_terms, "maximum terms per instance");
  fuzz_cmd->add_option("--seed", spec.seed, "corpus seed");
  fuzz_cmd->add_option("--count", spec.instance_count, "number of instances");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (app.got_subcommand(analyze_cmd)) {
      return run_analyze(expr, vars, format);
    }
    if (app.got_subcommand(hessian_cmd)) {
      return run_hessian(expr, vars, classical, log_matrix, symmetric);
    }
    if (app.got_subcommand(gauss_cmd)) {
      return run_gauss(expr, vars, at);
    }
    if (app.got_subcommand(fuzz_cmd)) {
      return run_fuzz_command(spec);
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInvariantViolation;
  }
  return kExitUsage;
}
