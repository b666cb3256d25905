#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "loghessian/corpus.hpp"
#include "loghessian/report.hpp"

using namespace loghessian;

namespace {

CorpusSpec small_spec(int n, int rank, std::uint64_t seed, int count) {
  CorpusSpec spec;
  spec.n = n;
  spec.lattice_rank = rank;
  spec.max_terms = 6;
  spec.exponent_bound = 4;
  spec.coefficient_bound = 9;
  spec.seed = seed;
  spec.instance_count = count;
  return spec;
}

}  // namespace

TEST_CASE("corpus sampling is deterministic in (seed, index)") {
  const CorpusSpec spec = small_spec(3, 2, 4711, 10);
  for (int i = 0; i < 10; ++i) {
    CHECK(generate_corpus_sample(spec, i) == generate_corpus_sample(spec, i));
  }
}

TEST_CASE("corpus: rank-0 instances are nonzero constants") {
  const CorpusSpec spec = small_spec(3, 0, 99, 5);
  for (int i = 0; i < 5; ++i) {
    const LaurentPolynomial f = generate_corpus_sample(spec, i);
    CHECK(f.is_constant());
    CHECK_FALSE(f.is_zero());
  }
}

TEST_CASE("corpus: support lattice rank never exceeds the requested rank") {
  for (int rank = 0; rank <= 2; ++rank) {
    const CorpusSpec spec = small_spec(2, rank, 31 + static_cast<std::uint64_t>(rank), 8);
    for (int i = 0; i < 8; ++i) {
      CHECK(support_lattice(generate_corpus_sample(spec, i)).rank() <= rank);
    }
  }
}

TEST_CASE("corpus: infeasible specs are rejected") {
  CorpusSpec bad = small_spec(2, 3, 1, 4);
  CHECK_THROWS_AS(generate_corpus_sample(bad, 0), std::invalid_argument);
  CorpusSpec ok = small_spec(2, 1, 1, 4);
  CHECK_THROWS_AS(generate_corpus_sample(ok, 4), std::invalid_argument);
}

TEST_CASE("analysis report is internally consistent") {
  const LaurentPolynomial f = parse_laurent("x1*x2 + x1^2*x2^2", 2);
  const AnalysisReport report = analyze(f);
  CHECK(report.n == 2);
  CHECK(report.support_size == 2);
  CHECK(report.exponent_rank == 1);
  CHECK(report.hessian_rank == 1);
  CHECK(report.k == report.n - report.exponent_rank);
  CHECK(report.det_af_is_zero == (report.hessian_rank < report.n));
  CHECK(report.verified);
  CHECK(parse_laurent(report.reduced_polynomial, 2) == report.result.reduced);
  CHECK(report.reduced_polynomial == "x1^2 + x1");
}

TEST_CASE("report JSON carries the fixed schema and is stable") {
  const LaurentPolynomial f = parse_laurent("x1*x2^-1 + x2*x1^-1 + 3", 2);
  AnalysisReport first = analyze(f);
  AnalysisReport second = analyze(f);
  first.elapsed_ms = 0;
  second.elapsed_ms = 0;
  const std::string a = report_to_json(first);
  const std::string b = report_to_json(second);
  CHECK(a == b);

  const auto parsed = nlohmann::ordered_json::parse(a);
  const std::vector<std::string> expected_keys{
      "n",           "support_size",      "exponent_rank", "hessian_rank",
      "k",           "det_af_is_zero",    "lambda_basis",  "m_basis",
      "automorphism_rows", "reduced_polynomial", "verified", "elapsed_ms"};
  std::vector<std::string> actual_keys;
  for (auto it = parsed.begin(); it != parsed.end(); ++it) {
    actual_keys.push_back(it.key());
  }
  CHECK(actual_keys == expected_keys);
  CHECK(parsed["k"].get<int>() == 2 - parsed["exponent_rank"].get<int>());
}

TEST_CASE("text report mentions every headline field") {
  const AnalysisReport report = analyze(parse_laurent("x1 + x2", 2));
  const std::string text = report_to_text(report);
  for (const char* needle : {"variables", "support size", "exponent rank", "hessian rank",
                             "eliminable k", "det(Af)", "reduced", "verified"}) {
    CHECK(text.find(needle) != std::string::npos);
  }
}

TEST_CASE("fuzz run with a fixed seed is reproducible") {
  const CorpusSpec spec = small_spec(3, 2, 20240601, 12);
  std::ostringstream log1;
  std::ostringstream log2;
  const FuzzSummary a = run_fuzz(spec, &log1);
  const FuzzSummary b = run_fuzz(spec, &log2);
  CHECK(a.total == b.total);
  CHECK(a.passed == b.passed);
  CHECK(a.failed == b.failed);
  CHECK(log1.str() == log2.str());
  CHECK(a.all_passed());
  CHECK(a.passed == 12);
}

TEST_CASE("fuzz harness self-test: a corrupted checker is reported with its seed") {
  const CorpusSpec spec = small_spec(2, 1, 777, 5);
  const InstanceCheck broken = [](const LaurentPolynomial&, const CorpusSpec&, int index) {
    return index == 3 ? std::string("deliberate failure") : std::string();
  };
  std::ostringstream log;
  const FuzzSummary summary = run_fuzz(spec, broken, &log);
  CHECK_FALSE(summary.all_passed());
  CHECK(summary.failed == 1);
  CHECK(summary.first_fail_index == 3);
  CHECK(summary.first_fail_seed == 777);
  CHECK(log.str().find("seed=777 index=3") != std::string::npos);
}

TEST_CASE("fuzz with an empty corpus passes trivially") {
  const FuzzSummary summary = run_fuzz(small_spec(2, 1, 5, 0));
  CHECK(summary.total == 0);
  CHECK(summary.all_passed());
}

TEST_CASE("random unimodular matrices are unimodular") {
  SampleRng rng(2718);
  for (int n = 1; n <= 5; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      CHECK(is_unimodular(random_unimodular(n, rng)));
    }
  }
}
