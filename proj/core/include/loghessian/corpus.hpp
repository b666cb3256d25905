#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>

#include "loghessian/reduce.hpp"

namespace loghessian {

// Deterministic splitmix64 stream; identical output for a given seed on
// every platform, which the corpus reproducibility contract depends on.
class SampleRng {
 public:
  explicit SampleRng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  // Inclusive bounds.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

 private:
  std::uint64_t state_;
};

// Parameters of a generated instance family. Every instance is a nonzero
// Laurent polynomial whose support lies inside a random primitive lattice of
// the requested rank, so the family exercises the reduction hypothesis class.
struct CorpusSpec {
  int n = 2;
  int lattice_rank = 1;
  int max_terms = 6;
  int exponent_bound = 4;
  int coefficient_bound = 9;
  std::uint64_t seed = 1;
  int instance_count = 100;
};

// Deterministic in (spec.seed, index). Throws std::invalid_argument for an
// infeasible spec (rank > n, nonpositive bounds, index out of range).
LaurentPolynomial generate_corpus_sample(const CorpusSpec& spec, int index);

// Random unimodular matrix built from elementary row operations.
IntegerMatrix random_unimodular(int n, SampleRng& rng);

struct FuzzSummary {
  int total = 0;
  int passed = 0;
  int failed = 0;
  int first_fail_index = -1;  // -1 when everything passed
  std::uint64_t first_fail_seed = 0;
  std::string first_fail_message;

  bool all_passed() const noexcept { return failed == 0; }
};

// Per-instance property check; returns an empty string on success and a
// diagnostic otherwise.
using InstanceCheck =
    std::function<std::string(const LaurentPolynomial& f, const CorpusSpec& spec, int index)>;

// The stock property suite: certified Hessian rank equals the support rank,
// reduction verifies, polar components are invariant along the orthogonal
// lattice, the two Hessian determinants agree up to x1...xn (dimensions
// <= 4), and substitution respects composition of monoidal transformations.
std::string default_instance_check(const LaurentPolynomial& f, const CorpusSpec& spec, int index);

// Runs the check over the whole family, aggregating by index order. Failures
// are written to `log` when provided; output carries no timing so identical
// seeds give byte-identical logs.
FuzzSummary run_fuzz(const CorpusSpec& spec, std::ostream* log = nullptr);
FuzzSummary run_fuzz(const CorpusSpec& spec, const InstanceCheck& check,
                     std::ostream* log = nullptr);

}  // namespace loghessian
