#include "loghessian/corpus.hpp"

#include <ostream>
#include <set>
#include <stdexcept>

namespace loghessian {

std::uint64_t SampleRng::next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::int64_t SampleRng::uniform(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<std::int64_t>(next() % span);
}

namespace {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  SampleRng rng(seed ^ (0xD1B54A32D192ED03ULL * (salt + 1)));
  return rng.next();
}

void validate_spec(const CorpusSpec& spec) {
  if (spec.n < 1) {
    throw std::invalid_argument("corpus spec: n must be at least 1");
  }
  if (spec.lattice_rank < 0 || spec.lattice_rank > spec.n) {
    throw std::invalid_argument("corpus spec: lattice rank must lie in 0..n");
  }
  if (spec.max_terms < 1 || spec.exponent_bound < 1 || spec.coefficient_bound < 1) {
    throw std::invalid_argument("corpus spec: bounds must be positive");
  }
  if (spec.instance_count < 0) {
    throw std::invalid_argument("corpus spec: instance count must be nonnegative");
  }
}

LatticeBasis random_primitive_lattice(int n, int rank, SampleRng& rng) {
  if (rank == 0) {
    return LatticeBasis{n, {}};
  }
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::vector<std::vector<Integer>> rows(static_cast<std::size_t>(rank));
    for (auto& row : rows) {
      row.reserve(static_cast<std::size_t>(n));
      for (int j = 0; j < n; ++j) {
        row.emplace_back(rng.uniform(-2, 2));
      }
    }
    LatticeBasis basis = saturate_rows(IntegerMatrix::from_rows(rows, n));
    if (basis.rank() == rank) {
      return basis;
    }
  }
  throw std::logic_error("failed to sample a lattice of the requested rank");
}

}  // namespace

LaurentPolynomial generate_corpus_sample(const CorpusSpec& spec, int index) {
  validate_spec(spec);
  if (index < 0 || index >= spec.instance_count) {
    throw std::invalid_argument("corpus spec: index out of range");
  }
  SampleRng rng(mix_seed(spec.seed, static_cast<std::uint64_t>(index)));
  const LatticeBasis basis = random_primitive_lattice(spec.n, spec.lattice_rank, rng);

  const auto want = static_cast<std::size_t>(rng.uniform(1, spec.max_terms));
  std::set<ExponentVector> support;
  ExponentVector candidate(static_cast<std::size_t>(spec.n), 0);
  for (int attempt = 0; attempt < 200 && support.size() < want; ++attempt) {
    std::fill(candidate.begin(), candidate.end(), 0);
    for (const auto& vec : basis.vectors) {
      const std::int64_t c = rng.uniform(-2, 2);
      if (c == 0) {
        continue;
      }
      for (std::size_t i = 0; i < candidate.size(); ++i) {
        candidate[i] += c * vec[i].convert_to<std::int64_t>();
      }
    }
    bool inside = true;
    for (std::int64_t e : candidate) {
      if (e > spec.exponent_bound || e < -spec.exponent_bound) {
        inside = false;
        break;
      }
    }
    if (inside) {
      support.insert(candidate);
    }
  }
  if (support.empty()) {
    support.insert(ExponentVector(static_cast<std::size_t>(spec.n), 0));
  }

  LaurentPolynomial f(spec.n);
  for (const ExponentVector& e : support) {
    std::int64_t num = 0;
    while (num == 0) {
      num = rng.uniform(-spec.coefficient_bound, spec.coefficient_bound);
    }
    const std::int64_t den = rng.uniform(1, spec.coefficient_bound);
    f.add_term(e, make_rational(Integer(num), Integer(den)));
  }
  return f;
}

IntegerMatrix random_unimodular(int n, SampleRng& rng) {
  IntegerMatrix a = IntegerMatrix::identity(n);
  if (n < 2) {
    return a;
  }
  const std::int64_t ops = rng.uniform(2 * n, 4 * n);
  for (std::int64_t op = 0; op < ops; ++op) {
    const std::int64_t kind = rng.uniform(0, 3);
    const int i = static_cast<int>(rng.uniform(0, n - 1));
    int j = static_cast<int>(rng.uniform(0, n - 2));
    if (j >= i) {
      ++j;
    }
    if (kind == 0) {
      for (int col = 0; col < n; ++col) {
        std::swap(a.at(i, col), a.at(j, col));
      }
    } else if (kind == 1) {
      for (int col = 0; col < n; ++col) {
        a.at(i, col) = -a.at(i, col);
      }
    } else {
      std::int64_t c = 0;
      while (c == 0) {
        c = rng.uniform(-2, 2);
      }
      for (int col = 0; col < n; ++col) {
        a.at(i, col) += Integer(c) * a.at(j, col);
      }
    }
  }
  return a;
}

std::string default_instance_check(const LaurentPolynomial& f, const CorpusSpec& spec,
                                   int index) {
  const LatticeBasis lambda = support_lattice(f);
  const int certified = hessian_rank_certified(f);
  if (certified != lambda.rank()) {
    return "certified hessian rank " + std::to_string(certified) +
           " differs from support rank " + std::to_string(lambda.rank());
  }

  const ReductionResult result = reduce_variables(f);
  std::vector<std::string> reasons;
  if (!verify_reduction(f, result, &reasons)) {
    std::string msg = "reduction verification failed:";
    for (const auto& reason : reasons) {
      msg += ' ';
      msg += reason;
    }
    return msg;
  }

  if (!coset_invariance_check(f, result.m_basis)) {
    return "polar map is not invariant along the orthogonal lattice";
  }

  if (f.var_count() <= 4) {
    const LaurentPolynomial det_log = determinant(log_hessian(f));
    const LaurentPolynomial det_sym = determinant(log_hessian_symmetric(f));
    LaurentPolynomial all_vars = LaurentPolynomial::constant(f.var_count(), Rational(1));
    for (int i = 1; i <= f.var_count(); ++i) {
      all_vars = all_vars * LaurentPolynomial::variable(f.var_count(), i);
    }
    if (!(det_sym == all_vars * det_log)) {
      return "determinant scaling identity failed";
    }
    const bool vanishes = det_log.is_zero();
    if (vanishes != (lambda.rank() < f.var_count())) {
      return "vanishing criterion mismatch between det(Af) and support rank";
    }
  }

  SampleRng rng(mix_seed(spec.seed ^ 0xF00DF00DULL, static_cast<std::uint64_t>(index)));
  const TorusAutomorphism a = make_automorphism(random_unimodular(f.var_count(), rng));
  const TorusAutomorphism b = make_automorphism(random_unimodular(f.var_count(), rng));
  const TorusAutomorphism ba = make_automorphism(b.matrix * a.matrix);
  if (!(monomial_substitute(monomial_substitute(f, b), a) == monomial_substitute(f, ba))) {
    return "monoidal substitution does not respect composition";
  }
  return std::string();
}

FuzzSummary run_fuzz(const CorpusSpec& spec, std::ostream* log) {
  return run_fuzz(spec, default_instance_check, log);
}

FuzzSummary run_fuzz(const CorpusSpec& spec, const InstanceCheck& check, std::ostream* log) {
  validate_spec(spec);
  FuzzSummary summary;
  summary.total = spec.instance_count;
  for (int index = 0; index < spec.instance_count; ++index) {
    const LaurentPolynomial f = generate_corpus_sample(spec, index);
    const std::string message = check(f, spec, index);
    if (message.empty()) {
      ++summary.passed;
      continue;
    }
    ++summary.failed;
    if (summary.first_fail_index < 0) {
      summary.first_fail_index = index;
      summary.first_fail_seed = spec.seed;
      summary.first_fail_message = message;
    }
    if (log != nullptr) {
      *log << "FAIL seed=" << spec.seed << " index=" << index << ": " << message << '\n';
    }
  }
  return summary;
}

}  // namespace loghessian
