#include "loghessian/reduce.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace loghessian {

namespace {

// splitmix64; used only to pick evaluation points for the certified rank
// fast path, so a fixed seed keeps every run deterministic.
class PointRng {
 public:
  explicit PointRng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Inclusive range.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<std::int64_t>(next() % span);
  }

 private:
  std::uint64_t state_;
};

constexpr std::uint64_t kRankPointSeed = 0x10C4E55E5EEDULL;

}  // namespace

TorusAutomorphism make_automorphism(IntegerMatrix a) {
  if (a.rows() != a.cols()) {
    throw std::invalid_argument("automorphism matrix must be square");
  }
  if (!is_unimodular(a)) {
    throw std::invalid_argument("automorphism matrix must have determinant +1 or -1");
  }
  IntegerMatrix inv = inverse_unimodular(a);
  return TorusAutomorphism{std::move(a), std::move(inv)};
}

LatticeBasis support_lattice(const LaurentPolynomial& f) {
  std::vector<std::vector<Integer>> rows;
  rows.reserve(f.term_count());
  for (const auto& [e, c] : f.terms()) {
    std::vector<Integer> row;
    row.reserve(e.size());
    for (std::int64_t x : e) {
      row.emplace_back(x);
    }
    rows.push_back(std::move(row));
  }
  return saturate_rows(IntegerMatrix::from_rows(rows, f.var_count()));
}

int hessian_rank_certified(const LaurentPolynomial& f, int retry_budget) {
  const int n = f.var_count();
  const int lattice_rank = support_lattice(f).rank();
  const PolyMatrix af = log_hessian(f);
  PointRng rng(kRankPointSeed);
  for (int attempt = 0; attempt < retry_budget; ++attempt) {
    std::vector<Rational> point;
    point.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      point.emplace_back(Integer(rng.uniform(2, 101)));
    }
    if (rational_matrix_rank(evaluate_matrix(af, point)) == lattice_rank) {
      return lattice_rank;
    }
  }
  return generic_rank(af);
}

TorusAutomorphism build_automorphism(const LatticeBasis& lambda_basis,
                                     const LatticeBasis& m_basis) {
  const int n = lambda_basis.ambient_dim;
  if (m_basis.ambient_dim != n) {
    throw std::invalid_argument("lattice bases live in different ambient dimensions");
  }
  if (lambda_basis.rank() + m_basis.rank() != n) {
    throw std::invalid_argument("lattice ranks do not sum to the ambient dimension");
  }
  for (const auto& lambda : lambda_basis.vectors) {
    for (const auto& m : m_basis.vectors) {
      Integer dot = 0;
      for (std::size_t i = 0; i < lambda.size(); ++i) {
        dot += lambda[i] * m[i];
      }
      if (dot != 0) {
        throw std::invalid_argument("lattice bases are not orthogonal");
      }
    }
  }
  if (!is_primitive(lambda_basis) || !is_primitive(m_basis)) {
    throw std::invalid_argument("lattice basis is not primitive");
  }
  if (m_basis.rank() == 0) {
    return make_automorphism(IntegerMatrix::identity(n));
  }
  return make_automorphism(unimodular_completion(m_basis, CompletionSide::kTrailing));
}

LaurentPolynomial monomial_substitute(const LaurentPolynomial& f, const TorusAutomorphism& phi) {
  const int n = f.var_count();
  if (phi.dim() != n) {
    throw std::invalid_argument("automorphism dimension does not match variable count");
  }
  LaurentPolynomial out(n);
  ExponentVector image(static_cast<std::size_t>(n));
  for (const auto& [e, c] : f.terms()) {
    for (int j = 0; j < n; ++j) {
      Integer sum = 0;
      for (int i = 0; i < n; ++i) {
        if (e[static_cast<std::size_t>(i)] != 0) {
          sum += phi.matrix.at(i, j) * Integer(e[static_cast<std::size_t>(i)]);
        }
      }
      image[static_cast<std::size_t>(j)] = checked_int64(sum, "substituted exponent");
    }
    out.add_term(image, c);
  }
  return out;
}

namespace {

// Flips leading columns of the automorphism so that, scanning the reduced
// terms in canonical (descending) order, the first nonzero entry of each kept
// coordinate is positive. Purely cosmetic: any column sign choice yields a
// valid certificate, this one makes outputs reproducible across completions.
TorusAutomorphism normalize_leading_signs(const TorusAutomorphism& phi,
                                          const LaurentPolynomial& reduced, int kept) {
  std::vector<bool> flip(static_cast<std::size_t>(kept), false);
  bool any = false;
  for (int j = 0; j < kept; ++j) {
    const auto& terms = reduced.terms();
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
      const std::int64_t e = it->first[static_cast<std::size_t>(j)];
      if (e != 0) {
        flip[static_cast<std::size_t>(j)] = e < 0;
        any = any || e < 0;
        break;
      }
    }
  }
  if (!any) {
    return phi;
  }
  IntegerMatrix a = phi.matrix;
  for (int j = 0; j < kept; ++j) {
    if (!flip[static_cast<std::size_t>(j)]) {
      continue;
    }
    for (int i = 0; i < a.rows(); ++i) {
      a.at(i, j) = -a.at(i, j);
    }
  }
  return make_automorphism(std::move(a));
}

}  // namespace

ReductionResult reduce_variables(const LaurentPolynomial& f) {
  ReductionResult result;
  result.n = f.var_count();
  result.lambda_basis = support_lattice(f);
  result.r = result.lambda_basis.rank();
  result.k = result.n - result.r;
  result.m_basis = saturated_kernel(
      IntegerMatrix::from_rows(result.lambda_basis.vectors, result.n));
  if (result.k == 0) {
    result.automorphism = make_automorphism(IntegerMatrix::identity(result.n));
    result.reduced = f;
  } else {
    result.automorphism = build_automorphism(result.lambda_basis, result.m_basis);
    result.reduced = monomial_substitute(f, result.automorphism);
    TorusAutomorphism normalized =
        normalize_leading_signs(result.automorphism, result.reduced, result.r);
    if (!(normalized == result.automorphism)) {
      result.automorphism = std::move(normalized);
      result.reduced = monomial_substitute(f, result.automorphism);
    }
  }
  result.hessian_rank = hessian_rank_certified(f);
  result.verified = verify_reduction(f, result);
  return result;
}

namespace {

void report(std::vector<std::string>* reasons, const char* message) {
  if (reasons != nullptr) {
    reasons->emplace_back(message);
  }
}

}  // namespace

bool verify_reduction(const LaurentPolynomial& f, const ReductionResult& result,
                      std::vector<std::string>* reasons) {
  bool ok = true;
  const int n = f.var_count();

  if (result.n != n || result.k < 0 || result.k > n || result.r + result.k != n) {
    report(reasons, "dimension bookkeeping is inconsistent");
    ok = false;
  }

  bool automorphism_ok = result.automorphism.matrix.rows() == n &&
                         result.automorphism.matrix.cols() == n &&
                         result.automorphism.inverse.rows() == n &&
                         result.automorphism.inverse.cols() == n;
  if (automorphism_ok) {
    automorphism_ok = is_unimodular(result.automorphism.matrix) &&
                      result.automorphism.matrix * result.automorphism.inverse ==
                          IntegerMatrix::identity(n);
  }
  if (!automorphism_ok) {
    report(reasons, "automorphism is not unimodular with an exact inverse");
    ok = false;
  }

  const int k = std::clamp(result.k, 0, n);
  bool trailing_zero = true;
  for (const auto& [e, c] : result.reduced.terms()) {
    for (int j = n - k; j < n; ++j) {
      if (e[static_cast<std::size_t>(j)] != 0) {
        trailing_zero = false;
        break;
      }
    }
    if (!trailing_zero) {
      break;
    }
  }
  if (!trailing_zero) {
    report(reasons, "reduced polynomial still uses an eliminated variable");
    ok = false;
  }

  if (automorphism_ok) {
    const TorusAutomorphism inverse{result.automorphism.inverse, result.automorphism.matrix};
    if (!(monomial_substitute(result.reduced, inverse) == f)) {
      report(reasons, "inverse substitution does not recover the input");
      ok = false;
    }
  }

  if (result.hessian_rank != n - result.k) {
    report(reasons, "hessian rank does not equal n - k");
    ok = false;
  }
  return ok;
}

bool coset_invariance_check(const LaurentPolynomial& f, const LatticeBasis& m_basis) {
  const int n = f.var_count();
  if (m_basis.ambient_dim != n) {
    throw std::invalid_argument("lattice ambient dimension does not match variable count");
  }
  const PolyVector polar = logarithmic_polar_map(f);
  for (const auto& direction : m_basis.vectors) {
    for (const LaurentPolynomial& component : polar.components) {
      // x_i -> x_i * t^{m_i} turns x^I into x^I t^{<m, I>}; build the
      // (n+1)-variable image literally and inspect the t exponents.
      LaurentPolynomial extended(n + 1);
      ExponentVector e(static_cast<std::size_t>(n + 1), 0);
      for (const auto& [exponents, coeff] : component.terms()) {
        Integer t_exponent = 0;
        for (int i = 0; i < n; ++i) {
          e[static_cast<std::size_t>(i)] = exponents[static_cast<std::size_t>(i)];
          t_exponent += direction[static_cast<std::size_t>(i)] *
                        Integer(exponents[static_cast<std::size_t>(i)]);
        }
        e[static_cast<std::size_t>(n)] = checked_int64(t_exponent, "coset t-exponent");
        extended.add_term(e, coeff);
      }
      for (const auto& [exponents, coeff] : extended.terms()) {
        if (exponents[static_cast<std::size_t>(n)] != 0) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace loghessian
