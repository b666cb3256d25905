#include <doctest.h>

#include "loghessian/calculus.hpp"
#include "loghessian/corpus.hpp"
#include "test_oracles.hpp"

using namespace loghessian;

namespace {

LaurentPolynomial lp(const std::string& text, int n) { return parse_laurent(text, n); }

std::vector<LaurentPolynomial> sample_polys(int n, int rank, std::uint64_t seed, int count) {
  CorpusSpec spec;
  spec.n = n;
  spec.lattice_rank = rank;
  spec.max_terms = 5;
  spec.exponent_bound = 3;
  spec.coefficient_bound = 7;
  spec.seed = seed;
  spec.instance_count = count;
  std::vector<LaurentPolynomial> out;
  for (int i = 0; i < count; ++i) {
    out.push_back(generate_corpus_sample(spec, i));
  }
  return out;
}

LaurentPolynomial product_of_variables(int n) {
  LaurentPolynomial all = LaurentPolynomial::constant(n, Rational(1));
  for (int i = 1; i <= n; ++i) {
    all = all * LaurentPolynomial::variable(n, i);
  }
  return all;
}

}  // namespace

TEST_CASE("partial derivative examples") {
  CHECK(partial_derivative(lp("x1^2*x2", 2), 1) == lp("2*x1*x2", 2));
  CHECK(partial_derivative(lp("x1^-1", 1), 1) == lp("-x1^-2", 1));
  CHECK(partial_derivative(lp("x1", 2), 2).is_zero());
  CHECK_THROWS_AS(partial_derivative(lp("x1", 2), 3), std::out_of_range);
}

TEST_CASE("theta examples") {
  CHECK(theta(lp("x1^3*x2^-2", 2), 1) == lp("3*x1^3*x2^-2", 2));
  CHECK(theta(LaurentPolynomial::constant(2, Rational(5)), 1).is_zero());
  CHECK(theta(lp("x1 + x1*x2", 2), 1) == lp("x1 + x1*x2", 2));
}

TEST_CASE("logarithmic polar map examples") {
  PolyVector v = logarithmic_polar_map(lp("x1 + x2", 2));
  CHECK(v.components[0] == lp("x1", 2));
  CHECK(v.components[1] == lp("x2", 2));

  v = logarithmic_polar_map(lp("x1*x2", 2));
  CHECK(v.components[0] == lp("x1*x2", 2));
  CHECK(v.components[1] == lp("x1*x2", 2));

  v = logarithmic_polar_map(LaurentPolynomial::constant(3, Rational(9)));
  for (const auto& c : v.components) {
    CHECK(c.is_zero());
  }
}

TEST_CASE("affine polar map examples") {
  PolyVector v = affine_polar_map(lp("x1^2 + x2^2", 2));
  CHECK(v.components[0] == lp("2*x1", 2));
  CHECK(v.components[1] == lp("2*x2", 2));

  v = affine_polar_map(LaurentPolynomial::constant(2, Rational(4)));
  CHECK(v.components[0].is_zero());
  CHECK(v.components[1].is_zero());

  v = affine_polar_map(lp("x1*x2", 2));
  CHECK(v.components[0] == lp("x2", 2));
  CHECK(v.components[1] == lp("x1", 2));
}

TEST_CASE("log hessian examples") {
  PolyMatrix m = log_hessian(lp("x1 + x2", 2));
  CHECK(m.at(0, 0) == lp("1", 2));
  CHECK(m.at(0, 1).is_zero());
  CHECK(m.at(1, 0).is_zero());
  CHECK(m.at(1, 1) == lp("1", 2));

  m = log_hessian(lp("x1*x2", 2));
  CHECK(m.at(0, 0) == lp("x2", 2));
  CHECK(m.at(0, 1) == lp("x1", 2));
  CHECK(m.at(1, 0) == lp("x2", 2));
  CHECK(m.at(1, 1) == lp("x1", 2));
  CHECK(determinant(m).is_zero());

  m = log_hessian(lp("x1 + x2 + x1*x2", 2));
  CHECK(m.at(0, 0) == lp("1 + x2", 2));
  CHECK(m.at(0, 1) == lp("x1", 2));
  CHECK(m.at(1, 0) == lp("x2", 2));
  CHECK(m.at(1, 1) == lp("1 + x1", 2));
  CHECK(determinant(m) == lp("1 + x1 + x2", 2));
}

TEST_CASE("symmetric log hessian examples and identities") {
  PolyMatrix m = log_hessian_symmetric(lp("x1*x2", 2));
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      CHECK(m.at(i, j) == lp("x1*x2", 2));
    }
  }

  for (int n = 1; n <= 3; ++n) {
    for (const auto& f : sample_polys(n, n, 321 + static_cast<std::uint64_t>(n), 4)) {
      const PolyMatrix sym = log_hessian_symmetric(f);
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          CHECK(sym.at(i, j) == sym.at(j, i));
        }
      }
      CHECK(determinant(sym) == product_of_variables(n) * determinant(log_hessian(f)));
    }
  }
}

TEST_CASE("log hessian is the Jacobian of the logarithmic polar map") {
  for (const auto& f : sample_polys(3, 3, 55, 4)) {
    const PolyMatrix m = log_hessian(f);
    const PolyVector polar = logarithmic_polar_map(f);
    for (int i = 0; i < 3; ++i) {
      for (int j = 1; j <= 3; ++j) {
        CHECK(m.at(i, j - 1) ==
              partial_derivative(polar.components[static_cast<std::size_t>(i)], j));
      }
    }
  }
}

TEST_CASE("classical hessian examples") {
  PolyMatrix m = classical_hessian(lp("x1^2 + x2^2", 2));
  CHECK(m.at(0, 0) == lp("2", 2));
  CHECK(m.at(1, 1) == lp("2", 2));
  CHECK(m.at(0, 1).is_zero());
  CHECK(m.at(1, 0).is_zero());

  CHECK(classical_hessian(lp("3*x1 - 2*x2 + 7", 2)).is_zero());
}

TEST_CASE("determinant examples") {
  PolyMatrix diag(2);
  diag.at(0, 0) = lp("x1 + x2^-2", 2);
  diag.at(1, 1) = lp("x1*x2 - 3", 2);
  CHECK(determinant(diag) == lp("x1 + x2^-2", 2) * lp("x1*x2 - 3", 2));

  PolyMatrix twin(3);
  for (int j = 0; j < 3; ++j) {
    twin.at(0, j) = lp("x1 + x3^-1", 3);
    twin.at(2, j) = twin.at(0, j);
    twin.at(1, j) = lp("x2^2", 3);
  }
  CHECK(determinant(twin).is_zero());

  CHECK(determinant(PolyMatrix(0)) == LaurentPolynomial::constant(0, Rational(1)));
}

TEST_CASE("determinant matches cofactor expansion on random matrices") {
  for (int n = 2; n <= 4; ++n) {
    const auto pool = sample_polys(n, n, 4242 + static_cast<std::uint64_t>(n), n * n + 3);
    PolyMatrix m(n);
    std::size_t next = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        m.at(i, j) = pool[next++ % pool.size()];
      }
    }
    CHECK(determinant(m) == oracles::cofactor_determinant(m));
  }
}

TEST_CASE("generic rank examples") {
  CHECK(generic_rank(PolyMatrix(3)) == 0);
  CHECK(generic_rank(log_hessian(lp("x1 + x2", 2))) == 2);
  CHECK(generic_rank(log_hessian(lp("x1*x2", 2))) == 1);
}

TEST_CASE("generic rank against point evaluation and the exponent bound") {
  int equality_hits = 0;
  int cases = 0;
  for (int n = 2; n <= 3; ++n) {
    for (int rank = 0; rank <= n; ++rank) {
      for (const auto& f :
           sample_polys(n, rank, 9000 + static_cast<std::uint64_t>(10 * n + rank), 3)) {
        const PolyMatrix af = log_hessian(f);
        const int symbolic = generic_rank(af);

        std::vector<std::vector<Integer>> exponent_rows;
        for (const auto& [e, c] : f.terms()) {
          std::vector<Integer> row(e.begin(), e.end());
          exponent_rows.push_back(row);
        }
        const int exponent_rank =
            integer_rank(IntegerMatrix::from_rows(exponent_rows, n));
        CHECK(symbolic <= exponent_rank);

        SampleRng rng(17 + static_cast<std::uint64_t>(cases));
        bool reached = false;
        for (int attempt = 0; attempt < 5; ++attempt) {
          std::vector<Rational> point;
          for (int i = 0; i < n; ++i) {
            point.emplace_back(Integer(rng.uniform(2, 101)));
          }
          const int at_point = rational_matrix_rank(evaluate_matrix(af, point));
          CHECK(at_point <= symbolic);
          if (at_point == symbolic) {
            reached = true;
            break;
          }
        }
        if (reached) {
          ++equality_hits;
        }
        ++cases;
      }
    }
  }
  CHECK(equality_hits == cases);
}

TEST_CASE("theta operators commute") {
  for (const auto& f : sample_polys(3, 3, 31337, 5)) {
    for (int i = 1; i <= 3; ++i) {
      for (int j = 1; j <= 3; ++j) {
        CHECK(theta(theta(f, i), j) == theta(theta(f, j), i));
      }
    }
  }
}

TEST_CASE("logarithmic Gauss point examples") {
  const std::vector<Rational> ones{Rational(1), Rational(1)};
  auto image = log_gauss_point(lp("x1 + x2", 2), ones);
  CHECK(image == std::vector<Rational>{Rational(1), Rational(1)});

  image = log_gauss_point(lp("x1*x2", 2), {make_rational(7, 3), Rational(-5)});
  CHECK(image == std::vector<Rational>{Rational(1), Rational(1)});

  CHECK_THROWS_AS(log_gauss_point(LaurentPolynomial::constant(2, Rational(3)), ones),
                  std::domain_error);
}
