#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "loghessian/calculus.hpp"
#include "loghessian/lattice.hpp"

namespace loghessian {

// Monoidal transformation x_i -> x_1^{a_i1} ... x_n^{a_in} attached to a
// unimodular integer matrix, stored with its exact inverse.
struct TorusAutomorphism {
  IntegerMatrix matrix;
  IntegerMatrix inverse;

  int dim() const noexcept { return matrix.rows(); }

  bool operator==(const TorusAutomorphism&) const = default;
};

// Validates unimodularity and computes the inverse.
TorusAutomorphism make_automorphism(IntegerMatrix a);

// Certificate of a variable reduction: f rewritten through `automorphism`
// into a polynomial whose last k variables do not occur.
struct ReductionResult {
  int n = 0;                    // ambient variable count
  int r = 0;                    // support-lattice rank
  int k = 0;                    // eliminated variables, n - r
  LatticeBasis lambda_basis;    // primitive support lattice
  LatticeBasis m_basis;         // orthogonal lattice, rank k
  TorusAutomorphism automorphism;
  LaurentPolynomial reduced;
  int hessian_rank = 0;         // generic rank of the logarithmic Hessian
  bool verified = false;
};

// Primitive basis of the saturation of the lattice generated by the exponent
// vectors of f; empty for constant or zero polynomials.
LatticeBasis support_lattice(const LaurentPolynomial& f);

// Generic rank of the logarithmic Hessian. Evaluates the Hessian at random
// rational torus points first: a point rank matching the support-lattice rank
// certifies the answer through the sandwich
//   rank(Af(p)) <= generic_rank(Af) <= rank(support lattice).
// After `retry_budget` misses it falls back to the deterministic symbolic
// elimination, so the result is always the true generic rank.
int hessian_rank_certified(const LaurentPolynomial& f, int retry_budget = 5);

// Unimodular matrix whose trailing k columns are the vectors of m_basis.
// Preconditions: both bases primitive, ranks summing to the ambient
// dimension, and mutually orthogonal. With an empty m_basis the identity is
// returned.
TorusAutomorphism build_automorphism(const LatticeBasis& lambda_basis,
                                     const LatticeBasis& m_basis);

// Pullback along the monoidal transformation: a_I x^I -> a_I x^(A^T I).
LaurentPolynomial monomial_substitute(const LaurentPolynomial& f, const TorusAutomorphism& phi);

// Runs the full pipeline: support lattice, orthogonal lattice, automorphism,
// substitution, certified Hessian rank, self-verification.
ReductionResult reduce_variables(const LaurentPolynomial& f);

// Re-checks a reduction certificate from scratch: (a) the automorphism is
// unimodular with a correct inverse, (b) the reduced polynomial avoids the
// last k variables, (c) the inverse substitution recovers f exactly,
// (d) hessian_rank equals n - k. Failure reasons are appended when a sink is
// provided.
bool verify_reduction(const LaurentPolynomial& f, const ReductionResult& result,
                      std::vector<std::string>* reasons = nullptr);

// Symbolically substitutes x_i -> x_i * t^{m_i} into every component of the
// logarithmic polar map of f (one extra variable t) and checks that t does
// not occur, for every vector m of the given basis.
bool coset_invariance_check(const LaurentPolynomial& f, const LatticeBasis& m_basis);

}  // namespace loghessian
