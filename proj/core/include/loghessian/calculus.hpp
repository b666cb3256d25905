#pragma once

#include <vector>

#include "loghessian/laurent.hpp"

namespace loghessian {

// Tuple of Laurent polynomials sharing one ambient variable count.
struct PolyVector {
  std::vector<LaurentPolynomial> components;

  bool operator==(const PolyVector&) const = default;
};

// Square matrix of Laurent polynomials; the matrix dimension equals the
// ambient variable count of every entry.
class PolyMatrix {
 public:
  explicit PolyMatrix(int dim);

  int dim() const noexcept { return dim_; }
  LaurentPolynomial& at(int i, int j);
  const LaurentPolynomial& at(int i, int j) const;
  bool is_zero() const;

  bool operator==(const PolyMatrix&) const = default;

 private:
  int dim_;
  std::vector<LaurentPolynomial> entries_;
};

// d/dx_var, with var in 1..n: x^I -> I_var * x^(I - e_var).
LaurentPolynomial partial_derivative(const LaurentPolynomial& f, int var);

// Logarithmic derivation x_var * d/dx_var: x^I -> I_var * x^I.
LaurentPolynomial theta(const LaurentPolynomial& f, int var);

// (theta_1 f, ..., theta_n f): the map x -> (x1 f_x1, ..., xn f_xn).
PolyVector logarithmic_polar_map(const LaurentPolynomial& f);

// (f_x1, ..., f_xn).
PolyVector affine_polar_map(const LaurentPolynomial& f);

// Jacobian of the logarithmic polar map: entry (i, j) = d(theta_{i+1} f)/dx_{j+1}.
PolyMatrix log_hessian(const LaurentPolynomial& f);

// Symmetric variant theta_j theta_i f; equals log_hessian with column j
// scaled by x_j.
PolyMatrix log_hessian_symmetric(const LaurentPolynomial& f);

// Ordinary Hessian matrix of second partial derivatives.
PolyMatrix classical_hessian(const LaurentPolynomial& f);

// Exact determinant by fraction-free (Bareiss) elimination. Rows are first
// normalized by their monomial content so intermediate entries stay in the
// ordinary polynomial subring, where the Bareiss divisions are exact.
// The 0x0 determinant is 1.
LaurentPolynomial determinant(const PolyMatrix& m);

// Rank over the fraction field: the size of the largest minor that is not
// identically zero. Deterministic; pivots are chosen as the first
// non-identically-zero entry in column order.
int generic_rank(const PolyMatrix& m);

// Entry-wise evaluation at a torus point.
std::vector<std::vector<Rational>> evaluate_matrix(const PolyMatrix& m,
                                                   const std::vector<Rational>& point);

// Rank of a rational matrix by Gaussian elimination.
int rational_matrix_rank(std::vector<std::vector<Rational>> rows);

// Value of the logarithmic Gauss map at a torus point, normalized so the
// first nonzero coordinate is 1. Throws std::domain_error when the polar map
// vanishes at the point.
std::vector<Rational> log_gauss_point(const LaurentPolynomial& f,
                                      const std::vector<Rational>& x);

}  // namespace loghessian
