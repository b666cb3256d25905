#pragma once

#include <vector>

#include "loghessian/rational.hpp"

namespace loghessian {

// Dense rectangular matrix of arbitrary-precision integers. Zero-row and
// zero-column shapes are legal.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(int rows, int cols);
  static IntegerMatrix identity(int n);
  static IntegerMatrix from_rows(const std::vector<std::vector<Integer>>& rows, int cols);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  Integer& at(int i, int j);
  const Integer& at(int i, int j) const;
  std::vector<Integer> row(int i) const;
  std::vector<Integer> col(int j) const;
  IntegerMatrix transposed() const;

  bool operator==(const IntegerMatrix&) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Integer> entries_;
};

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);

// List of linearly independent integer vectors spanning a sublattice of
// Z^ambient_dim. An empty vector list is the rank-0 lattice.
struct LatticeBasis {
  int ambient_dim = 0;
  std::vector<std::vector<Integer>> vectors;

  int rank() const noexcept { return static_cast<int>(vectors.size()); }

  bool operator==(const LatticeBasis&) const = default;
};

struct HnfResult {
  IntegerMatrix h;  // row-style Hermite normal form
  IntegerMatrix u;  // unimodular, u * m = h
};

struct SnfResult {
  IntegerMatrix s;  // diagonal, d_1 | d_2 | ... >= 1, zeros trailing
  IntegerMatrix u;  // unimodular, u * m * v = s
  IntegerMatrix v;  // unimodular
};

// Row-style Hermite normal form: row echelon, positive pivots, entries above
// a pivot reduced into [0, pivot), zero rows last.
HnfResult hnf(const IntegerMatrix& m);

// Smith normal form with both transforms.
SnfResult snf(const IntegerMatrix& m);

// Exact integer determinant by fraction-free elimination; 1 for 0x0.
Integer integer_determinant(const IntegerMatrix& m);

// det(m) is +1 or -1. Throws std::invalid_argument for non-square input.
bool is_unimodular(const IntegerMatrix& m);

// Exact inverse of a unimodular matrix.
IntegerMatrix inverse_unimodular(const IntegerMatrix& m);

// Rank over the rationals.
int integer_rank(const IntegerMatrix& m);

// Primitive basis of {v in Z^cols : m * v = 0}, computed through the Smith
// normal form; the result spans the full rational kernel intersected with
// the integer lattice.
LatticeBasis saturated_kernel(const IntegerMatrix& m);

// Primitive basis of the saturation of the row span of `generators`; rows
// may be linearly dependent.
LatticeBasis saturate_rows(const IntegerMatrix& generators);

// Primitive basis spanning the same rational subspace; idempotent.
LatticeBasis saturate(const LatticeBasis& basis);

// True when the vectors are independent and the lattice they span is
// primitive (all Smith invariant factors are 1). Empty bases are primitive.
bool is_primitive(const LatticeBasis& basis);

enum class CompletionSide { kLeading, kTrailing };

// Extends a primitive basis of rank r in Z^n to an n x n unimodular matrix
// whose first r (leading) or last r (trailing) columns are exactly the basis
// vectors. Throws std::invalid_argument when the basis is dependent or not
// primitive.
IntegerMatrix unimodular_completion(const LatticeBasis& basis, CompletionSide side);

}  // namespace loghessian
