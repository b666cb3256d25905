#include "loghessian/lattice.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace loghessian {

IntegerMatrix::IntegerMatrix(int rows, int cols)
    : rows_(rows),
      cols_(cols),
      entries_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), Integer(0)) {
  if (rows < 0 || cols < 0) {
    throw std::invalid_argument("negative matrix dimension");
  }
}

IntegerMatrix IntegerMatrix::identity(int n) {
  IntegerMatrix m(n, n);
  for (int i = 0; i < n; ++i) {
    m.at(i, i) = 1;
  }
  return m;
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<std::vector<Integer>>& rows, int cols) {
  IntegerMatrix m(static_cast<int>(rows.size()), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != static_cast<std::size_t>(cols)) {
      throw std::invalid_argument("row length does not match column count");
    }
    for (int j = 0; j < cols; ++j) {
      m.at(static_cast<int>(i), j) = rows[i][static_cast<std::size_t>(j)];
    }
  }
  return m;
}

Integer& IntegerMatrix::at(int i, int j) {
  return entries_[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
                  static_cast<std::size_t>(j)];
}

const Integer& IntegerMatrix::at(int i, int j) const {
  return entries_[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
                  static_cast<std::size_t>(j)];
}

std::vector<Integer> IntegerMatrix::row(int i) const {
  std::vector<Integer> out;
  out.reserve(static_cast<std::size_t>(cols_));
  for (int j = 0; j < cols_; ++j) {
    out.push_back(at(i, j));
  }
  return out;
}

std::vector<Integer> IntegerMatrix::col(int j) const {
  std::vector<Integer> out;
  out.reserve(static_cast<std::size_t>(rows_));
  for (int i = 0; i < rows_; ++i) {
    out.push_back(at(i, j));
  }
  return out;
}

IntegerMatrix IntegerMatrix::transposed() const {
  IntegerMatrix m(cols_, rows_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) {
      m.at(j, i) = at(i, j);
    }
  }
  return m;
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("matrix product dimension mismatch");
  }
  IntegerMatrix out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int k = 0; k < a.cols(); ++k) {
      const Integer& aik = a.at(i, k);
      if (aik == 0) {
        continue;
      }
      for (int j = 0; j < b.cols(); ++j) {
        out.at(i, j) += aik * b.at(k, j);
      }
    }
  }
  return out;
}

namespace {

struct Egcd {
  Integer g;  // nonnegative
  Integer s;
  Integer t;  // s*a + t*b = g
};

Egcd extended_gcd(const Integer& a, const Integer& b) {
  Integer old_r = a, r = b;
  Integer old_s = 1, s = 0;
  Integer old_t = 0, t = 1;
  while (r != 0) {
    Integer q = old_r / r;
    Integer tmp = old_r - q * r;
    old_r = std::exchange(r, tmp);
    tmp = old_s - q * s;
    old_s = std::exchange(s, tmp);
    tmp = old_t - q * t;
    old_t = std::exchange(t, tmp);
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  return {old_r, old_s, old_t};
}

// Floor division for a positive divisor.
Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if (a % b != 0 && a < 0) {
    --q;
  }
  return q;
}

void swap_rows(IntegerMatrix& m, int r1, int r2) {
  for (int j = 0; j < m.cols(); ++j) {
    std::swap(m.at(r1, j), m.at(r2, j));
  }
}

void swap_cols(IntegerMatrix& m, int c1, int c2) {
  for (int i = 0; i < m.rows(); ++i) {
    std::swap(m.at(i, c1), m.at(i, c2));
  }
}

void negate_row(IntegerMatrix& m, int r) {
  for (int j = 0; j < m.cols(); ++j) {
    m.at(r, j) = -m.at(r, j);
  }
}

// row_dst += c * row_src
void row_axpy(IntegerMatrix& m, int dst, int src, const Integer& c) {
  for (int j = 0; j < m.cols(); ++j) {
    m.at(dst, j) += c * m.at(src, j);
  }
}

// col_dst += c * col_src
void col_axpy(IntegerMatrix& m, int dst, int src, const Integer& c) {
  for (int i = 0; i < m.rows(); ++i) {
    m.at(i, dst) += c * m.at(i, src);
  }
}

// Applies [[c11, c12], [c21, c22]] to the row pair (r1, r2).
void combine_rows(IntegerMatrix& m, int r1, int r2, const Integer& c11, const Integer& c12,
                  const Integer& c21, const Integer& c22) {
  for (int j = 0; j < m.cols(); ++j) {
    Integer x = m.at(r1, j);
    Integer y = m.at(r2, j);
    m.at(r1, j) = c11 * x + c12 * y;
    m.at(r2, j) = c21 * x + c22 * y;
  }
}

void combine_cols(IntegerMatrix& m, int c1, int c2, const Integer& c11, const Integer& c12,
                  const Integer& c21, const Integer& c22) {
  for (int i = 0; i < m.rows(); ++i) {
    Integer x = m.at(i, c1);
    Integer y = m.at(i, c2);
    m.at(i, c1) = c11 * x + c12 * y;
    m.at(i, c2) = c21 * x + c22 * y;
  }
}

}  // namespace

HnfResult hnf(const IntegerMatrix& m) {
  HnfResult res{m, IntegerMatrix::identity(m.rows())};
  IntegerMatrix& h = res.h;
  IntegerMatrix& u = res.u;
  int pivot_row = 0;
  for (int col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
    int found = -1;
    for (int i = pivot_row; i < m.rows(); ++i) {
      if (h.at(i, col) != 0) {
        found = i;
        break;
      }
    }
    if (found < 0) {
      continue;
    }
    if (found != pivot_row) {
      swap_rows(h, found, pivot_row);
      swap_rows(u, found, pivot_row);
    }
    for (int i = pivot_row + 1; i < m.rows(); ++i) {
      if (h.at(i, col) == 0) {
        continue;
      }
      const Integer a = h.at(pivot_row, col);
      const Integer b = h.at(i, col);
      if (b % a == 0) {
        const Integer q = -(b / a);
        row_axpy(h, i, pivot_row, q);
        row_axpy(u, i, pivot_row, q);
      } else {
        const Egcd e = extended_gcd(a, b);
        const Integer c21 = -(b / e.g);
        const Integer c22 = a / e.g;
        combine_rows(h, pivot_row, i, e.s, e.t, c21, c22);
        combine_rows(u, pivot_row, i, e.s, e.t, c21, c22);
      }
    }
    if (h.at(pivot_row, col) < 0) {
      negate_row(h, pivot_row);
      negate_row(u, pivot_row);
    }
    const Integer pivot = h.at(pivot_row, col);
    for (int i = 0; i < pivot_row; ++i) {
      const Integer q = floor_div(h.at(i, col), pivot);
      if (q != 0) {
        row_axpy(h, i, pivot_row, -q);
        row_axpy(u, i, pivot_row, -q);
      }
    }
    ++pivot_row;
  }
  return res;
}

namespace {

// One cleaning sweep over row t and column t of s. Entries divisible by the
// pivot are eliminated without touching the pivot row/column; the rest go
// through an extended-gcd combine that strictly shrinks |pivot|.
bool snf_clear_once(IntegerMatrix& s, IntegerMatrix& u, IntegerMatrix& v, int t) {
  bool applied = false;
  for (int i = t + 1; i < s.rows(); ++i) {
    if (s.at(i, t) == 0) {
      continue;
    }
    applied = true;
    const Integer a = s.at(t, t);
    const Integer b = s.at(i, t);
    if (b % a == 0) {
      const Integer q = -(b / a);
      row_axpy(s, i, t, q);
      row_axpy(u, i, t, q);
    } else {
      const Egcd e = extended_gcd(a, b);
      const Integer c21 = -(b / e.g);
      const Integer c22 = a / e.g;
      combine_rows(s, t, i, e.s, e.t, c21, c22);
      combine_rows(u, t, i, e.s, e.t, c21, c22);
    }
  }
  for (int j = t + 1; j < s.cols(); ++j) {
    if (s.at(t, j) == 0) {
      continue;
    }
    applied = true;
    const Integer a = s.at(t, t);
    const Integer b = s.at(t, j);
    if (b % a == 0) {
      const Integer q = -(b / a);
      col_axpy(s, j, t, q);
      col_axpy(v, j, t, q);
    } else {
      const Egcd e = extended_gcd(a, b);
      const Integer c21 = -(b / e.g);
      const Integer c22 = a / e.g;
      combine_cols(s, t, j, e.s, e.t, c21, c22);
      combine_cols(v, t, j, e.s, e.t, c21, c22);
    }
  }
  return applied;
}

}  // namespace

SnfResult snf(const IntegerMatrix& m) {
  SnfResult res{m, IntegerMatrix::identity(m.rows()), IntegerMatrix::identity(m.cols())};
  IntegerMatrix& s = res.s;
  IntegerMatrix& u = res.u;
  IntegerMatrix& v = res.v;
  const int limit = std::min(m.rows(), m.cols());
  for (int t = 0; t < limit; ++t) {
    int pi = -1;
    int pj = -1;
    for (int i = t; i < m.rows() && pi < 0; ++i) {
      for (int j = t; j < m.cols(); ++j) {
        if (s.at(i, j) != 0) {
          pi = i;
          pj = j;
          break;
        }
      }
    }
    if (pi < 0) {
      break;
    }
    if (pi != t) {
      swap_rows(s, pi, t);
      swap_rows(u, pi, t);
    }
    if (pj != t) {
      swap_cols(s, pj, t);
      swap_cols(v, pj, t);
    }
    while (true) {
      while (snf_clear_once(s, u, v, t)) {
      }
      if (s.at(t, t) < 0) {
        negate_row(s, t);
        negate_row(u, t);
      }
      // Divisibility chain: merge a row holding a non-multiple into row t and
      // clean again; the pivot strictly shrinks each round.
      const Integer d = s.at(t, t);
      int bad_i = -1;
      for (int i = t + 1; i < m.rows() && bad_i < 0; ++i) {
        for (int j = t + 1; j < m.cols(); ++j) {
          if (s.at(i, j) % d != 0) {
            bad_i = i;
            break;
          }
        }
      }
      if (bad_i < 0) {
        break;
      }
      row_axpy(s, t, bad_i, Integer(1));
      row_axpy(u, t, bad_i, Integer(1));
    }
  }
  return res;
}

Integer integer_determinant(const IntegerMatrix& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("determinant of a non-square matrix");
  }
  const int n = m.rows();
  if (n == 0) {
    return 1;
  }
  IntegerMatrix w = m;
  int sign = 1;
  Integer prev = 1;
  for (int k = 0; k < n; ++k) {
    int pivot = -1;
    for (int r = k; r < n; ++r) {
      if (w.at(r, k) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) {
      return 0;
    }
    if (pivot != k) {
      swap_rows(w, pivot, k);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        w.at(i, j) = (w.at(k, k) * w.at(i, j) - w.at(i, k) * w.at(k, j)) / prev;
      }
      w.at(i, k) = 0;
    }
    prev = w.at(k, k);
  }
  return sign < 0 ? Integer(-w.at(n - 1, n - 1)) : w.at(n - 1, n - 1);
}

bool is_unimodular(const IntegerMatrix& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("unimodularity check on a non-square matrix");
  }
  const Integer d = integer_determinant(m);
  return d == 1 || d == -1;
}

IntegerMatrix inverse_unimodular(const IntegerMatrix& m) {
  if (!is_unimodular(m)) {
    throw std::invalid_argument("matrix is not unimodular");
  }
  const int n = m.rows();
  std::vector<std::vector<Rational>> aug(
      static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(2 * n), 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      aug[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = Rational(m.at(i, j));
    }
    aug[static_cast<std::size_t>(i)][static_cast<std::size_t>(n + i)] = 1;
  }
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    while (aug[static_cast<std::size_t>(pivot)][static_cast<std::size_t>(col)] == 0) {
      ++pivot;
    }
    std::swap(aug[static_cast<std::size_t>(pivot)], aug[static_cast<std::size_t>(col)]);
    auto& prow = aug[static_cast<std::size_t>(col)];
    const Rational inv = Rational(1) / prow[static_cast<std::size_t>(col)];
    for (auto& x : prow) {
      x *= inv;
    }
    for (int i = 0; i < n; ++i) {
      if (i == col) {
        continue;
      }
      auto& row = aug[static_cast<std::size_t>(i)];
      const Rational factor = row[static_cast<std::size_t>(col)];
      if (factor == 0) {
        continue;
      }
      for (int j = 0; j < 2 * n; ++j) {
        row[static_cast<std::size_t>(j)] -= factor * prow[static_cast<std::size_t>(j)];
      }
    }
  }
  IntegerMatrix out(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Rational& x = aug[static_cast<std::size_t>(i)][static_cast<std::size_t>(n + j)];
      if (denominator(x) != 1) {
        throw std::logic_error("unimodular inverse is not integral");
      }
      out.at(i, j) = numerator(x);
    }
  }
  return out;
}

int integer_rank(const IntegerMatrix& m) {
  IntegerMatrix w = m;
  int rank = 0;
  int pivot_row = 0;
  Integer prev = 1;
  for (int col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
    int pivot = -1;
    for (int r = pivot_row; r < m.rows(); ++r) {
      if (w.at(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) {
      continue;
    }
    if (pivot != pivot_row) {
      swap_rows(w, pivot, pivot_row);
    }
    for (int i = pivot_row + 1; i < m.rows(); ++i) {
      for (int j = col + 1; j < m.cols(); ++j) {
        w.at(i, j) = (w.at(pivot_row, col) * w.at(i, j) - w.at(i, col) * w.at(pivot_row, j)) / prev;
      }
      w.at(i, col) = 0;
    }
    prev = w.at(pivot_row, col);
    ++pivot_row;
    ++rank;
  }
  return rank;
}

namespace {

int snf_nonzero_count(const IntegerMatrix& s) {
  int count = 0;
  const int limit = std::min(s.rows(), s.cols());
  for (int i = 0; i < limit; ++i) {
    if (s.at(i, i) != 0) {
      ++count;
    }
  }
  return count;
}

// Rewrites a basis as the nonzero rows of its Hermite normal form: the
// canonical basis of the spanned lattice, which makes saturation idempotent
// on the nose.
LatticeBasis canonical_basis(const std::vector<std::vector<Integer>>& vectors, int ambient) {
  LatticeBasis basis;
  basis.ambient_dim = ambient;
  if (vectors.empty()) {
    return basis;
  }
  const HnfResult res = hnf(IntegerMatrix::from_rows(vectors, ambient));
  for (int i = 0; i < res.h.rows(); ++i) {
    std::vector<Integer> row = res.h.row(i);
    const bool nonzero =
        std::any_of(row.begin(), row.end(), [](const Integer& x) { return x != 0; });
    if (nonzero) {
      basis.vectors.push_back(std::move(row));
    }
  }
  return basis;
}

}  // namespace

LatticeBasis saturated_kernel(const IntegerMatrix& m) {
  const SnfResult res = snf(m);
  const int rank = snf_nonzero_count(res.s);
  std::vector<std::vector<Integer>> vectors;
  for (int j = rank; j < m.cols(); ++j) {
    vectors.push_back(res.v.col(j));
  }
  return canonical_basis(vectors, m.cols());
}

LatticeBasis saturate_rows(const IntegerMatrix& generators) {
  LatticeBasis basis;
  basis.ambient_dim = generators.cols();
  if (generators.rows() == 0 || generators.cols() == 0) {
    return basis;
  }
  const SnfResult res = snf(generators);
  const int rank = snf_nonzero_count(res.s);
  if (rank == 0) {
    return basis;
  }
  const IntegerMatrix vinv = inverse_unimodular(res.v);
  std::vector<std::vector<Integer>> vectors;
  for (int i = 0; i < rank; ++i) {
    vectors.push_back(vinv.row(i));
  }
  return canonical_basis(vectors, generators.cols());
}

LatticeBasis saturate(const LatticeBasis& basis) {
  return saturate_rows(IntegerMatrix::from_rows(basis.vectors, basis.ambient_dim));
}

bool is_primitive(const LatticeBasis& basis) {
  if (basis.vectors.empty()) {
    return true;
  }
  const IntegerMatrix m = IntegerMatrix::from_rows(basis.vectors, basis.ambient_dim);
  const SnfResult res = snf(m);
  if (snf_nonzero_count(res.s) != basis.rank()) {
    return false;
  }
  for (int i = 0; i < basis.rank(); ++i) {
    if (res.s.at(i, i) != 1) {
      return false;
    }
  }
  return true;
}

IntegerMatrix unimodular_completion(const LatticeBasis& basis, CompletionSide side) {
  const int n = basis.ambient_dim;
  const int r = basis.rank();
  if (r > n) {
    throw std::invalid_argument("basis rank exceeds ambient dimension");
  }
  if (r == 0) {
    return IntegerMatrix::identity(n);
  }
  IntegerMatrix c(n, r);
  for (int j = 0; j < r; ++j) {
    const auto& vec = basis.vectors[static_cast<std::size_t>(j)];
    if (vec.size() != static_cast<std::size_t>(n)) {
      throw std::invalid_argument("basis vector length does not match ambient dimension");
    }
    for (int i = 0; i < n; ++i) {
      c.at(i, j) = vec[static_cast<std::size_t>(i)];
    }
  }
  const SnfResult res = snf(c);
  if (snf_nonzero_count(res.s) < r) {
    throw std::invalid_argument("basis vectors are not linearly independent");
  }
  for (int i = 0; i < r; ++i) {
    if (res.s.at(i, i) != 1) {
      throw std::invalid_argument("basis is not primitive");
    }
  }
  const IntegerMatrix uinv = inverse_unimodular(res.u);
  const IntegerMatrix vinv = inverse_unimodular(res.v);
  IntegerMatrix k(n, n);
  if (side == CompletionSide::kLeading) {
    for (int i = 0; i < r; ++i) {
      for (int j = 0; j < r; ++j) {
        k.at(i, j) = vinv.at(i, j);
      }
    }
    for (int i = r; i < n; ++i) {
      k.at(i, i) = 1;
    }
  } else {
    for (int j = 0; j < n - r; ++j) {
      k.at(r + j, j) = 1;
    }
    for (int i = 0; i < r; ++i) {
      for (int j = 0; j < r; ++j) {
        k.at(i, n - r + j) = vinv.at(i, j);
      }
    }
  }
  return uinv * k;
}

}  // namespace loghessian
