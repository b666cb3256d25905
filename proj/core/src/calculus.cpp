#include "loghessian/calculus.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace loghessian {

PolyMatrix::PolyMatrix(int dim)
    : dim_(dim),
      entries_(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim),
               LaurentPolynomial(dim)) {
  if (dim < 0) {
    throw std::invalid_argument("negative matrix dimension");
  }
}

LaurentPolynomial& PolyMatrix::at(int i, int j) {
  return entries_[static_cast<std::size_t>(i) * static_cast<std::size_t>(dim_) +
                  static_cast<std::size_t>(j)];
}

const LaurentPolynomial& PolyMatrix::at(int i, int j) const {
  return entries_[static_cast<std::size_t>(i) * static_cast<std::size_t>(dim_) +
                  static_cast<std::size_t>(j)];
}

bool PolyMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const LaurentPolynomial& p) { return p.is_zero(); });
}

namespace {

void require_var(const LaurentPolynomial& f, int var) {
  if (var < 1 || var > f.var_count()) {
    throw std::out_of_range("variable index out of range");
  }
}

}  // namespace

LaurentPolynomial partial_derivative(const LaurentPolynomial& f, int var) {
  require_var(f, var);
  const std::size_t slot = static_cast<std::size_t>(var - 1);
  LaurentPolynomial out(f.var_count());
  for (const auto& [e, c] : f.terms()) {
    if (e[slot] == 0) {
      continue;
    }
    ExponentVector shifted = e;
    shifted[slot] -= 1;
    out.add_term(shifted, Rational(e[slot]) * c);
  }
  return out;
}

LaurentPolynomial theta(const LaurentPolynomial& f, int var) {
  require_var(f, var);
  const std::size_t slot = static_cast<std::size_t>(var - 1);
  LaurentPolynomial out(f.var_count());
  for (const auto& [e, c] : f.terms()) {
    out.add_term(e, Rational(e[slot]) * c);
  }
  return out;
}

PolyVector logarithmic_polar_map(const LaurentPolynomial& f) {
  PolyVector v;
  v.components.reserve(static_cast<std::size_t>(f.var_count()));
  for (int i = 1; i <= f.var_count(); ++i) {
    v.components.push_back(theta(f, i));
  }
  return v;
}

PolyVector affine_polar_map(const LaurentPolynomial& f) {
  PolyVector v;
  v.components.reserve(static_cast<std::size_t>(f.var_count()));
  for (int i = 1; i <= f.var_count(); ++i) {
    v.components.push_back(partial_derivative(f, i));
  }
  return v;
}

PolyMatrix log_hessian(const LaurentPolynomial& f) {
  const int n = f.var_count();
  PolyMatrix m(n);
  for (int i = 1; i <= n; ++i) {
    const LaurentPolynomial row = theta(f, i);
    for (int j = 1; j <= n; ++j) {
      m.at(i - 1, j - 1) = partial_derivative(row, j);
    }
  }
  return m;
}

PolyMatrix log_hessian_symmetric(const LaurentPolynomial& f) {
  const int n = f.var_count();
  PolyMatrix m(n);
  for (int i = 1; i <= n; ++i) {
    const LaurentPolynomial row = theta(f, i);
    for (int j = 1; j <= n; ++j) {
      m.at(i - 1, j - 1) = theta(row, j);
    }
  }
  return m;
}

PolyMatrix classical_hessian(const LaurentPolynomial& f) {
  const int n = f.var_count();
  PolyMatrix m(n);
  for (int i = 1; i <= n; ++i) {
    const LaurentPolynomial row = partial_derivative(f, i);
    for (int j = 1; j <= n; ++j) {
      m.at(i - 1, j - 1) = partial_derivative(row, j);
    }
  }
  return m;
}

namespace {

LaurentPolynomial shift_by_monomial(const LaurentPolynomial& f, const ExponentVector& delta) {
  LaurentPolynomial out(f.var_count());
  ExponentVector e(delta.size());
  for (const auto& [ef, c] : f.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      e[i] = ef[i] + delta[i];
    }
    out.add_term(e, c);
  }
  return out;
}

// Exact division, valid when the quotient exists and all inputs live in the
// ordinary polynomial subring (exponents >= 0). Runs one step per quotient
// term: the leading term of a product is the product of leading terms, so
// lt(r)/lt(g) is always the leading term of the remaining quotient.
LaurentPolynomial exact_divide(const LaurentPolynomial& f, const LaurentPolynomial& g) {
  if (g.is_zero()) {
    throw std::logic_error("polynomial division by zero");
  }
  if (g.is_constant()) {
    return Rational(Rational(1) / g.terms().begin()->second) * f;
  }
  LaurentPolynomial quotient(f.var_count());
  LaurentPolynomial remainder = f;
  const auto& [lead_g_exp, lead_g_coeff] = *g.terms().rbegin();
  ExponentVector step(lead_g_exp.size());
  while (!remainder.is_zero()) {
    const auto& [lead_r_exp, lead_r_coeff] = *remainder.terms().rbegin();
    for (std::size_t i = 0; i < step.size(); ++i) {
      step[i] = lead_r_exp[i] - lead_g_exp[i];
      if (step[i] < 0) {
        throw std::logic_error("inexact polynomial division");
      }
    }
    const Rational coeff = lead_r_coeff / lead_g_coeff;
    quotient.add_term(step, coeff);
    remainder = remainder - (coeff * shift_by_monomial(g, step));
  }
  return quotient;
}

// Factors the monomial content x^c (componentwise minimum exponent) out of a
// row of nonzero entries, leaving every entry in the ordinary subring.
// Returns false when the whole row is zero.
bool normalize_row(std::vector<LaurentPolynomial>& row, ExponentVector& content) {
  bool seen = false;
  for (const LaurentPolynomial& entry : row) {
    for (const auto& [e, c] : entry.terms()) {
      if (!seen) {
        content = e;
        seen = true;
      } else {
        for (std::size_t i = 0; i < content.size(); ++i) {
          content[i] = std::min(content[i], e[i]);
        }
      }
    }
  }
  if (!seen) {
    return false;
  }
  ExponentVector negated(content.size());
  for (std::size_t i = 0; i < content.size(); ++i) {
    negated[i] = -content[i];
  }
  for (LaurentPolynomial& entry : row) {
    if (!entry.is_zero()) {
      entry = shift_by_monomial(entry, negated);
    }
  }
  return true;
}

}  // namespace

LaurentPolynomial determinant(const PolyMatrix& m) {
  const int n = m.dim();
  if (n == 0) {
    return LaurentPolynomial::constant(0, Rational(1));
  }
  std::vector<std::vector<LaurentPolynomial>> w(
      static_cast<std::size_t>(n), std::vector<LaurentPolynomial>());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      w[static_cast<std::size_t>(i)].push_back(m.at(i, j));
    }
  }
  ExponentVector unit_factor(static_cast<std::size_t>(n), 0);
  for (auto& row : w) {
    ExponentVector content(static_cast<std::size_t>(n), 0);
    if (!normalize_row(row, content)) {
      return LaurentPolynomial(n);
    }
    for (std::size_t i = 0; i < unit_factor.size(); ++i) {
      unit_factor[i] += content[i];
    }
  }

  int sign = 1;
  LaurentPolynomial previous_pivot = LaurentPolynomial::constant(n, Rational(1));
  for (int k = 0; k < n; ++k) {
    int pivot = -1;
    for (int r = k; r < n; ++r) {
      if (!w[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)].is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) {
      return LaurentPolynomial(n);
    }
    if (pivot != k) {
      std::swap(w[static_cast<std::size_t>(pivot)], w[static_cast<std::size_t>(k)]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      auto& row_i = w[static_cast<std::size_t>(i)];
      const auto& row_k = w[static_cast<std::size_t>(k)];
      for (int j = k + 1; j < n; ++j) {
        const LaurentPolynomial num =
            row_k[static_cast<std::size_t>(k)] * row_i[static_cast<std::size_t>(j)] -
            row_i[static_cast<std::size_t>(k)] * row_k[static_cast<std::size_t>(j)];
        row_i[static_cast<std::size_t>(j)] = exact_divide(num, previous_pivot);
      }
      row_i[static_cast<std::size_t>(k)] = LaurentPolynomial(n);
    }
    previous_pivot = w[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
  }

  LaurentPolynomial result = w[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - 1)];
  if (sign < 0) {
    result = -result;
  }
  bool trivial_factor = std::all_of(unit_factor.begin(), unit_factor.end(),
                                    [](std::int64_t e) { return e == 0; });
  return trivial_factor ? result : shift_by_monomial(result, unit_factor);
}

int generic_rank(const PolyMatrix& m) {
  const int n = m.dim();
  std::vector<std::vector<LaurentPolynomial>> w(
      static_cast<std::size_t>(n), std::vector<LaurentPolynomial>());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      w[static_cast<std::size_t>(i)].push_back(m.at(i, j));
    }
  }
  for (auto& row : w) {
    ExponentVector content(static_cast<std::size_t>(n), 0);
    normalize_row(row, content);
  }

  int rank = 0;
  int pivot_row = 0;
  LaurentPolynomial previous_pivot = LaurentPolynomial::constant(n, Rational(1));
  for (int col = 0; col < n && pivot_row < n; ++col) {
    int pivot = -1;
    for (int r = pivot_row; r < n; ++r) {
      if (!w[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)].is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) {
      continue;
    }
    if (pivot != pivot_row) {
      std::swap(w[static_cast<std::size_t>(pivot)], w[static_cast<std::size_t>(pivot_row)]);
    }
    const auto& row_p = w[static_cast<std::size_t>(pivot_row)];
    for (int i = pivot_row + 1; i < n; ++i) {
      auto& row_i = w[static_cast<std::size_t>(i)];
      for (int j = col + 1; j < n; ++j) {
        const LaurentPolynomial num =
            row_p[static_cast<std::size_t>(col)] * row_i[static_cast<std::size_t>(j)] -
            row_i[static_cast<std::size_t>(col)] * row_p[static_cast<std::size_t>(j)];
        row_i[static_cast<std::size_t>(j)] = exact_divide(num, previous_pivot);
      }
      row_i[static_cast<std::size_t>(col)] = LaurentPolynomial(n);
    }
    previous_pivot = row_p[static_cast<std::size_t>(col)];
    ++pivot_row;
    ++rank;
  }
  return rank;
}

std::vector<std::vector<Rational>> evaluate_matrix(const PolyMatrix& m,
                                                   const std::vector<Rational>& point) {
  std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(m.dim()));
  for (int i = 0; i < m.dim(); ++i) {
    rows[static_cast<std::size_t>(i)].reserve(static_cast<std::size_t>(m.dim()));
    for (int j = 0; j < m.dim(); ++j) {
      rows[static_cast<std::size_t>(i)].push_back(m.at(i, j).evaluate(point));
    }
  }
  return rows;
}

int rational_matrix_rank(std::vector<std::vector<Rational>> rows) {
  if (rows.empty()) {
    return 0;
  }
  const std::size_t cols = rows.front().size();
  std::size_t pivot_row = 0;
  int rank = 0;
  for (std::size_t col = 0; col < cols && pivot_row < rows.size(); ++col) {
    std::size_t pivot = pivot_row;
    while (pivot < rows.size() && rows[pivot][col] == 0) {
      ++pivot;
    }
    if (pivot == rows.size()) {
      continue;
    }
    std::swap(rows[pivot], rows[pivot_row]);
    for (std::size_t i = pivot_row + 1; i < rows.size(); ++i) {
      if (rows[i][col] == 0) {
        continue;
      }
      const Rational factor = rows[i][col] / rows[pivot_row][col];
      for (std::size_t j = col; j < cols; ++j) {
        rows[i][j] -= factor * rows[pivot_row][j];
      }
    }
    ++pivot_row;
    ++rank;
  }
  return rank;
}

std::vector<Rational> log_gauss_point(const LaurentPolynomial& f,
                                      const std::vector<Rational>& x) {
  std::vector<Rational> values;
  values.reserve(static_cast<std::size_t>(f.var_count()));
  for (int i = 1; i <= f.var_count(); ++i) {
    values.push_back(theta(f, i).evaluate(x));
  }
  const Rational* first_nonzero = nullptr;
  for (const Rational& v : values) {
    if (v != 0) {
      first_nonzero = &v;
      break;
    }
  }
  if (first_nonzero == nullptr) {
    throw std::domain_error("logarithmic Gauss map undefined: polar map vanishes at the point");
  }
  const Rational scale = *first_nonzero;
  for (Rational& v : values) {
    v /= scale;
  }
  return values;
}

}  // namespace loghessian
