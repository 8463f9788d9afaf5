#include "logpair/linalg.hpp"

#include <string>
#include <utility>

#include "logpair/errors.hpp"

namespace logpair {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw InputError("ragged matrix literal");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  RationalMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw InputError("ragged matrix: row " + std::to_string(r));
    for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool RationalMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = r + 1; c < cols_; ++c) {
      if ((*this)(r, c) != (*this)(c, r)) return false;
    }
  }
  return true;
}

RationalMatrix RationalMatrix::principal_submatrix(std::span<const std::size_t> indices) const {
  RationalMatrix sub(indices.size(), indices.size());
  for (std::size_t i = 0; i < indices.size(); ++i) {
    for (std::size_t j = 0; j < indices.size(); ++j) {
      sub(i, j) = (*this)(indices[i], indices[j]);
    }
  }
  return sub;
}

std::vector<Rational> RationalMatrix::multiply(std::span<const Rational> v) const {
  if (v.size() != cols_) throw InputError("matrix-vector dimension mismatch");
  std::vector<Rational> out(rows_, Rational(0));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out[r] += (*this)(r, c) * v[c];
  }
  return out;
}

Rational determinant(const RationalMatrix& m) {
  if (!m.is_square()) throw InputError("determinant of a non-square matrix");
  RationalMatrix a = m;
  const std::size_t n = a.rows();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(pivot, c), a(col, c));
      det = -det;
    }
    det *= a(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a(r, col) == 0) continue;
      const Rational factor = a(r, col) / a(col, col);
      for (std::size_t c = col; c < n; ++c) a(r, c) -= factor * a(col, c);
    }
  }
  return det;
}

std::vector<Rational> leading_principal_minors(const RationalMatrix& m) {
  if (!m.is_square()) throw InputError("leading minors of a non-square matrix");
  std::vector<Rational> minors;
  minors.reserve(m.rows());
  std::vector<std::size_t> idx;
  for (std::size_t k = 0; k < m.rows(); ++k) {
    idx.push_back(k);
    minors.push_back(determinant(m.principal_submatrix(idx)));
  }
  return minors;
}

bool is_negative_definite(const RationalMatrix& m) {
  if (!m.is_square()) throw InputError("negative-definiteness test needs a square matrix");
  if (!m.is_symmetric()) throw InputError("negative-definiteness test needs a symmetric matrix");

  // Elimination without row exchanges: the k-th pivot is minor_k / minor_{k-1},
  // so the minors alternate starting negative iff every pivot is negative.
  RationalMatrix a = m;
  const std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k) >= 0) return false;
    for (std::size_t r = k + 1; r < n; ++r) {
      if (a(r, k) == 0) continue;
      const Rational factor = a(r, k) / a(k, k);
      for (std::size_t c = k; c < n; ++c) a(r, c) -= factor * a(k, c);
    }
  }
  return true;
}

std::vector<Rational> solve(const RationalMatrix& m, std::span<const Rational> rhs) {
  if (!m.is_square()) throw InputError("linear solve needs a square matrix");
  if (rhs.size() != m.rows()) {
    throw InputError("linear solve: matrix is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                     " but right-hand side has length " + std::to_string(rhs.size()));
  }
  const std::size_t n = m.rows();
  RationalMatrix a = m;
  std::vector<Rational> b(rhs.begin(), rhs.end());

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col) == 0) ++pivot;
    if (pivot == n) throw InputError("linear solve: singular matrix");
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(pivot, c), a(col, c));
      std::swap(b[pivot], b[col]);
    }
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a(r, col) == 0) continue;
      const Rational factor = a(r, col) / a(col, col);
      for (std::size_t c = col; c < n; ++c) a(r, c) -= factor * a(col, c);
      b[r] -= factor * b[col];
    }
  }

  std::vector<Rational> x(n, Rational(0));
  for (std::size_t i = n; i-- > 0;) {
    Rational acc = b[i];
    for (std::size_t c = i + 1; c < n; ++c) acc -= a(i, c) * x[c];
    x[i] = acc / a(i, i);
  }
  return x;
}

}  // namespace logpair
