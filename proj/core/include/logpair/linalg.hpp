#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "logpair/rational.hpp"

namespace logpair {

/// Dense row-major matrix over exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows);
  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const;

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  /// Rows and columns restricted to `indices`, in the given order.
  RationalMatrix principal_submatrix(std::span<const std::size_t> indices) const;

  std::vector<Rational> multiply(std::span<const Rational> v) const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Rational determinant(const RationalMatrix& m);

/// The k x k leading minors for k = 1..n.
std::vector<Rational> leading_principal_minors(const RationalMatrix& m);

/// Exact test: every leading principal minor has sign (-1)^k. Throws
/// InputError for non-square or non-symmetric input. The empty matrix is
/// negative definite.
bool is_negative_definite(const RationalMatrix& m);

/// Unique solution of m * x = rhs. Throws InputError if m is singular or the
/// dimensions disagree.
std::vector<Rational> solve(const RationalMatrix& m, std::span<const Rational> rhs);

}  // namespace logpair
