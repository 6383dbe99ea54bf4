// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "rational.hpp"

namespace gqm {

/// Dense row-major matrix of exact rationals. Entries are kept in lowest
/// terms; every arithmetic path goes through mpq_class, which canonicalizes.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  /// Integer literal rows, mainly for tests: {{1, -1}, {-1, 1}}.
  RationalMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix diagonal(const std::vector<Rational>& d);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RationalMatrix transpose() const;
  bool is_square() const noexcept { return rows_ == cols_; }
  bool is_symmetric() const;
  bool is_zero() const;

  std::vector<Rational> row_sums() const;
  std::vector<Rational> col_sums() const;
  std::vector<Rational> apply(const std::vector<Rational>& x) const;

  Eigen::MatrixXd to_eigen() const;

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator-(const RationalMatrix& a);
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Integer power of a square matrix by repeated squaring.
RationalMatrix power(const RationalMatrix& m, unsigned k);

}  // namespace gqm
