// SPDX-License-Identifier: Apache-2.0

#include "rational_matrix.hpp"

#include "errors.hpp"

namespace gqm {

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw ContractError("ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::diagonal(const std::vector<Rational>& d) {
  RationalMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool RationalMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r + 1; c < cols_; ++c)
      if ((*this)(r, c) != (*this)(c, r)) return false;
  return true;
}

bool RationalMatrix::is_zero() const {
  for (const auto& v : data_)
    if (sgn(v) != 0) return false;
  return true;
}

std::vector<Rational> RationalMatrix::row_sums() const {
  std::vector<Rational> s(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) s[r] += (*this)(r, c);
  return s;
}

std::vector<Rational> RationalMatrix::col_sums() const {
  std::vector<Rational> s(cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) s[c] += (*this)(r, c);
  return s;
}

std::vector<Rational> RationalMatrix::apply(const std::vector<Rational>& x) const {
  if (x.size() != cols_) throw ContractError("matrix-vector shape mismatch");
  std::vector<Rational> y(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (sgn((*this)(r, c)) != 0) y[r] += (*this)(r, c) * x[c];
  return y;
}

Eigen::MatrixXd RationalMatrix::to_eigen() const {
  Eigen::MatrixXd m(rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(r, c).get_d();
  return m;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw ContractError("matrix product shape mismatch");
  RationalMatrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (sgn(b(k, j)) != 0) p(i, j) += aik * b(k, j);
    }
  return p;
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ContractError("matrix sum shape mismatch");
  RationalMatrix s(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) s.data_[i] = a.data_[i] + b.data_[i];
  return s;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ContractError("matrix difference shape mismatch");
  RationalMatrix s(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) s.data_[i] = a.data_[i] - b.data_[i];
  return s;
}

RationalMatrix operator-(const RationalMatrix& a) {
  RationalMatrix n(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) n.data_[i] = -a.data_[i];
  return n;
}

bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

RationalMatrix power(const RationalMatrix& m, unsigned k) {
  if (!m.is_square()) throw ContractError("power of a non-square matrix");
  RationalMatrix result = RationalMatrix::identity(m.rows());
  RationalMatrix base = m;
  while (k) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return result;
}

}  // namespace gqm
