// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>

#include <map>
#include <string>
#include <vector>

#include "rational_matrix.hpp"

namespace gqm {

/// Finite sum of c_q * exp(q s) with exact rational exponents q and
/// coefficients c_q. Zero coefficients are never stored, so equal values
/// have equal term maps.
class ExpPoly {
 public:
  using Terms = std::map<Rational, Rational>;  // exponent -> coefficient

  ExpPoly() = default;
  ExpPoly(const Rational& constant);  // NOLINT(google-explicit-constructor)
  static ExpPoly term(const Rational& coeff, const Rational& exponent);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Largest exponent present; 0 for the zero polynomial.
  Rational max_exponent() const;

  double evaluate(double s) const;
  /// Value at s = 0: the coefficient sum.
  Rational at_zero() const;

  /// Limit as s -> infinity. Divergent iff some exponent is positive.
  struct Limit {
    Rational value;           // constant term when convergent
    bool divergent = false;
    Rational leading_exponent;
  };
  Limit limit() const;

  /// Exact value with t = exp(-s/step) set to `base`; every q*step must be an
  /// integer. Throws ContractError otherwise or when base <= 0.
  Rational substitute(const Rational& base, const Integer& step) const;

  /// e.g. "1 + e^{-2s}", "-e^{-s}", "e^{(1/2)s}".
  std::string to_string() const;

  ExpPoly& operator+=(const ExpPoly& o);
  ExpPoly& operator-=(const ExpPoly& o);
  friend ExpPoly operator+(ExpPoly a, const ExpPoly& b) { return a += b; }
  friend ExpPoly operator-(ExpPoly a, const ExpPoly& b) { return a -= b; }
  friend ExpPoly operator*(const ExpPoly& a, const ExpPoly& b);
  friend ExpPoly operator-(const ExpPoly& a);
  friend bool operator==(const ExpPoly& a, const ExpPoly& b) { return a.terms_ == b.terms_; }

 private:
  void add_term(const Rational& exponent, const Rational& coeff);
  Terms terms_;
};

enum class OperatorRole { boundary, coboundary, even_laplacian, odd_laplacian };

/// Dense matrix of ExpPoly entries.
class ExpPolyMatrix {
 public:
  ExpPolyMatrix() = default;
  ExpPolyMatrix(std::size_t rows, std::size_t cols, OperatorRole role)
      : rows_(rows), cols_(cols), role_(role), data_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  OperatorRole role() const noexcept { return role_; }
  void set_role(OperatorRole r) noexcept { role_ = r; }

  ExpPoly& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const ExpPoly& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  ExpPolyMatrix transpose(OperatorRole role) const;
  bool is_symmetric() const;
  Rational max_exponent() const;
  /// lcm of all exponent denominators.
  Integer common_step() const;

  Eigen::MatrixXd evaluate(double s) const;
  RationalMatrix at_zero() const;
  RationalMatrix substitute(const Rational& base, const Integer& step) const;

  friend ExpPolyMatrix multiply(const ExpPolyMatrix& a, const ExpPolyMatrix& b, OperatorRole role);
  friend bool operator==(const ExpPolyMatrix& a, const ExpPolyMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  OperatorRole role_ = OperatorRole::boundary;
  std::vector<ExpPoly> data_;
};

std::string to_string(OperatorRole role);

}  // namespace gqm
