// SPDX-License-Identifier: Apache-2.0

#include "exppoly.hpp"

#include <cmath>

#include "errors.hpp"

namespace gqm {

ExpPoly::ExpPoly(const Rational& constant) { add_term(Rational(0), constant); }

ExpPoly ExpPoly::term(const Rational& coeff, const Rational& exponent) {
  ExpPoly p;
  p.add_term(exponent, coeff);
  return p;
}

void ExpPoly::add_term(const Rational& exponent, const Rational& coeff) {
  if (sgn(coeff) == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (inserted) return;
  it->second += coeff;
  if (sgn(it->second) == 0) terms_.erase(it);
}

Rational ExpPoly::max_exponent() const { return terms_.empty() ? Rational(0) : terms_.rbegin()->first; }

double ExpPoly::evaluate(double s) const {
  double v = 0;
  for (const auto& [q, c] : terms_) v += c.get_d() * std::exp(q.get_d() * s);
  return v;
}

Rational ExpPoly::at_zero() const {
  Rational v = 0;
  for (const auto& [q, c] : terms_) v += c;
  return v;
}

ExpPoly::Limit ExpPoly::limit() const {
  Limit l;
  if (terms_.empty()) return l;
  const auto& [q, c] = *terms_.rbegin();
  if (sgn(q) > 0) {
    l.divergent = true;
    l.leading_exponent = q;
    return l;
  }
  l.leading_exponent = q;
  if (auto it = terms_.find(Rational(0)); it != terms_.end()) l.value = it->second;
  return l;
}

Rational ExpPoly::substitute(const Rational& base, const Integer& step) const {
  if (sgn(base) <= 0) throw ContractError("substitution base must be positive");
  Rational v = 0;
  for (const auto& [q, c] : terms_) {
    Rational power_q = -q * Rational(step);
    if (power_q.get_den() != 1) throw ContractError("exponent is not a multiple of the substitution step");
    const Integer& n = power_q.get_num();
    const Integer magnitude = abs(n);
    if (!magnitude.fits_ulong_p()) throw ContractError("substitution exponent too large");
    Rational p;
    unsigned long e = magnitude.get_ui();
    mpz_pow_ui(p.get_num_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(p.get_den_mpz_t(), base.get_den_mpz_t(), e);
    if (sgn(n) < 0) p = 1 / p;
    p.canonicalize();
    v += c * p;
  }
  return v;
}

std::string ExpPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Rational& q = it->first;
    Rational c = it->second;
    bool negative = sgn(c) < 0;
    if (negative) c = -c;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    if (sgn(q) == 0) {
      out += gqm::to_string(c);
      continue;
    }
    if (c != 1) out += gqm::to_string(c) + " ";
    std::string qs;
    if (q == 1)
      qs = "";
    else if (q == -1)
      qs = "-";
    else if (q.get_den() == 1)
      qs = gqm::to_string(q);
    else
      qs = "(" + gqm::to_string(q) + ")";
    out += "e^{" + qs + "s}";
  }
  return out;
}

ExpPoly& ExpPoly::operator+=(const ExpPoly& o) {
  for (const auto& [q, c] : o.terms_) add_term(q, c);
  return *this;
}

ExpPoly& ExpPoly::operator-=(const ExpPoly& o) {
  for (const auto& [q, c] : o.terms_) add_term(q, -c);
  return *this;
}

ExpPoly operator*(const ExpPoly& a, const ExpPoly& b) {
  ExpPoly p;
  for (const auto& [qa, ca] : a.terms_)
    for (const auto& [qb, cb] : b.terms_) p.add_term(qa + qb, ca * cb);
  return p;
}

ExpPoly operator-(const ExpPoly& a) {
  ExpPoly n;
  for (const auto& [q, c] : a.terms_) n.terms_.emplace(q, -c);
  return n;
}

ExpPolyMatrix ExpPolyMatrix::transpose(OperatorRole role) const {
  ExpPolyMatrix t(cols_, rows_, role);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool ExpPolyMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r + 1; c < cols_; ++c)
      if (!((*this)(r, c) == (*this)(c, r))) return false;
  return true;
}

Rational ExpPolyMatrix::max_exponent() const {
  bool any = false;
  Rational m = 0;
  for (const auto& p : data_) {
    if (p.is_zero()) continue;
    if (!any || p.max_exponent() > m) m = p.max_exponent();
    any = true;
  }
  return m;
}

Integer ExpPolyMatrix::common_step() const {
  Integer l = 1;
  for (const auto& p : data_)
    for (const auto& [q, c] : p.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  return l;
}

Eigen::MatrixXd ExpPolyMatrix::evaluate(double s) const {
  Eigen::MatrixXd m(rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(r, c).evaluate(s);
  return m;
}

RationalMatrix ExpPolyMatrix::at_zero() const {
  RationalMatrix m(rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(r, c).at_zero();
  return m;
}

RationalMatrix ExpPolyMatrix::substitute(const Rational& base, const Integer& step) const {
  RationalMatrix m(rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(r, c).substitute(base, step);
  return m;
}

ExpPolyMatrix multiply(const ExpPolyMatrix& a, const ExpPolyMatrix& b, OperatorRole role) {
  if (a.cols_ != b.rows_) throw ContractError("ExpPoly matrix product shape mismatch");
  ExpPolyMatrix p(a.rows_, b.cols_, role);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const ExpPoly& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) p(i, j) += aik * b(k, j);
    }
  return p;
}

std::string to_string(OperatorRole role) {
  switch (role) {
    case OperatorRole::boundary: return "boundary";
    case OperatorRole::coboundary: return "coboundary";
    case OperatorRole::even_laplacian: return "even_laplacian";
    case OperatorRole::odd_laplacian: return "odd_laplacian";
  }
  return "unknown";
}

}  // namespace gqm
