// SPDX-License-Identifier: Apache-2.0

#include "linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "errors.hpp"

namespace gqm {

Echelon fraction_free_echelon(const RationalMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
  // Row scaling does not change the row space.
  for (std::size_t r = 0; r < rows; ++r) {
    Integer l = 1;
    for (std::size_t c = 0; c < cols; ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < cols; ++c) a[r][c] = m(r, c).get_num() * (l / m(r, c).get_den());
  }

  Echelon out;
  out.cols = cols;
  Integer prev = 1;
  std::size_t r = 0;
  Integer t;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(a[p][c]) == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        t = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        if (!mpz_divisible_p(t.get_mpz_t(), prev.get_mpz_t()))
          throw InvariantViolation("fraction-free elimination lost exactness");
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    out.pivot_columns.push_back(c);
    ++r;
  }
  a.resize(r);
  out.rows = std::move(a);
  return out;
}

std::size_t rational_rank(const RationalMatrix& m) { return fraction_free_echelon(m).rank(); }

KernelBasis rational_kernel(const RationalMatrix& m) {
  const Echelon e = fraction_free_echelon(m);
  std::vector<bool> is_pivot(e.cols, false);
  for (auto c : e.pivot_columns) is_pivot[c] = true;

  KernelBasis k;
  for (std::size_t free = 0; free < e.cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> x(e.cols);
    x[free] = 1;
    for (std::size_t i = e.rank(); i-- > 0;) {
      const std::size_t pc = e.pivot_columns[i];
      Rational s = 0;
      for (std::size_t j = pc + 1; j < e.cols; ++j)
        if (sgn(e.rows[i][j]) != 0 && sgn(x[j]) != 0) s += Rational(e.rows[i][j]) * x[j];
      x[pc] = -s / Rational(e.rows[i][pc]);
    }
    k.basis.push_back(std::move(x));
  }
  k.dimension = k.basis.size();
  return k;
}

double infinity_norm(const Eigen::MatrixXd& m) {
  if (m.size() == 0) return 0;
  return m.cwiseAbs().rowwise().sum().maxCoeff();
}

double zero_threshold(double norm, double tol) { return tol * std::max(1.0, norm); }

NumericSpectrum numeric_symmetric_spectrum(const Eigen::MatrixXd& m) {
  NumericSpectrum s;
  s.norm = infinity_norm(m);
  if (m.rows() == 0) {
    s.eigenvectors = Eigen::MatrixXd(0, 0);
    return s;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
  if (solver.info() != Eigen::Success) throw InvariantViolation("symmetric eigensolver did not converge");
  s.eigenvalues.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + solver.eigenvalues().size());
  s.eigenvectors = solver.eigenvectors();
  return s;
}

Spectrum symmetric_spectrum(const RationalMatrix& m, double tol) {
  if (!m.is_symmetric()) throw ContractError("symmetric_spectrum requires a symmetric matrix");
  const Eigen::MatrixXd md = m.to_eigen();
  NumericSpectrum ns = numeric_symmetric_spectrum(md);

  Spectrum s;
  s.eigenvalues = std::move(ns.eigenvalues);
  s.eigenvectors = std::move(ns.eigenvectors);
  s.zero_threshold = zero_threshold(ns.norm, tol);
  s.zero_count = static_cast<std::size_t>(
      std::count_if(s.eigenvalues.begin(), s.eigenvalues.end(), [&](double l) { return std::abs(l) <= s.zero_threshold; }));
  s.kernel_dimension = nullity(m);
  if (md.rows() > 0) {
    Eigen::VectorXd lambda = Eigen::Map<const Eigen::VectorXd>(s.eigenvalues.data(), s.eigenvalues.size());
    Eigen::MatrixXd rebuilt = s.eigenvectors * lambda.asDiagonal() * s.eigenvectors.transpose();
    s.residual = (md - rebuilt).cwiseAbs().maxCoeff();
  }
  if (s.zero_count != s.kernel_dimension)
    throw InvariantViolation("numerical zero eigenvalue count " + std::to_string(s.zero_count) +
                             " disagrees with exact kernel dimension " + std::to_string(s.kernel_dimension));
  return s;
}

std::size_t numeric_rank(const Eigen::MatrixXd& m, double rel_tol) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& sv = svd.singularValues();
  const double cut = rel_tol * std::max(1.0, sv.size() ? sv(0) : 0.0);
  std::size_t r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > cut) ++r;
  return r;
}

namespace {

std::vector<double> nonzero_eigenvalues(const Eigen::MatrixXd& m, double tol) {
  NumericSpectrum s = numeric_symmetric_spectrum(m);
  const double cut = zero_threshold(s.norm, tol);
  std::vector<double> out;
  for (double l : s.eigenvalues)
    if (std::abs(l) > cut) out.push_back(l);
  return out;
}

}  // namespace

SpectrumComparison compare_nonzero_spectra(const Eigen::MatrixXd& left, const Eigen::MatrixXd& right, double tol) {
  SpectrumComparison c;
  c.nonzero_left = nonzero_eigenvalues(left, tol);
  c.nonzero_right = nonzero_eigenvalues(right, tol);
  c.counts_match = c.nonzero_left.size() == c.nonzero_right.size();
  if (!c.counts_match) {
    c.max_discrepancy = std::numeric_limits<double>::infinity();
    return c;
  }
  for (std::size_t i = 0; i < c.nonzero_left.size(); ++i)
    c.max_discrepancy = std::max(c.max_discrepancy, std::abs(c.nonzero_left[i] - c.nonzero_right[i]));
  return c;
}

SpectrumComparison verify_lemma_spectrum(const RationalMatrix& a, double tol) {
  const Eigen::MatrixXd ad = a.to_eigen();
  return compare_nonzero_spectra(ad * ad.transpose(), ad.transpose() * ad, tol);
}

bool verify_lemma_kernel(const RationalMatrix& a) { return nullity(a) == nullity(a.transpose() * a); }

bool verify_lemma_conjugacy(const RationalMatrix& a, const RationalMatrix& x, const RationalMatrix& y) {
  if (!x.is_square() || x.rows() != a.rows()) throw ContractError("X must be square with as many rows as A");
  if (!y.is_square() || y.rows() != a.cols()) throw ContractError("Y must be square with as many rows as A has columns");
  if (rational_rank(x) != x.rows()) throw ContractError("X is not invertible");
  if (rational_rank(y) != y.rows()) throw ContractError("Y is not invertible");
  return nullity(a) == nullity(x * a * y);
}

}  // namespace gqm
