// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <vector>

#include "rational_matrix.hpp"

namespace gqm {

inline constexpr double kDefaultTolerance = 1e-9;

struct KernelBasis {
  std::size_t dimension = 0;
  std::vector<std::vector<Rational>> basis;  // one vector per free column
};

/// Row-echelon form over the integers produced by fraction-free (Bareiss)
/// elimination. Pivots are chosen as the first nonzero entry in column order.
struct Echelon {
  std::vector<std::vector<Integer>> rows;  // only the `rank` pivot rows are kept
  std::vector<std::size_t> pivot_columns;
  std::size_t cols = 0;
  std::size_t rank() const { return pivot_columns.size(); }
};

Echelon fraction_free_echelon(const RationalMatrix& m);
std::size_t rational_rank(const RationalMatrix& m);
KernelBasis rational_kernel(const RationalMatrix& m);
inline std::size_t nullity(const RationalMatrix& m) { return m.cols() - rational_rank(m); }

/// Eigen-decomposition of a symmetric rational matrix. The number of
/// eigenvalues classified as zero is cross-checked against the exact kernel.
struct Spectrum {
  std::vector<double> eigenvalues;  // ascending
  Eigen::MatrixXd eigenvectors;     // column i pairs with eigenvalues[i]
  double zero_threshold = 0;        // |lambda| <= threshold counts as zero
  std::size_t zero_count = 0;
  std::size_t kernel_dimension = 0;
  double residual = 0;              // max |M - Q diag(lambda) Q^T|
};

Spectrum symmetric_spectrum(const RationalMatrix& m, double tol = kDefaultTolerance);

/// Same decomposition on a floating-point matrix; no exact cross-check.
struct NumericSpectrum {
  std::vector<double> eigenvalues;
  Eigen::MatrixXd eigenvectors;
  double norm = 0;  // infinity norm of the input
};
NumericSpectrum numeric_symmetric_spectrum(const Eigen::MatrixXd& m);

/// tol scaled by max(1, norm).
double zero_threshold(double norm, double tol);
double infinity_norm(const Eigen::MatrixXd& m);

/// Numerical rank from singular values above rel_tol * max(1, sigma_max).
std::size_t numeric_rank(const Eigen::MatrixXd& m, double rel_tol = 1e-8);

struct SpectrumComparison {
  std::vector<double> nonzero_left;   // of A A^T
  std::vector<double> nonzero_right;  // of A^T A
  bool counts_match = false;
  double max_discrepancy = 0;  // infinity when the counts differ
  bool agree(double tol) const { return counts_match && max_discrepancy <= tol; }
};

SpectrumComparison compare_nonzero_spectra(const Eigen::MatrixXd& left, const Eigen::MatrixXd& right,
                                           double tol = kDefaultTolerance);
/// Nonzero spectra of A A^T and A^T A.
SpectrumComparison verify_lemma_spectrum(const RationalMatrix& a, double tol = kDefaultTolerance);

/// dim ker A == dim ker A^T A, exactly.
bool verify_lemma_kernel(const RationalMatrix& a);

/// dim ker A == dim ker X A Y for invertible X, Y. Throws ContractError when
/// X or Y is not square and invertible or the shapes do not chain.
bool verify_lemma_conjugacy(const RationalMatrix& a, const RationalMatrix& x, const RationalMatrix& y);

}  // namespace gqm
