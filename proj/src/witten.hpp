// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "exppoly.hpp"
#include "morse.hpp"

namespace gqm {

/// d_s = exp(fs) I exp(-fs) (|V| x |E|) and d_s* = exp(-fs) I^T exp(fs)
/// (|E| x |V|). Entrywise both carry I(v,e) exp((f(v) - f(e)) s).
struct DeformedBoundary {
  ExpPolyMatrix boundary;
  ExpPolyMatrix coboundary;
};
DeformedBoundary deform_boundary(const Graph& g, const MorseFunction& f);

/// Delta_{+,s} = d_s d_s* on vertices, Delta_{-,s} = d_s* d_s on edges.
struct DeformedLaplacians {
  ExpPolyMatrix even;
  ExpPolyMatrix odd;
};
DeformedLaplacians deformed_laplacians(const Graph& g, const MorseFunction& f);

struct Divergence {
  bool even;  // which Laplacian
  Cell row;
  Cell col;
  Rational exponent;  // the positive leading exponent
};

struct LimitLaplacians {
  RationalMatrix even;
  RationalMatrix odd;
  std::vector<Divergence> divergences;  // divergent entries are left at 0 in the matrices
  bool converged() const { return divergences.empty(); }
};
LimitLaplacians limit_laplacians(const Graph& g, const MorseFunction& f);

std::size_t zero_column_count(const RationalMatrix& m);

struct LimitKernels {
  KernelBasis even;
  KernelBasis odd;
  std::size_t even_zero_columns = 0;
  std::size_t odd_zero_columns = 0;
  std::size_t dim_even() const { return even.dimension; }
  std::size_t dim_odd() const { return odd.dimension; }
};

/// Exact kernels of the limit Laplacians. Throws DivergenceError when the
/// limit does not exist, and InvariantViolation when the kernel dimensions or
/// zero-column counts differ from (c0, c1) or the Morse inequalities fail.
LimitKernels limit_kernels(const Graph& g, const MorseFunction& f);

/// Exact kernel dimensions of Delta_{+-,s} with exp(-s/step) := base, where
/// step is the common denominator of the Laplacian exponents (1 for
/// integer-valued f, in which case base is exactly exp(-s)).
BettiNumbers deformed_kernel_dims(const Graph& g, const MorseFunction& f, const Rational& base);
Integer deformation_step(const Graph& g, const MorseFunction& f);

/// Cutoff cohomology of the deformed complex evaluated numerically at s.
BettiNumbers deformed_cutoff_cohomology(const Graph& g, const MorseFunction& f, double s, double a,
                                        double tol = kDefaultTolerance);

struct FlowRow {
  double s = 0;
  std::vector<double> even_eigenvalues;
  std::vector<double> odd_eigenvalues;
  double spectra_discrepancy = 0;  // nonzero spectra of Delta_{+,s} vs Delta_{-,s}
};

struct GroupGap {
  std::size_t low_count = 0;
  double low_max = 0;   // 0 when the low group is empty
  double high_min = 0;  // 0 when the high group is empty
  bool separated = true;
};

struct SpectralFlow {
  std::vector<FlowRow> rows;
  std::size_t c0 = 0;
  std::size_t c1 = 0;
  GroupGap final_even;
  GroupGap final_odd;
  bool low_groups_shrink = true;  // low-group maxima at the last s <= at the first s
};

/// Eigenvalues of the deformed Laplacians over an ascending s grid.
SpectralFlow spectral_flow(const Graph& g, const MorseFunction& f, const std::vector<double>& s_grid,
                           double tol = kDefaultTolerance);

}  // namespace gqm
