// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>

#include <vector>

#include "graph.hpp"
#include "linalg.hpp"

namespace gqm {

/// val - A. On multigraphs this differs from I I^T; see laplacian_forms_agree.
RationalMatrix even_laplacian(const Graph& g);
/// I I^T. Used for every kernel and walk computation.
RationalMatrix even_laplacian_from_incidence(const Graph& g);
bool laplacian_forms_agree(const Graph& g);
/// I^T I.
RationalMatrix odd_laplacian(const Graph& g);

struct BettiNumbers {
  std::size_t h0 = 0;
  std::size_t h1 = 0;
  friend bool operator==(const BettiNumbers&, const BettiNumbers&) = default;
};

/// Exact kernel dimensions of the two Laplacians. Throws InvariantViolation
/// if they disagree with the component count or the cycle rank.
BettiNumbers betti_numbers(const Graph& g);

/// exp(-t I I^T) applied to a vertex state. t must be >= 0.
std::vector<double> evolve(const std::vector<double>& state, double t, const Graph& g);
/// Z(t) = exp(-t I I^T).
Eigen::MatrixXd partition_function(const Graph& g, double t);

/// (-I I^T)^k and (I^T I)^k as exact integer matrices.
RationalMatrix generalized_walk_matrix(const Graph& g, unsigned k);
RationalMatrix odd_walk_matrix(const Graph& g, unsigned k);
Integer generalized_walk_count(const Graph& g, unsigned k, VertexId i, VertexId j);
Integer odd_walk_count(const Graph& g, unsigned k, EdgeId a, EdgeId b);

/// Signed sum over sequences (v_1,e_1),...,(v_k,e_k) from i to j where each
/// e_m touches v_m and v_{m+1} is an endpoint of e_m; a stationary step
/// contributes -1. Exponential in k.
Integer enumerate_generalized_walks(const Graph& g, unsigned k, VertexId i, VertexId j);
/// Signed sum over edge sequences a = e_0, ..., e_k = b where consecutive
/// edges meet at a shared vertex v, each meeting weighted I(v,e_j) I(v,e_{j+1}).
Integer enumerate_odd_walks(const Graph& g, unsigned k, EdgeId a, EdgeId b);

/// Spectral subcomplex spanned by Laplacian eigenvectors with eigenvalue <= a.
/// Built from a coboundary C : C^0 -> C^1, with Delta_+ = C^T C and
/// Delta_- = C C^T.
struct CutoffComplex {
  double threshold = 0;
  std::vector<double> even_eigenvalues;  // full spectra, ascending
  std::vector<double> odd_eigenvalues;
  Eigen::MatrixXd even_basis;              // |V| x p, orthonormal columns
  Eigen::MatrixXd odd_basis;               // |E| x q
  Eigen::MatrixXd restricted_coboundary;   // q x p
  double leakage = 0;                      // part of C * even_basis outside span(odd_basis)
};

CutoffComplex cutoff_complex_from_coboundary(const Eigen::MatrixXd& coboundary, double a, double tol = kDefaultTolerance);
CutoffComplex cutoff_complex(const Graph& g, double a, double tol = kDefaultTolerance);
BettiNumbers cutoff_cohomology(const CutoffComplex& c);

}  // namespace gqm
