// SPDX-License-Identifier: Apache-2.0

#include "spectral.hpp"

#include <algorithm>
#include <cmath>

#include "errors.hpp"

namespace gqm {

RationalMatrix even_laplacian(const Graph& g) {
  RationalMatrix lap = valence_matrix(g) - adjacency_matrix(g);
  if (!g.has_parallel_edges() && !(lap == even_laplacian_from_incidence(g)))
    throw InvariantViolation("val - A differs from I I^T on a simple graph");
  return lap;
}

RationalMatrix even_laplacian_from_incidence(const Graph& g) {
  RationalMatrix i = incidence_matrix(g);
  return i * i.transpose();
}

bool laplacian_forms_agree(const Graph& g) {
  return valence_matrix(g) - adjacency_matrix(g) == even_laplacian_from_incidence(g);
}

RationalMatrix odd_laplacian(const Graph& g) {
  RationalMatrix i = incidence_matrix(g);
  return i.transpose() * i;
}

BettiNumbers betti_numbers(const Graph& g) {
  BettiNumbers b{nullity(even_laplacian_from_incidence(g)), nullity(odd_laplacian(g))};
  const std::size_t components = connected_components(g).size();
  if (b.h0 != components)
    throw InvariantViolation("dim ker Delta_+ = " + std::to_string(b.h0) + " but the graph has " +
                             std::to_string(components) + " components");
  if (b.h1 != cycle_rank(g))
    throw InvariantViolation("dim ker Delta_- = " + std::to_string(b.h1) + " but the cycle rank is " +
                             std::to_string(cycle_rank(g)));
  return b;
}

Eigen::MatrixXd partition_function(const Graph& g, double t) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return Eigen::MatrixXd(0, 0);
  NumericSpectrum s = numeric_symmetric_spectrum(even_laplacian_from_incidence(g).to_eigen());
  Eigen::VectorXd decay(n);
  for (std::size_t i = 0; i < n; ++i) decay(i) = std::exp(-s.eigenvalues[i] * t);
  return s.eigenvectors * decay.asDiagonal() * s.eigenvectors.transpose();
}

std::vector<double> evolve(const std::vector<double>& state, double t, const Graph& g) {
  if (t < 0) throw ContractError("evolution time must be non-negative");
  if (state.size() != g.vertex_count()) throw ContractError("even state length must equal the vertex count");
  if (state.empty()) return {};
  Eigen::VectorXd psi = Eigen::Map<const Eigen::VectorXd>(state.data(), state.size());
  Eigen::VectorXd out = partition_function(g, t) * psi;
  return {out.data(), out.data() + out.size()};
}

RationalMatrix generalized_walk_matrix(const Graph& g, unsigned k) {
  return power(-even_laplacian_from_incidence(g), k);
}

RationalMatrix odd_walk_matrix(const Graph& g, unsigned k) { return power(odd_laplacian(g), k); }

Integer generalized_walk_count(const Graph& g, unsigned k, VertexId i, VertexId j) {
  if (i >= g.vertex_count() || j >= g.vertex_count()) throw ContractError("vertex out of range");
  return generalized_walk_matrix(g, k)(i, j).get_num();
}

Integer odd_walk_count(const Graph& g, unsigned k, EdgeId a, EdgeId b) {
  if (a >= g.edge_count() || b >= g.edge_count()) throw ContractError("edge out of range");
  return odd_walk_matrix(g, k)(a, b).get_num();
}

namespace {

Integer walk_from(const Graph& g, unsigned steps_left, VertexId at, VertexId target) {
  if (steps_left == 0) return at == target ? Integer(1) : Integer(0);
  Integer total = 0;
  for (EdgeId e : g.incident(at)) {
    // stay put on e, or cross it
    total -= walk_from(g, steps_left - 1, at, target);
    total += walk_from(g, steps_left - 1, g.edge(e).other(at), target);
  }
  return total;
}

int orientation_sign(const Graph& g, VertexId v, EdgeId e) { return g.edge(e).head == v ? 1 : -1; }

Integer odd_walk_from(const Graph& g, unsigned steps_left, EdgeId at, EdgeId target) {
  if (steps_left == 0) return at == target ? Integer(1) : Integer(0);
  Integer total = 0;
  const Edge& cur = g.edge(at);
  for (VertexId v : {cur.tail, cur.head}) {
    for (EdgeId next : g.incident(v)) {
      Integer sub = odd_walk_from(g, steps_left - 1, next, target);
      if (orientation_sign(g, v, at) * orientation_sign(g, v, next) > 0)
        total += sub;
      else
        total -= sub;
    }
  }
  return total;
}

}  // namespace

Integer enumerate_generalized_walks(const Graph& g, unsigned k, VertexId i, VertexId j) {
  if (i >= g.vertex_count() || j >= g.vertex_count()) throw ContractError("vertex out of range");
  return walk_from(g, k, i, j);
}

Integer enumerate_odd_walks(const Graph& g, unsigned k, EdgeId a, EdgeId b) {
  if (a >= g.edge_count() || b >= g.edge_count()) throw ContractError("edge out of range");
  return odd_walk_from(g, k, a, b);
}

namespace {

Eigen::MatrixXd low_eigenspace(const NumericSpectrum& s, double cut, std::size_t dim) {
  std::vector<Eigen::Index> keep;
  for (std::size_t i = 0; i < s.eigenvalues.size(); ++i)
    if (s.eigenvalues[i] <= cut) keep.push_back(static_cast<Eigen::Index>(i));
  Eigen::MatrixXd basis(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(keep.size()));
  for (std::size_t c = 0; c < keep.size(); ++c) basis.col(static_cast<Eigen::Index>(c)) = s.eigenvectors.col(keep[c]);
  return basis;
}

}  // namespace

CutoffComplex cutoff_complex_from_coboundary(const Eigen::MatrixXd& coboundary, double a, double tol) {
  if (a < 0) throw ContractError("cutoff energy must be non-negative");
  const Eigen::Index nv = coboundary.cols();
  const Eigen::Index ne = coboundary.rows();
  const Eigen::MatrixXd even = coboundary.transpose() * coboundary;
  const Eigen::MatrixXd odd = coboundary * coboundary.transpose();
  NumericSpectrum se = numeric_symmetric_spectrum(even);
  NumericSpectrum so = numeric_symmetric_spectrum(odd);

  CutoffComplex c;
  c.threshold = a;
  c.even_eigenvalues = se.eigenvalues;
  c.odd_eigenvalues = so.eigenvalues;
  c.even_basis = low_eigenspace(se, a + zero_threshold(se.norm, tol), static_cast<std::size_t>(nv));
  c.odd_basis = low_eigenspace(so, a + zero_threshold(so.norm, tol), static_cast<std::size_t>(ne));
  const Eigen::MatrixXd image = coboundary * c.even_basis;
  c.restricted_coboundary = c.odd_basis.transpose() * image;
  if (image.size() > 0) c.leakage = (image - c.odd_basis * c.restricted_coboundary).cwiseAbs().maxCoeff();
  return c;
}

CutoffComplex cutoff_complex(const Graph& g, double a, double tol) {
  return cutoff_complex_from_coboundary(incidence_matrix(g).transpose().to_eigen(), a, tol);
}

BettiNumbers cutoff_cohomology(const CutoffComplex& c) {
  const std::size_t p = static_cast<std::size_t>(c.even_basis.cols());
  const std::size_t q = static_cast<std::size_t>(c.odd_basis.cols());
  const std::size_t r = numeric_rank(c.restricted_coboundary);
  return {p - r, q - r};
}

}  // namespace gqm
