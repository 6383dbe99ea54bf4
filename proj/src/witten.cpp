// SPDX-License-Identifier: Apache-2.0

#include "witten.hpp"

#include <algorithm>
#include <cmath>

#include "errors.hpp"

namespace gqm {

DeformedBoundary deform_boundary(const Graph& g, const MorseFunction& f) {
  require_morse(g, f);
  ExpPolyMatrix d(g.vertex_count(), g.edge_count(), OperatorRole::boundary);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    d(ed.tail, e) = ExpPoly::term(Rational(-1), f.vertex_values[ed.tail] - f.edge_values[e]);
    d(ed.head, e) = ExpPoly::term(Rational(1), f.vertex_values[ed.head] - f.edge_values[e]);
  }
  return {d, d.transpose(OperatorRole::coboundary)};
}

DeformedLaplacians deformed_laplacians(const Graph& g, const MorseFunction& f) {
  DeformedBoundary d = deform_boundary(g, f);
  DeformedLaplacians l{multiply(d.boundary, d.coboundary, OperatorRole::even_laplacian),
                       multiply(d.coboundary, d.boundary, OperatorRole::odd_laplacian)};
  if (!l.even.is_symmetric() || !l.odd.is_symmetric()) throw InvariantViolation("deformed Laplacian is not symmetric");
  return l;
}

namespace {

RationalMatrix limit_of(const ExpPolyMatrix& m, bool even, std::vector<Divergence>& divergences) {
  RationalMatrix out(m.rows(), m.cols());
  const CellKind kind = even ? CellKind::vertex : CellKind::edge;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      ExpPoly::Limit l = m(r, c).limit();
      if (l.divergent)
        divergences.push_back({even, {kind, r}, {kind, c}, l.leading_exponent});
      else
        out(r, c) = l.value;
    }
  return out;
}

}  // namespace

LimitLaplacians limit_laplacians(const Graph& g, const MorseFunction& f) {
  DeformedLaplacians l = deformed_laplacians(g, f);
  LimitLaplacians out;
  out.even = limit_of(l.even, true, out.divergences);
  out.odd = limit_of(l.odd, false, out.divergences);
  return out;
}

std::size_t zero_column_count(const RationalMatrix& m) {
  std::size_t n = 0;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    bool zero = true;
    for (std::size_t r = 0; r < m.rows() && zero; ++r) zero = sgn(m(r, c)) == 0;
    n += zero ? 1 : 0;
  }
  return n;
}

LimitKernels limit_kernels(const Graph& g, const MorseFunction& f) {
  LimitLaplacians lim = limit_laplacians(g, f);
  if (!lim.converged())
    throw DivergenceError("deformed Laplacian has " + std::to_string(lim.divergences.size()) +
                          " entries growing without bound as s -> infinity; flatten the function first");
  LimitKernels k{rational_kernel(lim.even), rational_kernel(lim.odd), zero_column_count(lim.even),
                 zero_column_count(lim.odd)};
  const CriticalCells crit = critical_cells(g, f);
  if (k.dim_even() != crit.c0() || k.dim_odd() != crit.c1())
    throw InvariantViolation("limit kernel dimensions differ from the critical cell counts");
  if (k.even_zero_columns != crit.c0() || k.odd_zero_columns != crit.c1())
    throw InvariantViolation("zero-column counts of the limit Laplacians differ from the critical cell counts");
  const BettiNumbers b = betti_numbers(g);
  if (b.h0 > crit.c0() || b.h1 > crit.c1()) throw InvariantViolation("Morse inequalities fail");
  return k;
}

Integer deformation_step(const Graph& g, const MorseFunction& f) {
  DeformedLaplacians l = deformed_laplacians(g, f);
  Integer step = l.even.common_step();
  Integer other = l.odd.common_step();
  mpz_lcm(step.get_mpz_t(), step.get_mpz_t(), other.get_mpz_t());
  return step;
}

BettiNumbers deformed_kernel_dims(const Graph& g, const MorseFunction& f, const Rational& base) {
  if (sgn(base) <= 0) throw ContractError("substitution base must be positive");
  DeformedLaplacians l = deformed_laplacians(g, f);
  Integer step = l.even.common_step();
  Integer other = l.odd.common_step();
  mpz_lcm(step.get_mpz_t(), step.get_mpz_t(), other.get_mpz_t());
  return {nullity(l.even.substitute(base, step)), nullity(l.odd.substitute(base, step))};
}

BettiNumbers deformed_cutoff_cohomology(const Graph& g, const MorseFunction& f, double s, double a, double tol) {
  if (!std::isfinite(s)) throw ContractError("deformation parameter must be finite");
  DeformedBoundary d = deform_boundary(g, f);
  return cutoff_cohomology(cutoff_complex_from_coboundary(d.coboundary.evaluate(s), a, tol));
}

namespace {

GroupGap gap_of(const std::vector<double>& eig, std::size_t low) {
  GroupGap g;
  g.low_count = std::min(low, eig.size());
  if (g.low_count > 0) g.low_max = eig[g.low_count - 1];
  if (g.low_count < eig.size()) g.high_min = eig[g.low_count];
  g.separated = g.low_count == 0 || g.low_count == eig.size() || g.low_max < g.high_min;
  return g;
}

}  // namespace

SpectralFlow spectral_flow(const Graph& g, const MorseFunction& f, const std::vector<double>& s_grid, double tol) {
  if (!std::is_sorted(s_grid.begin(), s_grid.end())) throw ContractError("s grid must be ascending");
  DeformedBoundary d = deform_boundary(g, f);
  const CriticalCells crit = critical_cells(g, f);

  SpectralFlow flow;
  flow.c0 = crit.c0();
  flow.c1 = crit.c1();
  for (double s : s_grid) {
    const Eigen::MatrixXd cob = d.coboundary.evaluate(s);
    const Eigen::MatrixXd even = cob.transpose() * cob;
    const Eigen::MatrixXd odd = cob * cob.transpose();
    FlowRow row;
    row.s = s;
    row.even_eigenvalues = numeric_symmetric_spectrum(even).eigenvalues;
    row.odd_eigenvalues = numeric_symmetric_spectrum(odd).eigenvalues;
    row.spectra_discrepancy = compare_nonzero_spectra(even, odd, tol).max_discrepancy;
    flow.rows.push_back(std::move(row));
  }
  if (!flow.rows.empty()) {
    const FlowRow& first = flow.rows.front();
    const FlowRow& last = flow.rows.back();
    flow.final_even = gap_of(last.even_eigenvalues, flow.c0);
    flow.final_odd = gap_of(last.odd_eigenvalues, flow.c1);
    const GroupGap first_even = gap_of(first.even_eigenvalues, flow.c0);
    const GroupGap first_odd = gap_of(first.odd_eigenvalues, flow.c1);
    const double slack = 1e-12;
    flow.low_groups_shrink =
        flow.final_even.low_max <= first_even.low_max + slack && flow.final_odd.low_max <= first_odd.low_max + slack;
  }
  return flow;
}

}  // namespace gqm
