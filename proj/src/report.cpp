// SPDX-License-Identifier: Apache-2.0

#include "report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "errors.hpp"

namespace gqm {

using nlohmann::json;

double round_float(double x) {
  if (!std::isfinite(x)) return x;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  double r = std::strtod(buf, nullptr);
  return r == 0 ? 0.0 : r;
}

namespace {

json float_json(double x) { return std::isfinite(x) ? json(round_float(x)) : json(nullptr); }

json floats_json(const std::vector<double>& xs) {
  json a = json::array();
  for (double x : xs) a.push_back(float_json(x));
  return a;
}

// Eigenvalues inside the zero threshold print as 0; their count is exact.
json spectrum_json(const Spectrum& sp) {
  json a = json::array();
  for (double x : sp.eigenvalues) a.push_back(std::abs(x) <= sp.zero_threshold ? json(0.0) : float_json(x));
  return a;
}

json rationals_json(const std::vector<Rational>& v) {
  json a = json::array();
  for (const auto& q : v) a.push_back(to_string(q));
  return a;
}

json graph_json(const Graph& g) {
  json edges = json::array();
  for (const auto& e : g.edges()) edges.push_back({g.label(e.tail), g.label(e.head)});
  return {{"vertices", g.vertex_count()},
          {"edges", g.edge_count()},
          {"labels", g.labels()},
          {"edge_list", edges},
          {"simple", !g.has_parallel_edges()}};
}

json cell_json(const Graph& g, const Cell& c) {
  if (c.kind == CellKind::vertex) return {{"kind", "vertex"}, {"id", g.label(c.index)}};
  return {{"kind", "edge"}, {"id", c.index}};
}

json vertex_labels(const Graph& g, const std::vector<VertexId>& vs) {
  json a = json::array();
  for (VertexId v : vs) a.push_back(g.label(v));
  return a;
}

json betti_json(const BettiNumbers& b) { return {{"h0", b.h0}, {"h1", b.h1}}; }

json critical_json(const Graph& g, const CriticalCells& c) {
  return {{"vertices", vertex_labels(g, c.vertices)}, {"edges", c.edges}, {"c0", c.c0()}, {"c1", c.c1()}};
}

json morse_function_json(const Graph& g, const MorseFunction& f) {
  return {{"vertex_values", rationals_json(f.vertex_values)},
          {"edge_values", rationals_json(f.edge_values)},
          {"text", format_morse(g, f)}};
}

json complex_json(const MorseComplex& mc) {
  return {{"differential", rational_matrix_json(mc.differential)},
          {"boundary_map", rational_matrix_json(mc.boundary_map)},
          {"routes_agree", mc.routes_agree},
          {"homology", betti_json(mc.homology)}};
}

json inequalities_json(const BettiNumbers& b, const CriticalCells& c, std::size_t v, std::size_t e) {
  return {{"h0_le_c0", b.h0 <= c.c0()},
          {"h1_le_c1", b.h1 <= c.c1()},
          {"tight", b.h0 == c.c0() && b.h1 == c.c1()},
          {"euler_identity", static_cast<long>(c.c0()) - static_cast<long>(c.c1()) ==
                                 static_cast<long>(v) - static_cast<long>(e)}};
}

json kernel_json(const KernelBasis& k) {
  json basis = json::array();
  for (const auto& v : k.basis) basis.push_back(rationals_json(v));
  return {{"dimension", k.dimension}, {"basis", basis}};
}

json text_matrix_json(const ExpPolyMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

void add_violation(Report& rep, const std::string& what) {
  rep.body["violations"].push_back(what);
  rep.status = ReportStatus::invariant_violation;
}

}  // namespace

json rational_matrix_json(const RationalMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json exppoly_json(const ExpPoly& p) {
  json terms = json::array();
  for (const auto& [q, c] : p.terms()) terms.push_back({{"exponent", to_string(q)}, {"coeff", to_string(c)}});
  return terms;
}

json exppoly_matrix_json(const ExpPolyMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(exppoly_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return {{"role", to_string(m.role())}, {"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows},
          {"display", text_matrix_json(m)}};
}

Report hodge_report(const Graph& g) {
  Report rep;
  json& b = rep.body;
  b["schema"] = kReportSchema;
  b["command"] = "hodge";
  b["graph"] = graph_json(g);
  b["violations"] = json::array();
  const RationalMatrix inc = incidence_matrix(g);
  const RationalMatrix even_incidence = even_laplacian_from_incidence(g);
  const RationalMatrix odd = odd_laplacian(g);
  b["matrices"] = {{"adjacency", rational_matrix_json(adjacency_matrix(g))},
                   {"valence", rational_matrix_json(valence_matrix(g))},
                   {"incidence", rational_matrix_json(inc)},
                   {"even_laplacian", rational_matrix_json(valence_matrix(g) - adjacency_matrix(g))},
                   {"even_laplacian_incidence", rational_matrix_json(even_incidence)},
                   {"odd_laplacian", rational_matrix_json(odd)}};
  b["laplacian_forms_agree"] = laplacian_forms_agree(g);
  json comps = json::array();
  for (const auto& comp : connected_components(g)) comps.push_back(vertex_labels(g, comp));
  b["components"] = comps;
  b["cycle_rank"] = cycle_rank(g);
  try {
    b["betti"] = betti_json(betti_numbers(g));
  } catch (const InvariantViolation& e) {
    b["betti"] = betti_json({nullity(even_incidence), nullity(odd)});
    add_violation(rep, e.what());
  }
  try {
    Spectrum se = symmetric_spectrum(even_incidence);
    Spectrum so = symmetric_spectrum(odd);
    SpectrumComparison cmp = verify_lemma_spectrum(inc);
    b["spectra"] = {{"even", spectrum_json(se)},
                    {"odd", spectrum_json(so)},
                    {"nonzero_spectra_agree", cmp.agree(1e-8)},
                    {"max_nonzero_discrepancy", float_json(cmp.max_discrepancy)}};
    if (!cmp.agree(1e-8)) add_violation(rep, "nonzero spectra of Delta_+ and Delta_- differ");
  } catch (const InvariantViolation& e) {
    add_violation(rep, e.what());
  }
  return rep;
}

Report morse_report(const Graph& g, const MorseFunction& f, const MorseReportOptions& options) {
  Report rep;
  json& b = rep.body;
  b["schema"] = kReportSchema;
  b["command"] = "morse";
  b["graph"] = graph_json(g);
  b["violations"] = json::array();
  b["morse_function"] = morse_function_json(g, f);

  MorseValidation val = validate_morse(g, f);
  json violations = json::array();
  for (const auto& v : val.violations) {
    json off = json::array();
    for (const auto& c : v.offending) off.push_back(cell_json(g, c));
    violations.push_back({{"cell", cell_json(g, v.cell)}, {"condition", v.upper_condition ? "MC1" : "MC2"}, {"offending", off}});
  }
  b["validation"] = {{"valid", val.valid}, {"violations", violations}};
  if (!val.valid) {
    rep.status = ReportStatus::invalid_morse;
    return rep;
  }

  const BettiNumbers betti = betti_numbers(g);
  const CriticalCells crit = critical_cells(g, f);
  const GradientField field = gradient_field(g, f);
  b["exclusivity"] = exclusivity_holds(g, f);
  if (!b["exclusivity"].get<bool>()) add_violation(rep, "exclusivity lemma fails");
  b["critical"] = critical_json(g, crit);
  json pairs = json::array();
  for (const auto& p : field.pairs) pairs.push_back({{"vertex", g.label(p.vertex)}, {"edge", p.edge}});
  b["gradient_field"] = pairs;
  json flows = json::array();
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    flows.push_back({{"vertex", g.label(v)}, {"critical", g.label(flow_to_critical(g, field, v))}});
  b["flow"] = flows;
  const MorseComplex mc = morse_complex(g, f);
  b["morse_complex"] = complex_json(mc);
  b["betti"] = betti_json(betti);
  b["inequalities"] = inequalities_json(betti, crit, g.vertex_count(), g.edge_count());
  if (!mc.routes_agree) add_violation(rep, "curve-count differential differs from the flow boundary map");
  if (!(mc.homology == betti)) add_violation(rep, "Morse homology differs from the Betti numbers");
  if (betti.h0 > crit.c0() || betti.h1 > crit.c1()) add_violation(rep, "Morse inequalities fail");

  const bool wants_deformation = options.witten || !options.s_grid.empty() || options.cutoff.has_value();
  MorseFunction used = f;
  if (wants_deformation && options.flatten) {
    used = flatten(g, f);
    b["flattened_function"] = morse_function_json(g, used);
  }

  if (options.witten) {
    json w;
    w["function"] = options.flatten ? "flattened" : "original";
    DeformedBoundary d = deform_boundary(g, used);
    DeformedLaplacians l = deformed_laplacians(g, used);
    w["deformed_boundary"] = exppoly_matrix_json(d.boundary);
    w["deformed_coboundary"] = exppoly_matrix_json(d.coboundary);
    w["even_laplacian_s"] = exppoly_matrix_json(l.even);
    w["odd_laplacian_s"] = exppoly_matrix_json(l.odd);
    w["at_zero_matches_undeformed"] =
        l.even.at_zero() == even_laplacian_from_incidence(g) && l.odd.at_zero() == odd_laplacian(g);
    LimitLaplacians lim = limit_laplacians(g, used);
    json divs = json::array();
    for (const auto& dv : lim.divergences)
      divs.push_back({{"laplacian", dv.even ? "even" : "odd"},
                      {"row", cell_json(g, dv.row)},
                      {"col", cell_json(g, dv.col)},
                      {"exponent", to_string(dv.exponent)}});
    w["limit"] = {{"converged", lim.converged()},
                  {"even", rational_matrix_json(lim.even)},
                  {"odd", rational_matrix_json(lim.odd)},
                  {"divergences", divs}};
    if (lim.converged()) {
      try {
        LimitKernels k = limit_kernels(g, used);
        w["kernels"] = {{"even", kernel_json(k.even)},
                        {"odd", kernel_json(k.odd)},
                        {"even_zero_columns", k.even_zero_columns},
                        {"odd_zero_columns", k.odd_zero_columns},
                        {"matches_critical_counts", true}};
      } catch (const InvariantViolation& e) {
        add_violation(rep, e.what());
      }
    }
    b["witten"] = w;
  }

  if (!options.s_grid.empty()) {
    SpectralFlow flow = spectral_flow(g, used, options.s_grid);
    json rows = json::array();
    for (const auto& r : flow.rows)
      rows.push_back({{"s", float_json(r.s)},
                      {"even", floats_json(r.even_eigenvalues)},
                      {"odd", floats_json(r.odd_eigenvalues)},
                      {"nonzero_spectra_discrepancy", float_json(r.spectra_discrepancy)}});
    auto gap = [](const GroupGap& gg) {
      return json{{"low_count", gg.low_count}, {"low_max", float_json(gg.low_max)},
                  {"high_min", float_json(gg.high_min)}, {"separated", gg.separated}};
    };
    b["spectral_flow"] = {{"rows", rows},
                          {"c0", flow.c0},
                          {"c1", flow.c1},
                          {"final_even_gap", gap(flow.final_even)},
                          {"final_odd_gap", gap(flow.final_odd)},
                          {"low_groups_shrink", flow.low_groups_shrink}};
  }

  if (options.cutoff) {
    const double a = *options.cutoff;
    json deformed = json::array();
    std::vector<double> grid = options.s_grid.empty() ? std::vector<double>{0.0} : options.s_grid;
    for (double s : grid) {
      BettiNumbers h = deformed_cutoff_cohomology(g, used, s, a);
      deformed.push_back({{"s", float_json(s)}, {"h0", h.h0}, {"h1", h.h1}});
      if (!(h == betti)) add_violation(rep, "deformed cutoff cohomology differs from the Betti numbers");
    }
    BettiNumbers h = cutoff_cohomology(cutoff_complex(g, a));
    if (!(h == betti)) add_violation(rep, "cutoff cohomology differs from the Betti numbers");
    b["cutoff"] = {{"a", float_json(a)}, {"undeformed", betti_json(h)}, {"deformed", deformed}};
  }
  return rep;
}

Report tree_report(const Graph& g, VertexId root) {
  Report rep;
  json& b = rep.body;
  b["schema"] = kReportSchema;
  b["command"] = "tree";
  b["graph"] = graph_json(g);
  b["violations"] = json::array();
  const SpanningTree t = spanning_tree(g, root);
  json parents = json::array();
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    parents.push_back(t.parent[v] ? json(g.label(*t.parent[v])) : json(nullptr));
  b["root"] = g.label(root);
  b["tree"] = {{"edges", t.edges}, {"depth", t.depth}, {"parent", parents}};
  const MorseFunction h = height_function(g, t);
  b["height_function"] = morse_function_json(g, h);
  MorseValidation val = validate_morse(g, h);
  b["valid"] = val.valid;
  if (!val.valid) {
    add_violation(rep, "height function is not a discrete Morse function");
    return rep;
  }
  const CriticalCells crit = critical_cells(g, h);
  const BettiNumbers betti = betti_numbers(g);
  const MorseComplex mc = morse_complex(g, h);
  b["critical"] = critical_json(g, crit);
  b["boundary_zero"] = tree_boundary_zero_check(g, h);
  b["morse_complex"] = complex_json(mc);
  b["betti"] = betti_json(betti);
  b["inequalities"] = inequalities_json(betti, crit, g.vertex_count(), g.edge_count());
  if (!b["boundary_zero"].get<bool>()) add_violation(rep, "boundary map is nonzero on a critical edge");
  if (crit.c0() != 1 || crit.c1() != cycle_rank(g)) add_violation(rep, "height function is not tight");
  if (!(mc.homology == betti)) add_violation(rep, "Morse homology differs from the Betti numbers");
  if (!mc.routes_agree) add_violation(rep, "curve-count differential differs from the flow boundary map");
  return rep;
}

Report walks_report(const Graph& g, unsigned k, bool odd, bool oracle) {
  Report rep;
  json& b = rep.body;
  b["schema"] = kReportSchema;
  b["command"] = "walks";
  b["graph"] = graph_json(g);
  b["violations"] = json::array();
  b["k"] = k;
  b["kind"] = odd ? "odd" : "even";
  const RationalMatrix w = odd ? odd_walk_matrix(g, k) : generalized_walk_matrix(g, k);
  b["counts"] = rational_matrix_json(w);
  if (oracle) {
    RationalMatrix brute(w.rows(), w.cols());
    for (std::size_t i = 0; i < w.rows(); ++i)
      for (std::size_t j = 0; j < w.cols(); ++j)
        brute(i, j) = Rational(odd ? enumerate_odd_walks(g, k, i, j) : enumerate_generalized_walks(g, k, i, j));
    const bool match = brute == w;
    b["oracle"] = {{"counts", rational_matrix_json(brute)}, {"verdict", match ? "MATCH" : "MISMATCH"}};
    if (!match) add_violation(rep, "walk counts differ from brute-force enumeration");
  }
  return rep;
}

Report fuzz_report(const FuzzOptions& options) {
  Report rep;
  json& b = rep.body;
  b["schema"] = kReportSchema;
  b["command"] = "fuzz";
  b["violations"] = json::array();
  b["options"] = {{"graphs", options.graphs},
                  {"seed", options.seed},
                  {"max_vertices", options.max_vertices},
                  {"max_edges", options.max_edges},
                  {"inject_fault", options.inject_fault}};
  const FuzzSummary s = run_fuzz(options);
  json failures = json::array();
  for (const auto& v : s.violations) {
    failures.push_back({{"instance", v.instance},
                        {"morse_seed", v.morse_seed},
                        {"check", v.check},
                        {"detail", v.detail},
                        {"graph_file", v.graph_file},
                        {"morse_file", v.morse_file}});
    add_violation(rep, "instance " + std::to_string(v.instance) + ": " + v.check);
  }
  b["instances"] = s.instances;
  b["checks"] = s.checks;
  b["failures"] = failures;
  b["passed"] = s.passed();
  return rep;
}

}  // namespace gqm
