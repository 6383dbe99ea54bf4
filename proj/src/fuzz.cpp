// SPDX-License-Identifier: Apache-2.0

#include "fuzz.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <set>

#include "errors.hpp"
#include "morse.hpp"
#include "spectral.hpp"
#include "witten.hpp"

namespace gqm {

Graph random_graph(std::mt19937_64& rng, std::size_t max_vertices, std::size_t max_edges, bool allow_parallel) {
  if (max_vertices == 0) throw ContractError("max_vertices must be positive");
  const std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_vertices)(rng);
  const std::size_t simple_cap = n * (n - 1) / 2;
  const std::size_t cap = allow_parallel ? (n > 1 ? max_edges : 0) : std::min(max_edges, simple_cap);
  const std::size_t m = std::uniform_int_distribution<std::size_t>(0, cap)(rng);
  std::vector<Edge> edges;
  std::set<std::pair<VertexId, VertexId>> used;
  std::uniform_int_distribution<VertexId> pick(0, n - 1);
  while (edges.size() < m) {
    VertexId a = pick(rng), b = pick(rng);
    if (a == b) continue;
    auto key = std::minmax(a, b);
    if (!allow_parallel && !used.insert(key).second) continue;
    edges.push_back({a, b});
  }
  return Graph(n, std::move(edges));
}

namespace {

class Checker {
 public:
  explicit Checker(InstanceResult& out) : out_(out) {}

  void check(const std::string& name, const std::function<std::string()>& body) {
    ++out_.checks;
    try {
      std::string problem = body();
      if (!problem.empty()) out_.failures.push_back({name, problem});
    } catch (const std::exception& e) {
      out_.failures.push_back({name, std::string("exception: ") + e.what()});
    }
  }

 private:
  InstanceResult& out_;
};

std::string bool_check(bool ok, const std::string& what) { return ok ? std::string() : what; }

}  // namespace

InstanceResult check_instance(const Graph& g, std::uint64_t morse_seed, bool inject_fault) {
  InstanceResult result;
  Checker c(result);
  const std::size_t n = g.vertex_count();
  const std::size_t m = g.edge_count();
  const RationalMatrix inc = incidence_matrix(g);
  RationalMatrix even = even_laplacian_from_incidence(g);
  if (inject_fault && n > 0) even(0, 0) += 1;
  const RationalMatrix odd = odd_laplacian(g);
  const std::size_t components = connected_components(g).size();

  c.check("incidence_columns", [&]() -> std::string {
    for (EdgeId e = 0; e < m; ++e) {
      int plus = 0, minus = 0;
      for (VertexId v = 0; v < n; ++v) {
        if (inc(v, e) == 1) ++plus;
        else if (inc(v, e) == -1) ++minus;
        else if (sgn(inc(v, e)) != 0) return "entry outside {-1,0,1}";
      }
      if (plus != 1 || minus != 1) return "column " + std::to_string(e) + " is not one +1 and one -1";
    }
    return std::string();
  });
  c.check("adjacency_symmetric", [&] {
    RationalMatrix a = adjacency_matrix(g);
    bool diag_zero = true;
    for (VertexId v = 0; v < n; ++v) diag_zero = diag_zero && sgn(a(v, v)) == 0;
    return bool_check(a.is_symmetric() && diag_zero, "adjacency not symmetric with zero diagonal");
  });
  c.check("laplacian_forms", [&] {
    return bool_check(g.has_parallel_edges() || laplacian_forms_agree(g), "val - A differs from I I^T on a simple graph");
  });
  c.check("constant_harmonic", [&] {
    for (const auto& s : even.row_sums())
      if (sgn(s) != 0) return std::string("Delta_+ applied to the constant vector is nonzero");
    return std::string();
  });
  c.check("hodge_even", [&] {
    return bool_check(nullity(even) == components, "dim ker Delta_+ = " + std::to_string(nullity(even)) + ", components = " +
                                                       std::to_string(components));
  });
  c.check("hodge_odd", [&] {
    return bool_check(nullity(odd) == cycle_rank(g), "dim ker Delta_- differs from the cycle rank");
  });
  c.check("lemma_kernel", [&] {
    return bool_check(verify_lemma_kernel(inc) && verify_lemma_kernel(inc.transpose()), "ker A != ker A^T A");
  });
  c.check("lemma_spectrum", [&] {
    SpectrumComparison s = verify_lemma_spectrum(inc);
    return bool_check(s.agree(1e-8), "nonzero spectra of Delta_+ and Delta_- differ by " + std::to_string(s.max_discrepancy));
  });
  c.check("spectrum_zero_count", [&] {
    symmetric_spectrum(odd);
    return bool_check(symmetric_spectrum(even).residual < 1e-8, "eigen-decomposition residual too large");
  });
  const BettiNumbers betti{nullity(even_laplacian_from_incidence(g)), nullity(odd)};
  c.check("energy_cutoff", [&] {
    std::vector<double> spectrum = numeric_symmetric_spectrum(even_laplacian_from_incidence(g).to_eigen()).eigenvalues;
    double smallest_positive = 0, largest = spectrum.empty() ? 0 : spectrum.back();
    for (double l : spectrum)
      if (l > 1e-8) {
        smallest_positive = l;
        break;
      }
    for (double a : {0.0, 0.5 * smallest_positive, 1.0, 2.5, largest + 1.0}) {
      BettiNumbers h = cutoff_cohomology(cutoff_complex(g, a));
      if (!(h == betti)) return "cutoff cohomology at a=" + std::to_string(a) + " differs from the Betti numbers";
    }
    return std::string();
  });
  c.check("semigroup", [&] {
    if (n == 0) return std::string();
    Eigen::MatrixXd lhs = partition_function(g, 0.3) * partition_function(g, 0.7);
    Eigen::MatrixXd rhs = partition_function(g, 1.0);
    if ((lhs - rhs).cwiseAbs().maxCoeff() > 1e-9) return std::string("Z(0.3) Z(0.7) != Z(1)");
    if ((rhs.rowwise().sum().array() - 1.0).abs().maxCoeff() > 1e-9) return std::string("rows of Z(1) do not sum to 1");
    return std::string();
  });
  if (n <= 6) {
    c.check("walk_oracle", [&] {
      for (unsigned k = 0; k <= 3; ++k) {
        RationalMatrix w = generalized_walk_matrix(g, k);
        for (VertexId i = 0; i < n; ++i)
          for (VertexId j = 0; j < n; ++j)
            if (Rational(enumerate_generalized_walks(g, k, i, j)) != w(i, j))
              return "generalized walk count mismatch at k=" + std::to_string(k);
      }
      return std::string();
    });
  }
  if (m <= 8) {
    c.check("odd_walk_oracle", [&] {
      for (unsigned k = 0; k <= 2; ++k) {
        RationalMatrix w = odd_walk_matrix(g, k);
        for (EdgeId a = 0; a < m; ++a)
          for (EdgeId b = 0; b < m; ++b)
            if (Rational(enumerate_odd_walks(g, k, a, b)) != w(a, b))
              return "odd walk count mismatch at k=" + std::to_string(k);
      }
      return std::string();
    });
  }

  MorseFunction f;
  CriticalCells crit;
  try {
    f = random_morse(g, morse_seed);
    crit = critical_cells(g, f);
  } catch (const std::exception& e) {
    ++result.checks;
    result.failures.push_back({"morse_valid", std::string("exception: ") + e.what()});
    return result;
  }
  c.check("morse_valid", [&] { return bool_check(validate_morse(g, f).valid, "random_morse produced an invalid function"); });
  c.check("exclusivity", [&] { return bool_check(exclusivity_holds(g, f), "both witness sets nonempty at some cell"); });
  c.check("morse_inequalities", [&] {
    return bool_check(betti.h0 <= crit.c0() && betti.h1 <= crit.c1(), "h0 > c0 or h1 > c1");
  });
  c.check("euler_identity", [&] {
    long lhs = static_cast<long>(crit.c0()) - static_cast<long>(crit.c1());
    long rhs = static_cast<long>(n) - static_cast<long>(m);
    return bool_check(lhs == rhs, "c0 - c1 != |V| - |E|");
  });
  c.check("flatten_preserves", [&] {
    MorseFunction flat = flatten(g, f);
    CriticalCells cf = critical_cells(g, flat);
    return bool_check(cf.vertices == crit.vertices && cf.edges == crit.edges &&
                          gradient_field(g, flat).pairs == gradient_field(g, f).pairs,
                      "flatten changed the critical cells or the gradient pairs");
  });
  c.check("limit_kernels", [&] {
    LimitKernels k = limit_kernels(g, f);
    return bool_check(k.dim_even() == crit.c0() && k.dim_odd() == crit.c1(), "limit kernel dims differ from (c0, c1)");
  });
  c.check("differential_routes", [&] {
    return bool_check(morse_complex(g, f).routes_agree, "curve-count differential differs from the flow boundary map");
  });
  c.check("morse_homology", [&] {
    return bool_check(morse_complex(g, f).homology == betti, "Morse homology differs from the Betti numbers");
  });
  c.check("deformed_invariance", [&] {
    for (long den : {2L, 3L, 5L})
      if (!(deformed_kernel_dims(g, f, make_rational(1, den)) == betti))
        return "deformed kernel dims differ from Betti numbers at base 1/" + std::to_string(den);
    return std::string();
  });
  c.check("deformed_cutoff", [&] {
    return bool_check(deformed_cutoff_cohomology(g, f, 1.0, 0.5) == betti, "deformed cutoff cohomology differs");
  });
  if (components == 1) {
    const MorseFunction h = height_function(g, spanning_tree(g, 0));
    c.check("height_function", [&] {
      if (!validate_morse(g, h).valid) return std::string("height function is not Morse");
      CriticalCells ch = critical_cells(g, h);
      if (ch.c0() != 1 || ch.c1() != cycle_rank(g)) return std::string("height function is not tight");
      return bool_check(tree_boundary_zero_check(g, h), "boundary map nonzero on a critical edge");
    });
  }
  return result;
}

namespace {

bool still_fails(const Graph& g, std::uint64_t seed, const std::string& check, bool inject) {
  for (const auto& f : check_instance(g, seed, inject).failures)
    if (f.check == check) return true;
  return false;
}

Graph without_vertex(const Graph& g, VertexId drop) {
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    auto shift = [&](VertexId v) { return v > drop ? v - 1 : v; };
    edges.push_back({shift(e.tail), shift(e.head)});
  }
  return Graph(g.vertex_count() - 1, std::move(edges));
}

}  // namespace

Graph minimize_failure(const Graph& g, std::uint64_t morse_seed, const std::string& check, bool inject_fault) {
  Graph cur(g.vertex_count(), g.edges());
  for (std::size_t e = cur.edge_count(); e-- > 0;) {
    std::vector<Edge> edges = cur.edges();
    edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(e));
    Graph candidate(cur.vertex_count(), std::move(edges));
    if (still_fails(candidate, morse_seed, check, inject_fault)) cur = std::move(candidate);
  }
  for (std::size_t v = cur.vertex_count(); v-- > 0 && cur.vertex_count() > 1;) {
    if (!cur.incident(v).empty()) continue;
    Graph candidate = without_vertex(cur, v);
    if (still_fails(candidate, morse_seed, check, inject_fault)) cur = std::move(candidate);
  }
  return cur;
}

FuzzSummary run_fuzz(const FuzzOptions& options) {
  std::mt19937_64 rng(options.seed);
  FuzzSummary summary;
  for (std::size_t i = 0; i < options.graphs; ++i) {
    const bool parallel = std::uniform_int_distribution<int>(0, 4)(rng) == 0;
    Graph g = random_graph(rng, options.max_vertices, options.max_edges, parallel);
    const std::uint64_t morse_seed = rng();
    InstanceResult r = check_instance(g, morse_seed, options.inject_fault);
    ++summary.instances;
    summary.checks += r.checks;
    for (const auto& failure : r.failures) {
      FuzzViolation v{i, morse_seed, failure.check, failure.detail, {}, {}};
      Graph small = minimize_failure(g, morse_seed, failure.check, options.inject_fault);
      std::filesystem::create_directories(options.artifact_dir);
      const std::string stem = options.artifact_dir + "/fuzz-" + std::to_string(i) + "-" + failure.check;
      v.graph_file = stem + ".graph";
      v.morse_file = stem + ".morse";
      std::ofstream(v.graph_file) << "# minimized reproducer for check " << failure.check << "\n" << format_graph(small);
      std::ofstream(v.morse_file) << format_morse(small, random_morse(small, morse_seed));
      summary.violations.push_back(std::move(v));
    }
  }
  return summary;
}

}  // namespace gqm
