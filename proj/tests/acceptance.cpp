// SPDX-License-Identifier: Apache-2.0

// Acceptance run: one PASS/FAIL line per criterion.
//
// Usage: acceptance [--known-failure N]...
// Exit status is 0 when the set of failing criteria equals the declared
// known failures, so an unexpected pass is reported as loudly as a regression.

#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "spectral.hpp"
#include "support.hpp"
#include "witten.hpp"

using namespace gqm;
using support::q;

namespace {

class Criterion {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    failed_ = failed_ || !ok;
  }
  bool failed() const { return failed_; }
  std::size_t checks() const { return checks_; }
  std::string summary() const {
    std::string s;
    for (const auto& f : failures_) s += (s.empty() ? "" : "; ") + f;
    return s;
  }

 private:
  bool failed_ = false;
  std::size_t checks_ = 0;
  std::vector<std::string> failures_;
};

Graph load(const std::string& name) { return parse_graph(support::slurp(support::data_file(name))); }
MorseFunction load_f(const Graph& g, const std::string& name) {
  return parse_morse(g, support::slurp(support::data_file(name)));
}
ExpPoly e(long coeff, long exponent) { return ExpPoly::term(q(coeff), q(exponent)); }

std::string show(const ExpPolyMatrix& m) {
  std::ostringstream ss;
  ss << "(";
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) ss << (r + c ? ", " : "") << m(r, c).to_string();
  ss << ")";
  return ss.str();
}

// A kernel basis spanning exactly the coordinate line of `index`.
bool spans_unit(const KernelBasis& k, std::size_t index) {
  if (k.dimension != 1) return false;
  for (std::size_t i = 0; i < k.basis[0].size(); ++i)
    if ((sgn(k.basis[0][i]) != 0) != (i == index)) return false;
  return true;
}

// Integer-valued copy with the same order on cells, so e^{-s} can be replaced
// by a rational number exactly.
MorseFunction integer_valued(const MorseFunction& f) {
  std::vector<Rational> all = f.vertex_values;
  all.insert(all.end(), f.edge_values.begin(), f.edge_values.end());
  Rational scale(common_denominator(all));
  MorseFunction out = f;
  for (auto& x : out.vertex_values) x *= scale;
  for (auto& x : out.edge_values) x *= scale;
  return out;
}

void k2_golden(Criterion& c) {
  Graph g = load("k2.graph");
  MorseFunction f = load_f(g, "k2.morse");
  c.expect(even_laplacian(g) == RationalMatrix{{1, -1}, {-1, 1}}, "Delta_+");
  c.expect(odd_laplacian(g) == RationalMatrix{{2}}, "Delta_-");
  DeformedBoundary d = deform_boundary(g, f);
  ExpPolyMatrix expected(2, 1, OperatorRole::boundary);
  expected(0, 0) = ExpPoly(q(1));
  expected(1, 0) = e(-1, -1);
  c.expect(d.boundary == expected, "d_s = " + show(d.boundary) + ", expected " + show(expected));
  DeformedLaplacians l = deformed_laplacians(g, f);
  c.expect(l.even(0, 0) == ExpPoly(q(1)) && l.even(0, 1) == e(-1, -1) && l.even(1, 0) == e(-1, -1) &&
               l.even(1, 1) == e(1, -2),
           "Delta_+,s");
  c.expect(l.odd(0, 0) == ExpPoly(q(1)) + e(1, -2), "Delta_-,s");
  LimitLaplacians lim = limit_laplacians(g, f);
  c.expect(lim.even == RationalMatrix::diagonal({q(1), q(0)}), "Delta_+,inf");
  c.expect(lim.odd == RationalMatrix{{1}}, "Delta_-,inf");
  LimitKernels k = limit_kernels(g, f);
  CriticalCells cc = critical_cells(g, f);
  c.expect(k.dim_even() == 1 && k.dim_odd() == 0, "kernel dims");
  c.expect(cc.c0() == 1 && cc.c1() == 0, "critical counts");
}

void k3_golden(Criterion& c) {
  Graph g = load("k3.graph");
  MorseFunction f = load_f(g, "k3_f.morse");
  CriticalCells cf = critical_cells(g, f);
  c.expect(cf.vertices == std::vector<VertexId>{1} && cf.edges == std::vector<EdgeId>{1}, "f critical cells v2, e2");
  LimitLaplacians lf = limit_laplacians(g, f);
  RationalMatrix diag = RationalMatrix::diagonal({q(1), q(0), q(1)});
  c.expect(lf.even == diag, "f Delta_+,inf");
  c.expect(lf.odd == diag, "f Delta_-,inf");
  LimitKernels kf = limit_kernels(g, f);
  c.expect(spans_unit(kf.even, 1), "f kernel <v2>");
  c.expect(spans_unit(kf.odd, 1), "f kernel <e2>");

  MorseFunction h = load_f(g, "k3_g.morse");
  CriticalCells ch = critical_cells(g, h);
  c.expect(ch.c0() == 3 && ch.c1() == 3, "g all critical");
  LimitLaplacians lh = limit_laplacians(g, h);
  c.expect(lh.even.is_zero() && lh.odd.is_zero(), "g limits zero");
  LimitKernels kh = limit_kernels(g, h);
  c.expect(kh.dim_even() == 3 && kh.dim_odd() == 3, "g kernels full");
}

void two_cycle_graph(Criterion& c) {
  Graph g = load("two_cycles.graph");
  c.expect(g.vertex_count() == 6 && g.edge_count() == 7, "shape");
  auto p = support::plain(g);
  c.expect(oracle::components(p) == 1 && oracle::cycle_rank(p) == 2, "oracle Betti");
  c.expect(betti_numbers(g) == BettiNumbers{1, 2}, "Betti (1,2)");
  for (VertexId root = 0; root < g.vertex_count(); ++root) {
    MorseFunction h = height_function(g, spanning_tree(g, root));
    const std::string at = " (root " + std::to_string(root) + ")";
    c.expect(oracle::is_morse(p, support::plain(h)), "height is Morse" + at);
    CriticalCells cc = critical_cells(g, h);
    c.expect(cc.c0() == 1 && cc.c1() == 2, "c0=1, c1=2" + at);
    c.expect(morse_complex(g, h).homology == BettiNumbers{1, 2}, "Morse homology" + at);
  }
}

void rooted_tree(Criterion& c) {
  Graph g = load("tree8.graph");
  MorseFunction h = height_function(g, spanning_tree(g, 0));
  // Root 0, three children at height 1, four grandchildren at height 2.
  c.expect(h.vertex_values == std::vector<Rational>{q(0), q(1), q(1), q(1), q(2), q(2), q(2), q(2)}, "vertex heights");
  c.expect(h.edge_values == std::vector<Rational>{q(1), q(1), q(1), q(2), q(2), q(2), q(2)}, "edge heights");
  CriticalCells cc = critical_cells(g, h);
  c.expect(cc.vertices == std::vector<VertexId>{0} && cc.edges.empty(), "root is the only critical cell");
  c.expect(morse_complex(g, h).homology == BettiNumbers{1, 0}, "homology (1,0)");
}

void hodge_suite(Criterion& c) {
  std::mt19937_64 rng(1001);
  std::uniform_real_distribution<double> level(0.0, 10.0);
  for (int i = 0; i < 200; ++i) {
    auto p = oracle::random_graph(rng, 10, 15, i % 5 == 0);
    Graph g = support::graph(p);
    const std::size_t comps = oracle::components(p), cycles = oracle::cycle_rank(p);
    const std::string at = " (graph " + std::to_string(i) + ")";
    c.expect(nullity(even_laplacian_from_incidence(g)) == comps, "dim ker Delta_+" + at);
    c.expect(nullity(odd_laplacian(g)) == cycles, "dim ker Delta_-" + at);
    for (int s = 0; s < 5; ++s) {
      double a = level(rng);
      BettiNumbers b = cutoff_cohomology(cutoff_complex(g, a));
      c.expect(b.h0 == comps && b.h1 == cycles, "cutoff cohomology at a=" + std::to_string(a) + at);
    }
  }
}

void walk_oracle(Criterion& c) {
  std::mt19937_64 rng(1002);
  for (int i = 0; i < 30; ++i) {
    auto p = oracle::random_graph(rng, 6, 8, i % 4 == 0);
    Graph g = support::graph(p);
    const std::string at = " (graph " + std::to_string(i) + ")";
    for (unsigned k = 0; k <= 5; ++k) {
      RationalMatrix w = generalized_walk_matrix(g, k);
      for (VertexId a = 0; a < g.vertex_count(); ++a)
        for (VertexId b = 0; b < g.vertex_count(); ++b)
          c.expect(w(a, b) == oracle::generalized_walks(p, k, a, b), "vertex walks k=" + std::to_string(k) + at);
    }
    for (unsigned k = 0; k <= 4; ++k) {
      RationalMatrix w = odd_walk_matrix(g, k);
      for (EdgeId a = 0; a < g.edge_count(); ++a)
        for (EdgeId b = 0; b < g.edge_count(); ++b)
          c.expect(w(a, b) == oracle::odd_walks(p, k, a, b), "edge walks k=" + std::to_string(k) + at);
    }
  }
}

void morse_suite(Criterion& c) {
  std::mt19937_64 rng(1003);
  for (int i = 0; i < 200; ++i) {
    auto p = oracle::random_graph(rng, 10, 15, i % 5 == 0);
    Graph g = support::graph(p);
    MorseFunction f = random_morse(g, 5000 + i);
    auto pf = support::plain(f);
    const std::string at = " (function " + std::to_string(i) + ")";
    c.expect(oracle::is_morse(p, pf) && validate_morse(g, f).valid, "valid" + at);
    c.expect(exclusivity_holds(g, f), "exclusivity" + at);
    auto [c0, c1] = oracle::critical_counts(p, pf);
    const std::size_t h0 = oracle::components(p), h1 = oracle::cycle_rank(p);
    c.expect(h0 <= c0 && h1 <= c1, "Morse inequalities" + at);
    c.expect(static_cast<long>(c0) - static_cast<long>(c1) ==
                 static_cast<long>(p.n) - static_cast<long>(p.edges.size()),
             "c0 - c1 = |V| - |E|" + at);
    LimitKernels k = limit_kernels(g, f);
    c.expect(k.dim_even() == c0 && k.dim_odd() == c1, "limit kernel dims" + at);
    MorseComplex mc = morse_complex(g, f);
    std::vector<std::size_t> cv, ce;
    c.expect(support::table(mc.differential) == oracle::boundary_map(p, pf, cv, ce), "differential" + at);
    c.expect(mc.homology.h0 == h0 && mc.homology.h1 == h1, "Morse homology" + at);
  }
}

void deformed_invariance(Criterion& c) {
  std::mt19937_64 rng(1004);
  for (int i = 0; i < 100; ++i) {
    auto p = oracle::random_graph(rng, 8, 12, i % 5 == 0);
    Graph g = support::graph(p);
    MorseFunction f = integer_valued(random_morse(g, 9000 + i));
    const std::string at = " (function " + std::to_string(i) + ")";
    c.expect(deformation_step(g, f) == 1, "integer exponents" + at);
    for (const Rational& r : {q(1, 2), q(1, 3), q(1, 5)}) {
      BettiNumbers b = deformed_kernel_dims(g, f, r);
      c.expect(b.h0 == oracle::components(p) && b.h1 == oracle::cycle_rank(p), "e^{-s}=" + to_string(r) + at);
    }
  }
}

void lemmas(Criterion& c) {
  std::mt19937_64 rng(1005);
  for (int i = 0; i < 100; ++i) {
    std::size_t rows = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
    std::size_t cols = std::uniform_int_distribution<std::size_t>(1, 8)(rng);
    auto t = oracle::random_rational_matrix(rng, rows, cols);
    RationalMatrix a = support::matrix(t, cols);
    const std::string at = " (matrix " + std::to_string(i) + ")";

    KernelBasis ka = rational_kernel(a), kata = rational_kernel(a.transpose() * a);
    auto ata = oracle::multiply(oracle::transpose(t, cols), t);
    bool same = ka.dimension == kata.dimension && ka.dimension == oracle::nullity(t, cols);
    for (const auto& x : ka.basis) same = same && oracle::is_zero_vector(ata, x);
    for (const auto& x : kata.basis) same = same && oracle::is_zero_vector(t, x);
    c.expect(same, "ker A = ker A^T A" + at);

    c.expect(verify_lemma_spectrum(a).agree(1e-8), "nonzero spectra" + at);

    auto x = oracle::random_invertible(rng, rows), y = oracle::random_invertible(rng, cols);
    RationalMatrix xm = support::matrix(x, rows), ym = support::matrix(y, cols);
    KernelBasis kc = rational_kernel(xm * a * ym);
    bool conj = kc.dimension == ka.dimension && verify_lemma_conjugacy(a, xm, ym);
    for (const auto& v : kc.basis) conj = conj && oracle::is_zero_vector(t, ym.apply(v));
    c.expect(conj, "ker A = Y ker XAY" + at);
  }
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> known;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--known-failure" && i + 1 < argc) {
      known.insert(std::atoi(argv[++i]));
    } else {
      std::cerr << "usage: acceptance [--known-failure N]...\n";
      return 2;
    }
  }

  const std::vector<std::pair<std::string, std::function<void(Criterion&)>>> criteria{
      {"K2 golden", k2_golden},
      {"K3 golden", k3_golden},
      {"two-cycle graph: Betti and BFS height functions", two_cycle_graph},
      {"rooted tree height function", rooted_tree},
      {"Hodge property suite", hodge_suite},
      {"walk oracle", walk_oracle},
      {"Morse property suite", morse_suite},
      {"deformed invariance", deformed_invariance},
      {"lemmas", lemmas},
  };

  std::set<int> failed;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Criterion c;
    try {
      criteria[i].second(c);
    } catch (const std::exception& ex) {
      c.expect(false, std::string("exception: ") + ex.what());
    }
    const int id = static_cast<int>(i + 1);
    if (c.failed()) failed.insert(id);
    std::cout << (c.failed() ? "FAIL" : "PASS") << "  " << id << "  " << criteria[i].first << "  [" << c.checks()
              << " checks]";
    if (c.failed()) std::cout << "  " << c.summary() << (known.count(id) ? "  (known)" : "");
    std::cout << "\n";
  }
  return failed == known ? 0 : 1;
}
