// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "errors.hpp"
#include "spectral.hpp"
#include "support.hpp"

using namespace gqm;
using support::q;

namespace {

Graph load(const std::string& name) { return parse_graph(support::slurp(support::data_file(name))); }
MorseFunction load_f(const Graph& g, const std::string& name) {
  return parse_morse(g, support::slurp(support::data_file(name)));
}

}  // namespace

TEST_CASE("K2 function") {
  Graph g = load("k2.graph");
  MorseFunction f = load_f(g, "k2.morse");
  CHECK(validate_morse(g, f).valid);
  CriticalCells c = critical_cells(g, f);
  CHECK(c.vertices == std::vector<VertexId>{1});
  CHECK(c.edges.empty());
  GradientField field = gradient_field(g, f);
  REQUIRE(field.pairs.size() == 1);
  CHECK(field.pairs[0] == GradientPair{0, 0});
  CHECK(flow_to_critical(g, f, 0) == 1);
}

TEST_CASE("invalid K2 function reports MC2 at the edge") {
  Graph g = load("k2.graph");
  MorseFunction f = load_f(g, "k2_invalid.morse");
  MorseValidation v = validate_morse(g, f);
  CHECK_FALSE(v.valid);
  REQUIRE(v.violations.size() == 1);
  CHECK(v.violations[0].cell == Cell{CellKind::edge, 0});
  CHECK_FALSE(v.violations[0].upper_condition);
  CHECK(v.violations[0].offending.size() == 2);
  CHECK_THROWS_AS(require_morse(g, f), InvalidMorseError);
}

TEST_CASE("MC1 violation") {
  Graph g(3, {{0, 1}, {0, 2}});
  MorseFunction f{{q(5), q(0), q(0)}, {q(1), q(2)}};
  MorseValidation v = validate_morse(g, f);
  CHECK_FALSE(v.valid);
  REQUIRE(v.violations.size() == 1);
  CHECK(v.violations[0].cell == Cell{CellKind::vertex, 0});
  CHECK(v.violations[0].upper_condition);
  CHECK_FALSE(oracle::is_morse(support::plain(g), support::plain(f)));
}

TEST_CASE("K3 function f") {
  Graph g = load("k3.graph");
  MorseFunction f = load_f(g, "k3_f.morse");
  CHECK(validate_morse(g, f).valid);
  CHECK(exclusivity_holds(g, f));
  CriticalCells c = critical_cells(g, f);
  CHECK(c.vertices == std::vector<VertexId>{1});
  CHECK(c.edges == std::vector<EdgeId>{1});
  MorseComplex mc = morse_complex(g, f);
  CHECK(mc.routes_agree);
  CHECK(mc.differential == RationalMatrix{{0}});
  CHECK(mc.homology == BettiNumbers{1, 1});
}

TEST_CASE("K3 function g is entirely critical") {
  Graph g = load("k3.graph");
  MorseFunction f = load_f(g, "k3_g.morse");
  CriticalCells c = critical_cells(g, f);
  CHECK(c.c0() == 3);
  CHECK(c.c1() == 3);
  MorseComplex mc = morse_complex(g, f);
  CHECK(mc.differential == incidence_matrix(g));
  CHECK(mc.homology == BettiNumbers{1, 1});
}

TEST_CASE("Morse file parsing") {
  Graph g = load("k2.graph");
  auto line_of = [&](const std::string& text) {
    try {
      parse_morse(g, text);
    } catch (const ParseError& e) {
      return static_cast<long>(e.line());
    }
    return -1L;
  };
  CHECK(line_of("V 0 1\nV 1 0\nE 0 1/2\n") == -1);
  CHECK(line_of("V 0 1\nV 7 0\nE 0 1\n") == 2);
  CHECK(line_of("V 0 1\nV 0 0\nE 0 1\n") == 2);
  CHECK(line_of("V 0 1\nV 1 0\nE 3 1\n") == 3);
  CHECK(line_of("V 0 1\nV 1 0\nE 0 1/0\n") == 3);
  CHECK(line_of("V 0 1\nX 1 0\n") == 2);
  CHECK(line_of("V 0 1\nE 0 1\n") == 0);
  MorseFunction f{{q(3, 2), q(-1)}, {q(7, 3)}};
  CHECK(parse_morse(g, format_morse(g, f)) == f);
}

TEST_CASE("gradient curves on a path") {
  // 0 - 1 - 2 with flow 2 -> 1 -> 0.
  Graph g(3, {{0, 1}, {1, 2}});
  MorseFunction f{{q(0), q(2), q(4)}, {q(1), q(3)}};
  REQUIRE(validate_morse(g, f).valid);
  auto curves = gradient_curves(g, f, 2, 0);
  REQUIRE(curves.size() == 1);
  CHECK(curves[0].vertices == std::vector<VertexId>{2, 1, 0});
  CHECK(curves[0].edges == std::vector<EdgeId>{1, 0});
  CHECK(is_gradient_curve(g, f, curves[0]));
  CHECK(curve_multiplicity(g, curves[0]) == 1);
  CHECK(gradient_curves(g, f, 0, 2).empty());
  CHECK_FALSE(is_gradient_curve(g, f, GradientCurve{{0, 1}, {0}}));
}

TEST_CASE("cyclic fields are rejected") {
  Graph g = load("k3.graph");
  // v0 -> e2 -> v1 -> e0 -> v2 -> e1 -> v0
  GradientField field = make_gradient_field(g, {{0, 2}, {1, 0}, {2, 1}});
  CHECK_FALSE(is_acyclic(g, field));
  CHECK_THROWS_AS(flat_function(g, field), ContractError);
  CHECK_THROWS_AS(make_gradient_field(g, {{0, 2}, {1, 2}}), ContractError);
  CHECK_THROWS_AS(make_gradient_field(g, {{0, 0}}), ContractError);
}

TEST_CASE("rooted tree height function") {
  Graph g = load("tree8.graph");
  MorseFunction h = height_function(g, spanning_tree(g, 0));
  std::vector<Rational> vertices{q(0), q(1), q(1), q(1), q(2), q(2), q(2), q(2)};
  std::vector<Rational> edges{q(1), q(1), q(1), q(2), q(2), q(2), q(2)};
  CHECK(h.vertex_values == vertices);
  CHECK(h.edge_values == edges);
  CHECK(validate_morse(g, h).valid);
  CriticalCells c = critical_cells(g, h);
  CHECK(c.vertices == std::vector<VertexId>{0});
  CHECK(c.edges.empty());
  CHECK(morse_complex(g, h).homology == BettiNumbers{1, 0});
}

TEST_CASE("height functions on connected graphs are tight") {
  Graph k3 = load("k3.graph");
  MorseFunction h = height_function(k3, spanning_tree(k3, 1));
  CHECK(critical_cells(k3, h).c0() == 1);
  CHECK(critical_cells(k3, h).c1() == 1);
  CHECK(tree_boundary_zero_check(k3, h));

  Graph two = load("two_cycles.graph");
  for (VertexId root = 0; root < two.vertex_count(); ++root) {
    MorseFunction f = height_function(two, spanning_tree(two, root));
    CHECK(validate_morse(two, f).valid);
    CriticalCells c = critical_cells(two, f);
    CHECK(c.c0() == 1);
    CHECK(c.c1() == 2);
    CHECK(tree_boundary_zero_check(two, f));
    CHECK(morse_complex(two, f).homology == BettiNumbers{1, 2});
  }
}

TEST_CASE("random Morse functions against the definitions") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 200; ++i) {
    auto p = oracle::random_graph(rng, 9, 14, i % 5 == 0);
    Graph g = support::graph(p);
    MorseFunction f = random_morse(g, 1000 + i);
    auto pf = support::plain(f);
    CHECK(oracle::is_morse(p, pf));
    CHECK(validate_morse(g, f).valid);
    CHECK(exclusivity_holds(g, f));
    CriticalCells c = critical_cells(g, f);
    auto [c0, c1] = oracle::critical_counts(p, pf);
    CHECK(c.c0() == c0);
    CHECK(c.c1() == c1);
    CHECK(static_cast<long>(c0) - static_cast<long>(c1) ==
          static_cast<long>(g.vertex_count()) - static_cast<long>(g.edge_count()));

    MorseComplex mc = morse_complex(g, f);
    std::vector<std::size_t> cv, ce;
    auto boundary = oracle::boundary_map(p, pf, cv, ce);
    CHECK(cv == c.vertices);
    CHECK(ce == c.edges);
    CHECK(support::table(mc.differential) == boundary);
    CHECK(mc.routes_agree);
    CHECK(mc.homology.h0 == oracle::components(p));
    CHECK(mc.homology.h1 == oracle::cycle_rank(p));
    CHECK(mc.homology.h0 <= c0);
    CHECK(mc.homology.h1 <= c1);

    MorseFunction flat = flatten(g, f);
    CHECK(validate_morse(g, flat).valid);
    CHECK(gradient_field(g, flat).pairs == gradient_field(g, f).pairs);
  }
}

TEST_CASE("random_morse is deterministic in the seed") {
  Graph g = load("two_cycles.graph");
  CHECK(random_morse(g, 7) == random_morse(g, 7));
}
