// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "errors.hpp"
#include "spectral.hpp"
#include "support.hpp"

using namespace gqm;

namespace {

Graph k2() { return Graph(2, {{0, 1}}); }
Graph k3() { return parse_graph(support::slurp(support::data_file("k3.graph"))); }

}  // namespace

TEST_CASE("K2 Laplacians") {
  CHECK(even_laplacian(k2()) == RationalMatrix{{1, -1}, {-1, 1}});
  CHECK(odd_laplacian(k2()) == RationalMatrix{{2}});
  CHECK(betti_numbers(k2()) == BettiNumbers{1, 0});
}

TEST_CASE("K3 Laplacians and Betti numbers") {
  Graph g = k3();
  CHECK(even_laplacian(g) == RationalMatrix{{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}});
  CHECK(odd_laplacian(g) == RationalMatrix{{2, 1, -1}, {1, 2, 1}, {-1, 1, 2}});
  CHECK(betti_numbers(g) == BettiNumbers{1, 1});
}

TEST_CASE("golden graphs") {
  CHECK(betti_numbers(parse_graph(support::slurp(support::data_file("two_cycles.graph")))) == BettiNumbers{1, 2});
  CHECK(betti_numbers(parse_graph(support::slurp(support::data_file("edgeless3.graph")))) == BettiNumbers{3, 0});
  CHECK(betti_numbers(parse_graph(support::slurp(support::data_file("tree8.graph")))) == BettiNumbers{1, 0});
}

TEST_CASE("parallel edges use the incidence form") {
  Graph g(2, {{0, 1}, {1, 0}});
  CHECK_FALSE(laplacian_forms_agree(g));
  CHECK(even_laplacian_from_incidence(g) == RationalMatrix{{2, -2}, {-2, 2}});
  CHECK(betti_numbers(g) == BettiNumbers{1, 1});
}

TEST_CASE("Hodge dimensions on random graphs") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 200; ++i) {
    auto p = oracle::random_graph(rng, 10, 15, i % 5 == 0);
    Graph g = support::graph(p);
    if (!g.has_parallel_edges()) CHECK(laplacian_forms_agree(g));
    BettiNumbers b = betti_numbers(g);
    CHECK(b.h0 == oracle::components(p));
    CHECK(b.h1 == oracle::cycle_rank(p));
    CHECK(b.h0 + g.edge_count() == b.h1 + g.vertex_count());
  }
}

TEST_CASE("partition function of K2") {
  for (double t : {0.0, 0.3, 1.0, 2.5}) {
    Eigen::MatrixXd z = partition_function(k2(), t);
    const double d = 0.5 * (1 + std::exp(-2 * t)), o = 0.5 * (1 - std::exp(-2 * t));
    CHECK(z(0, 0) == doctest::Approx(d));
    CHECK(z(1, 1) == doctest::Approx(d));
    CHECK(z(0, 1) == doctest::Approx(o));
    CHECK(z(1, 0) == doctest::Approx(o));
  }
}

TEST_CASE("semigroup property and heat flow") {
  Graph g = k3();
  Eigen::MatrixXd a = partition_function(g, 0.4) * partition_function(g, 0.7);
  CHECK((a - partition_function(g, 1.1)).cwiseAbs().maxCoeff() < 1e-12);
  auto end = evolve({1.0, 0.0}, 30.0, k2());
  CHECK(end[0] == doctest::Approx(0.5));
  CHECK(end[1] == doctest::Approx(0.5));
  auto same = evolve({0.2, 0.3, 0.5}, 0.0, g);
  CHECK(same[2] == doctest::Approx(0.5));
  CHECK_THROWS_AS(evolve({1.0, 0.0}, -1.0, k2()), ContractError);
  CHECK_THROWS_AS(evolve({1.0}, 1.0, k2()), ContractError);
}

TEST_CASE("walk counts on small graphs") {
  CHECK(generalized_walk_matrix(k2(), 1) == RationalMatrix{{-1, 1}, {1, -1}});
  CHECK(generalized_walk_matrix(k3(), 0) == RationalMatrix::identity(3));
  CHECK(odd_walk_matrix(k3(), 0) == RationalMatrix::identity(3));
  // Four stay-stay walks and two out-and-back walks.
  CHECK(generalized_walk_count(k3(), 2, 1, 1) == 6);
  CHECK(oracle::generalized_walks(support::plain(k3()), 2, 1, 1) == 6);
  for (unsigned k = 0; k <= 4; ++k)
    for (VertexId i = 0; i < 3; ++i)
      for (VertexId j = 0; j < 3; ++j) CHECK(enumerate_generalized_walks(k3(), k, i, j) == generalized_walk_count(k3(), k, i, j));
}

TEST_CASE("walk counts agree with brute force") {
  std::mt19937_64 rng(32);
  int graphs = 0;
  while (graphs < 30) {
    auto p = oracle::random_graph(rng, 6, 8, graphs % 4 == 0);
    Graph g = support::graph(p);
    ++graphs;
    for (unsigned k = 0; k <= 5; ++k) {
      RationalMatrix w = generalized_walk_matrix(g, k);
      for (VertexId i = 0; i < g.vertex_count(); ++i)
        for (VertexId j = 0; j < g.vertex_count(); ++j) CHECK(w(i, j) == oracle::generalized_walks(p, k, i, j));
    }
    for (unsigned k = 0; k <= 4; ++k) {
      RationalMatrix w = odd_walk_matrix(g, k);
      for (EdgeId a = 0; a < g.edge_count(); ++a)
        for (EdgeId b = 0; b < g.edge_count(); ++b) CHECK(w(a, b) == oracle::odd_walks(p, k, a, b));
    }
  }
}

TEST_CASE("energy cutoff") {
  CHECK(cutoff_cohomology(cutoff_complex(k3(), 0.5)) == BettiNumbers{1, 1});
  CutoffComplex c = cutoff_complex(k3(), 3.5);
  CHECK(c.even_basis.cols() == 3);
  CHECK(c.odd_basis.cols() == 3);
  CHECK(cutoff_cohomology(c) == BettiNumbers{1, 1});
  CHECK_THROWS_AS(cutoff_complex(k3(), -0.1), ContractError);

  std::mt19937_64 rng(33);
  std::uniform_real_distribution<double> level(0.0, 8.0);
  for (int i = 0; i < 200; ++i) {
    auto p = oracle::random_graph(rng, 10, 15, i % 5 == 0);
    Graph g = support::graph(p);
    for (int s = 0; s < 5; ++s) {
      CutoffComplex cc = cutoff_complex(g, level(rng));
      CHECK(cc.leakage < 1e-8);
      BettiNumbers b = cutoff_cohomology(cc);
      CHECK(b.h0 == oracle::components(p));
      CHECK(b.h1 == oracle::cycle_rank(p));
    }
  }
}
