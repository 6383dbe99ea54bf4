// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "errors.hpp"
#include "linalg.hpp"
#include "support.hpp"

using namespace gqm;
using support::q;

TEST_CASE("rational parsing and rendering") {
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational("-2")) == "-2");
  CHECK(to_string(parse_rational("0/5")) == "0");
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("1/-2"));
  CHECK_THROWS(parse_rational("abc"));
}

TEST_CASE("rank and kernel on fixed matrices") {
  RationalMatrix a{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  CHECK(rational_rank(a) == 2);
  KernelBasis k = rational_kernel(a);
  REQUIRE(k.dimension == 1);
  CHECK(a.apply(k.basis[0]) == std::vector<Rational>(3, 0));
  CHECK(rational_rank(RationalMatrix(0, 0)) == 0);
  CHECK(rational_kernel(RationalMatrix(2, 3)).dimension == 3);
}

TEST_CASE("rank and kernel agree with Gauss-Jordan oracle") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 150; ++i) {
    std::size_t r = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
    std::size_t c = std::uniform_int_distribution<std::size_t>(1, 8)(rng);
    auto t = oracle::random_rational_matrix(rng, r, c);
    RationalMatrix m = support::matrix(t, c);
    CHECK(rational_rank(m) == oracle::rank(t));
    KernelBasis k = rational_kernel(m);
    CHECK(k.dimension == c - oracle::rank(t));
    for (const auto& x : k.basis) CHECK(oracle::is_zero_vector(t, x));
    if (k.dimension > 0) {
      oracle::Table vectors(k.basis.begin(), k.basis.end());
      CHECK(oracle::rank(vectors) == k.dimension);
    }
  }
}

TEST_CASE("K3 even Laplacian spectrum") {
  RationalMatrix l{{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}};
  Spectrum s = symmetric_spectrum(l);
  REQUIRE(s.eigenvalues.size() == 3);
  CHECK(s.eigenvalues[0] == doctest::Approx(0).epsilon(1e-12));
  CHECK(s.eigenvalues[1] == doctest::Approx(3));
  CHECK(s.eigenvalues[2] == doctest::Approx(3));
  CHECK(s.zero_count == 1);
  CHECK(s.kernel_dimension == 1);
  CHECK(s.residual < 1e-10);
  CHECK_THROWS_AS(symmetric_spectrum(RationalMatrix{{1, 2}, {0, 1}}), ContractError);
}

TEST_CASE("lemma: kernel of A equals kernel of A^T A") {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 100; ++i) {
    std::size_t r = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
    std::size_t c = std::uniform_int_distribution<std::size_t>(1, 8)(rng);
    auto t = oracle::random_rational_matrix(rng, r, c);
    RationalMatrix a = support::matrix(t, c);
    CHECK(verify_lemma_kernel(a));
    auto ata = oracle::multiply(oracle::transpose(t, c), t);
    CHECK(oracle::nullity(ata, c) == oracle::nullity(t, c));
  }
}

TEST_CASE("lemma: nonzero spectra of A A^T and A^T A") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 100; ++i) {
    std::size_t r = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
    std::size_t c = std::uniform_int_distribution<std::size_t>(1, 8)(rng);
    RationalMatrix a = support::matrix(oracle::random_rational_matrix(rng, r, c), c);
    SpectrumComparison cmp = verify_lemma_spectrum(a);
    CHECK(cmp.counts_match);
    CHECK(cmp.agree(1e-8));
    CHECK(cmp.nonzero_left.size() == rational_rank(a));
  }
}

TEST_CASE("lemma: conjugation preserves the kernel dimension") {
  RationalMatrix a{{1, 1}, {1, 1}};
  RationalMatrix x = RationalMatrix::diagonal({q(2), q(1, 2)});
  RationalMatrix y = RationalMatrix::identity(2);
  CHECK(verify_lemma_conjugacy(a, x, y));
  CHECK(nullity(x * a * y) == 1);
  CHECK_THROWS_AS(verify_lemma_conjugacy(a, RationalMatrix{{1, 1}, {1, 1}}, y), ContractError);
  CHECK_THROWS_AS(verify_lemma_conjugacy(a, RationalMatrix::identity(3), y), ContractError);

  std::mt19937_64 rng(24);
  for (int i = 0; i < 100; ++i) {
    std::size_t r = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
    std::size_t c = std::uniform_int_distribution<std::size_t>(1, 8)(rng);
    auto t = oracle::random_rational_matrix(rng, r, c);
    auto xt = oracle::random_invertible(rng, r);
    auto yt = oracle::random_invertible(rng, c);
    CHECK(oracle::rank(xt) == r);
    CHECK(oracle::rank(yt) == c);
    CHECK(verify_lemma_conjugacy(support::matrix(t, c), support::matrix(xt, r), support::matrix(yt, c)));
    CHECK(oracle::nullity(oracle::multiply(oracle::multiply(xt, t), yt), c) == oracle::nullity(t, c));
  }
}

TEST_CASE("numeric rank") {
  CHECK(numeric_rank(RationalMatrix{{1, 2}, {2, 4}}.to_eigen()) == 1);
  CHECK(numeric_rank(RationalMatrix{{1, 0}, {0, 1}}.to_eigen()) == 2);
}
