#include <doctest.h>

#include "mvvd/combinatorics.hpp"
#include "mvvd/error.hpp"
#include "oracles.hpp"

using namespace mvvd;

TEST_CASE("binomial coefficients") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(8, 4) == 70);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(60, 30) == 118264581564861424ULL);
  CHECK_THROWS_AS(binomial(200, 100), Error);
}

TEST_CASE("monomial basis examples") {
  const std::vector<Exponents> n1d2{{2, 0}, {1, 1}, {0, 2}};
  CHECK(monomial_basis(1, 2).monomials() == n1d2);
  const std::vector<Exponents> n2d1{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  CHECK(monomial_basis(2, 1).monomials() == n2d1);
  const std::vector<Exponents> n2d2{{2, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 2, 0}, {0, 1, 1}, {0, 0, 2}};
  CHECK(monomial_basis(2, 2).monomials() == n2d2);
  CHECK(monomial_basis(3, 0).size() == 1);
  CHECK_THROWS_AS(monomial_basis(0, 2), Error);
}

TEST_CASE("monomial basis matches enumerate-and-sort") {
  for (std::size_t vars = 1; vars <= 5; ++vars) {
    for (unsigned d = 0; d <= 5; ++d) {
      CAPTURE(vars);
      CAPTURE(d);
      const MonomialBasis basis(vars, d);
      const auto expected = oracle::brute_force_monomials(vars, d);
      REQUIRE(basis.size() == expected.size());
      CHECK(basis.size() == binomial(vars - 1 + d, d));
      for (std::size_t i = 0; i < basis.size(); ++i) {
        CHECK(basis[i] == expected[i]);
        CHECK(basis.index_of(expected[i]) == i);
      }
    }
  }
  const MonomialBasis b(3, 2);
  const std::vector<unsigned> wrong_degree{1, 0, 0};
  CHECK_THROWS_AS(b.index_of(wrong_degree), Error);
}

TEST_CASE("subset index orders") {
  for (std::size_t ground = 1; ground <= 8; ++ground) {
    for (std::size_t size = 0; size <= ground; ++size) {
      CAPTURE(ground);
      CAPTURE(size);
      const auto subsets = oracle::brute_force_subsets(ground, size);
      const SubsetIndex taken(ground, size, SubsetOrder::lex_on_taken);
      REQUIRE(taken.count() == subsets.size());
      for (std::size_t i = 0; i < subsets.size(); ++i) {
        CHECK(taken.taken(i) == subsets[i]);
        CHECK(taken.index_of(subsets[i]) == i);
        CHECK(taken.omitted(i) == complement(subsets[i], ground));
      }
      // Omitted sets in lex order.
      const auto omitted = oracle::brute_force_subsets(ground, ground - size);
      const SubsetIndex by_omitted(ground, size, SubsetOrder::lex_on_omitted);
      REQUIRE(by_omitted.count() == omitted.size());
      for (std::size_t i = 0; i < omitted.size(); ++i) {
        CHECK(by_omitted.omitted(i) == omitted[i]);
        CHECK(by_omitted.index_of(by_omitted.taken(i)) == i);
      }
    }
  }
  CHECK_THROWS_AS(SubsetIndex(3, 4, SubsetOrder::lex_on_taken), Error);
}
