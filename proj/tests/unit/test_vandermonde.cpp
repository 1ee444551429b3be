#include <doctest.h>

#include <numeric>

#include "mvvd/combinatorics.hpp"
#include "mvvd/error.hpp"
#include "mvvd/random.hpp"
#include "mvvd/vandermonde.hpp"
#include "mvvd/verify.hpp"
#include "oracles.hpp"

using namespace mvvd;

namespace {

const Ring Z = Ring::integers();

ExactMatrix worked() { return ExactMatrix::from_ints(Z, {{1, 0}, {0, 1}, {1, 1}}); }

// Coefficient vector, in basis order, of a product of integer linear forms.
std::vector<RingValue> expand_forms(const std::vector<std::vector<RingValue>>& forms, std::size_t vars,
                                    unsigned degree) {
  std::vector<std::string> names;
  for (std::size_t k = 0; k < vars; ++k) names.push_back("t" + std::to_string(k));
  const auto tvars = make_variables(names);
  MultiPoly product = MultiPoly::constant(tvars, 1);
  for (const auto& f : forms) {
    MultiPoly linear(tvars);
    for (std::size_t k = 0; k < vars; ++k) linear = linear + MultiPoly::variable(tvars, k).scaled(f[k].as_integer());
    product = product * linear;
  }
  const auto coeffs = oracle::terms_of(product);
  std::vector<RingValue> out;
  const MonomialBasis basis(vars, degree);
  for (const auto& mono : basis.monomials()) {
    auto it = coeffs.find(mono);
    out.push_back(Z.from_integer(it == coeffs.end() ? mpz_class(0) : it->second));
  }
  return out;
}

std::vector<RingValue> row_of(const ExactMatrix& m, std::size_t r) {
  auto span = m.row(r);
  return {span.begin(), span.end()};
}

ExactMatrix poly_matrix(const VariablesPtr& vars, std::initializer_list<std::initializer_list<const char*>> rows) {
  std::vector<RingValue> e;
  std::size_t cols = 0;
  for (const auto& row : rows) {
    cols = row.size();
    for (const char* text : row) e.emplace_back(MultiPoly::parse(text, vars));
  }
  return ExactMatrix(Ring::polynomials(vars), rows.size(), cols, std::move(e));
}

}  // namespace

TEST_CASE("veronese examples") {
  const auto vars = make_variables({"x", "y"});
  const ExactMatrix xy = poly_matrix(vars, {{"x", "y"}});
  CHECK(veronese_matrix(xy, 2) == poly_matrix(vars, {{"x^2", "x*y", "y^2"}}));
  const ExactMatrix e0 = ExactMatrix::from_ints(Z, {{1, 0, 0}});
  CHECK(veronese_matrix(e0, 3) == ExactMatrix::from_ints(Z, {{1, 0, 0, 0, 0, 0, 0, 0, 0, 0}}));
  CHECK(veronese_matrix(ExactMatrix::from_ints(Z, {{1, 1}, {1, 0}, {0, 1}}), 2) ==
        ExactMatrix::from_ints(Z, {{1, 1, 1}, {1, 0, 0}, {0, 0, 1}}));
  CHECK_THROWS_AS(veronese_matrix(ExactMatrix::from_ints(Z, {{1}}), 2), Error);
}

TEST_CASE("veronese entries are monomials of the row") {
  Rng rng(derive_seed(31, {}));
  for (int t = 0; t < 30; ++t) {
    const ExactMatrix x = random_matrix(Z, 3, 3, rng);
    const unsigned d = static_cast<unsigned>(t % 4);
    const ExactMatrix v = veronese_matrix(x, d);
    const MonomialBasis basis(3, d);
    for (std::size_t r = 0; r < 3; ++r) {
      for (std::size_t j = 0; j < basis.size(); ++j) {
        RingValue expected = Z.one();
        for (std::size_t k = 0; k < 3; ++k) expected = expected * x(r, k).pow(basis[j][k]);
        CHECK(v(r, j) == expected);
      }
    }
  }
}

TEST_CASE("mu examples") {
  CHECK(mu_matrix(worked()) == ExactMatrix::from_ints(Z, {{1, 1}, {1, 0}, {0, 1}}));
  CHECK(mu_matrix(ExactMatrix::identity(Z, 3)) == ExactMatrix::identity(Z, 3));
  CHECK(mu_prime(worked()) == Z.from_int(-1));
  CHECK(mu_prime(ExactMatrix::from_ints(Z, {{1, 2}, {3, 4}, {1, 2}})).is_zero());
  CHECK(mu_prime(ExactMatrix::from_ints(Z, {{1, 2}})) == Z.one());
}

TEST_CASE("mu of a symbolic point list reverses and swaps coordinates") {
  const auto vars = make_variables({"X0", "Y0", "X1", "Y1", "X2", "Y2"});
  const ExactMatrix x = poly_matrix(vars, {{"X0", "Y0"}, {"X1", "Y1"}, {"X2", "Y2"}});
  CHECK(mu_matrix(x) == poly_matrix(vars, {{"Y2", "X2"}, {"Y1", "X1"}, {"Y0", "X0"}}));
  RingValue product = x.ring().one();
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) product = product * (x(i, 0) * x(j, 1) - x(j, 0) * x(i, 1));
  }
  CHECK(mu_prime(x) == product);
}

TEST_CASE("permuting rows of X permutes rows of mu X up to sign") {
  for (int t = 0; t < 40; ++t) {
    Rng rng(derive_seed(32, {static_cast<std::uint64_t>(t)}));
    const std::size_t n = 1 + static_cast<std::size_t>(t % 3);
    const std::size_t rows = n + 1 + static_cast<std::size_t>(t % 2);
    const ExactMatrix x = random_matrix(Z, rows, n + 1, rng);
    std::vector<std::size_t> perm(rows);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const ExactMatrix xp = x.select_rows(perm);
    const ExactMatrix mu = mu_matrix(x);
    const ExactMatrix mup = mu_matrix(xp);
    const SubsetIndex index(rows, n, SubsetOrder::lex_on_omitted);
    for (std::size_t s = 0; s < index.count(); ++s) {
      std::vector<std::size_t> image;
      for (std::size_t o : index.omitted(s)) image.push_back(perm[o]);
      std::sort(image.begin(), image.end());
      const std::size_t target = index.index_of(complement(image, rows));
      const auto a = row_of(mup, s);
      const auto b = row_of(mu, target);
      std::vector<RingValue> neg_b;
      for (const auto& v : b) neg_b.push_back(-v);
      CHECK((a == b || a == neg_b));
    }
  }
}

TEST_CASE("eta examples") {
  CHECK(eta_matrix(worked(), 2) == ExactMatrix::from_ints(Z, {{0, 1, 0}, {1, 1, 0}, {0, 1, 1}}));
  CHECK(det(eta_matrix(worked(), 2)) == Z.from_int(-1));
  Rng rng(derive_seed(33, {}));
  const ExactMatrix square = random_matrix(Z, 3, 3, rng);
  CHECK(eta_matrix(square, 1) == square);
  CHECK_THROWS_AS(eta_matrix(worked(), 1), Error);
}

TEST_CASE("eta rows are coefficients of products of row forms") {
  for (int t = 0; t < 20; ++t) {
    Rng rng(derive_seed(34, {static_cast<std::uint64_t>(t)}));
    const std::size_t n = 1 + static_cast<std::size_t>(t % 3);
    const unsigned d = 1 + static_cast<unsigned>(t % 3);
    const ExactMatrix x = random_matrix(Z, n + d, n + 1, rng);
    const ExactMatrix eta = eta_matrix(x, d);
    const SubsetIndex choices(n + d, d, SubsetOrder::lex_on_taken);
    REQUIRE(eta.rows() == choices.count());
    for (std::size_t s = 0; s < choices.count(); ++s) {
      std::vector<std::vector<RingValue>> forms;
      for (std::size_t r : choices.taken(s)) forms.push_back(row_of(x, r));
      CHECK(row_of(eta, s) == expand_forms(forms, n + 1, d));
    }
  }
}

TEST_CASE("symmetric power examples") {
  const ExactMatrix u = ExactMatrix::from_ints(Z, {{2, 0}, {0, 3}});
  const ExactMatrix s2 = sym_power_matrix(u, 2);
  CHECK(s2 == ExactMatrix::from_ints(Z, {{4, 0, 0}, {0, 6, 0}, {0, 0, 9}}));
  CHECK(det(s2) == Z.from_int(216));
  for (std::size_t m = 1; m <= 4; ++m) {
    for (unsigned d = 0; d <= 3; ++d) {
      CHECK(sym_power_matrix(ExactMatrix::identity(Z, m), d) == ExactMatrix::identity(Z, binomial(m + d - 1, d)));
    }
  }
  CHECK_THROWS_AS(sym_power_matrix(worked(), 2), Error);
}

TEST_CASE("symmetric power columns are products of image vectors") {
  for (int t = 0; t < 20; ++t) {
    Rng rng(derive_seed(35, {static_cast<std::uint64_t>(t)}));
    const std::size_t m = 1 + static_cast<std::size_t>(t % 3);
    const unsigned d = static_cast<unsigned>(t % 4);
    const ExactMatrix u = random_matrix(Z, m, m, rng);
    const ExactMatrix s = sym_power_matrix(u, d);
    const ExactMatrix ut = u.transpose();
    const MonomialBasis basis(m, d);
    for (std::size_t j = 0; j < basis.size(); ++j) {
      std::vector<std::vector<RingValue>> forms;
      for (std::size_t k = 0; k < m; ++k) {
        for (unsigned rep = 0; rep < basis[j][k]; ++rep) forms.push_back(row_of(ut, k));
      }
      CHECK(row_of(s.transpose(), j) == expand_forms(forms, m, d));
    }
  }
}

TEST_CASE("symmetric power is functorial") {
  for (int t = 0; t < 40; ++t) {
    Rng rng(derive_seed(36, {static_cast<std::uint64_t>(t)}));
    const std::size_t m = 1 + static_cast<std::size_t>(t % 4);
    const unsigned d = static_cast<unsigned>(t % 4);
    const ExactMatrix u = random_matrix(Z, m, m, rng);
    const ExactMatrix v = random_matrix(Z, m, m, rng);
    CHECK(sym_power_matrix(u * v, d) == sym_power_matrix(u, d) * sym_power_matrix(v, d));
  }
}

TEST_CASE("pairing matrix") {
  const ExactMatrix p = pairing_matrix(worked(), 2);
  CHECK(p == ExactMatrix::from_ints(Z, {{-1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  CHECK(det(p) == Z.from_int(-1));
  for (int t = 0; t < 20; ++t) {
    Rng rng(derive_seed(37, {static_cast<std::uint64_t>(t)}));
    const ExactMatrix x = random_matrix(Z, 4, 2, rng);
    const ExactMatrix q = pairing_matrix(x, 3);
    for (std::size_t i = 0; i < q.rows(); ++i) {
      for (std::size_t j = 0; j < q.cols(); ++j) {
        if (i != j) CHECK(q(i, j).is_zero());
      }
    }
  }
}

TEST_CASE("linear form product") {
  const std::vector<RingValue> a{Z.from_int(1), Z.from_int(2)}, b{Z.from_int(3), Z.from_int(-1)};
  const std::vector<std::span<const RingValue>> forms{a, b};
  // (s + 2t)(3s - t) = 3s^2 + 5st - 2t^2
  const auto c = linear_form_product(Z, 2, forms);
  CHECK(c == std::vector<RingValue>{Z.from_int(3), Z.from_int(5), Z.from_int(-2)});
  CHECK(linear_form_product(Z, 2, {}) == std::vector<RingValue>{Z.one()});
}
