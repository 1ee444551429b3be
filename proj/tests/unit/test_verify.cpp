#include <doctest.h>

#include "mvvd/error.hpp"
#include "mvvd/random.hpp"
#include "mvvd/vandermonde.hpp"
#include "mvvd/verify.hpp"

using namespace mvvd;

namespace {

const Ring Z = Ring::integers();

ExactMatrix worked() { return ExactMatrix::from_ints(Z, {{1, 0}, {0, 1}, {1, 1}}); }

}  // namespace

TEST_CASE("exponents") {
  CHECK(lemma_exponent(1, 2) == 3);
  CHECK(lemma_exponent(2, 2) == 8);
  CHECK(sym_power_exponent(2, 2) == 3);
  CHECK(sym_power_exponent(3, 1) == 1);
}

TEST_CASE("hdv on the worked example") {
  const auto r = verify_hdv(worked());
  CHECK(r.verdict == Verdict::equal);
  CHECK(r.lhs == Z.from_int(-1));
  CHECK(r.rhs == Z.from_int(-1));
  CHECK(r.n == 1);
  CHECK(r.d == 2);
  CHECK(r.consistent());
  const auto id = verify_hdv(ExactMatrix::identity(Z, 3));
  CHECK(id.verdict == Verdict::equal);
  CHECK(id.lhs == Z.one());
}

TEST_CASE("hdv with d = 0 is trivial") {
  Rng rng(derive_seed(41, {}));
  const auto r = verify_hdv(random_matrix(Z, 2, 3, rng));
  CHECK(r.d == 0);
  CHECK(r.lhs == Z.one());
  CHECK(r.rhs == Z.one());
  CHECK_THROWS_AS(verify_hdv(ExactMatrix::from_ints(Z, {{1}, {2}})), Error);
}

TEST_CASE("hdv for a symbolic point list is the projective Vandermonde product") {
  const ExactMatrix x = symbolic_matrix(3, 2);
  const auto r = verify_hdv(x);
  CHECK(r.verdict == Verdict::equal);
  RingValue product = x.ring().one();
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) product = product * (x(i, 0) * x(j, 1) - x(j, 0) * x(i, 1));
  }
  CHECK(r.rhs == product);
  CHECK(verify_projective_vandermonde(x).verdict == Verdict::equal);
}

TEST_CASE("hdv holds over Z/p for repeated rows") {
  const Ring f = Ring::prime_field();
  const auto r = verify_hdv(ExactMatrix::from_ints(f, {{1, 2, 3}, {4, 5, 6}, {1, 2, 3}, {7, 8, 10}}));
  CHECK(r.verdict == Verdict::equal);
  CHECK(r.rhs.is_zero());
}

TEST_CASE("dual identity") {
  const auto r = verify_dual(worked());
  CHECK(r.verdict == Verdict::equal_up_to_sign);
  CHECK(r.sign == 1);
  CHECK(r.lhs == Z.from_int(-1));
  const auto zero = verify_dual(ExactMatrix::from_ints(Z, {{1, 2}, {1, 2}, {3, 1}}));
  CHECK(zero.verdict == Verdict::equal);
  CHECK(zero.lhs.is_zero());
  CHECK_FALSE(zero.sign.has_value());
  std::optional<int> sign;
  for (int t = 0; t < 100; ++t) {
    Rng rng(derive_seed(42, {static_cast<std::uint64_t>(t)}));
    const auto s = verify_dual(random_matrix(Z, 4, 3, rng));
    REQUIRE(s.verdict != Verdict::unequal);
    if (!s.sign) continue;
    if (!sign) sign = s.sign;
    CHECK(s.sign == sign);
  }
}

TEST_CASE("column lemma") {
  const auto scaled = worked().scale_column(0, Z.from_int(2));
  CHECK(mu_prime(scaled) == Z.from_int(-8));
  const auto r = verify_column_lemma(worked(), Z.from_int(2), 0, 1);
  CHECK(r.verdict == Verdict::equal);
  CHECK(r.checks.size() == 4);
  const auto one = verify_column_lemma(worked(), Z.one(), 1, 0);
  CHECK(one.verdict == Verdict::equal);
  Rng rng(derive_seed(43, {}));
  for (int t = 0; t < 20; ++t) {
    const auto x = random_matrix(Z, 4, 3, rng);
    CHECK(verify_column_lemma(x, Z.from_int(-1), 2, 0).verdict == Verdict::equal);
  }
  CHECK_THROWS_AS(verify_column_lemma(worked(), Z.one(), 0, 2), Error);
  CHECK_THROWS_AS(verify_column_lemma(worked(), Ring::prime_field().one(), 0, 1), Error);
}

TEST_CASE("symmetric power identity") {
  const auto r = verify_sym_power(ExactMatrix::from_ints(Z, {{2, 0}, {0, 3}}), 2);
  CHECK(r.verdict == Verdict::equal);
  CHECK(r.lhs == Z.from_int(216));
  CHECK(verify_sym_power(ExactMatrix::identity(Z, 3), 3).lhs == Z.one());
  const auto sym = verify_sym_power(symbolic_matrix(2, 2, "u"), 2);
  CHECK(sym.verdict == Verdict::equal);
  const ExactMatrix u = symbolic_matrix(2, 2, "u");
  CHECK(sym.rhs == (u(0, 0) * u(1, 1) - u(0, 1) * u(1, 0)).pow(3));
}

TEST_CASE("pairing identity") {
  const auto r = verify_pairing(worked());
  CHECK(r.verdict == Verdict::equal_up_to_sign);
  CHECK(r.sign == -1);
  CHECK(r.lhs == Z.from_int(-1));
  CHECK(r.rhs == Z.one());
  REQUIRE(r.checks.size() == 1);
  CHECK(r.checks[0].passed);
}

TEST_CASE("naive identity") {
  const auto fails = demo_naive_failure(2, 2, 1);
  CHECK(fails.verdict == Verdict::unequal);
  CHECK(fails.seed == 1);
  for (unsigned d = 1; d <= 4; ++d) CHECK(demo_naive_failure(1, d, 7).verdict == Verdict::equal);
  // Repeated row: both sides vanish.
  const auto rep = naive_comparison(
      ExactMatrix::from_ints(Z, {{1, 2, 3}, {1, 2, 3}, {0, 1, 1}, {2, 0, 1}, {1, 1, 1}, {3, 1, 2}}), 2);
  CHECK(rep.verdict == Verdict::equal);
  CHECK(rep.lhs.is_zero());
  CHECK_THROWS_AS(naive_comparison(worked(), 1), Error);
}

TEST_CASE("affine Vandermonde") {
  std::vector<RingValue> pts{Z.from_int(2), Z.from_int(5), Z.from_int(-1)};
  const auto r = verify_affine_vandermonde(pts);
  CHECK(r.verdict == Verdict::equal);
  CHECK(r.rhs == Z.from_int((5 - 2) * (-1 - 2) * (-1 - 5)));
}

TEST_CASE("report consistency flags tampering") {
  auto r = verify_hdv(worked());
  r.verdict = Verdict::unequal;
  CHECK_FALSE(r.consistent());
}
