#include <doctest.h>

#include "mvvd/determinant.hpp"
#include "mvvd/error.hpp"
#include "mvvd/kernels.hpp"
#include "mvvd/random.hpp"
#include "oracles.hpp"

using namespace mvvd;

namespace {

const DetAlgorithm all_algorithms[] = {DetAlgorithm::cofactor, DetAlgorithm::berkowitz, DetAlgorithm::bareiss,
                                       DetAlgorithm::auto_select};

const std::vector<std::size_t> r01{0, 1}, r12{1, 2}, c01{0, 1};

}  // namespace

TEST_CASE("determinant examples") {
  const Ring z = Ring::integers();
  const ExactMatrix x = ExactMatrix::from_ints(z, {{1, 0}, {0, 1}, {1, 1}});
  for (DetAlgorithm alg : all_algorithms) {
    CAPTURE(to_string(alg));
    CHECK(det(ExactMatrix::identity(z, 3), alg) == z.one());
    CHECK(det(ExactMatrix::from_ints(z, {{0, 1}, {1, 1}}), alg) == z.from_int(-1));
    CHECK(minor(x, r01, c01, alg) == z.one());
    CHECK(minor(x, r12, c01, alg) == z.from_int(-1));
    CHECK(det(ExactMatrix(z, 0, 0), alg) == z.one());
  }
  const std::vector<std::size_t> i01{0, 1};
  CHECK(minor(ExactMatrix::identity(z, 3), i01, i01) == z.one());
}

TEST_CASE("determinant preconditions") {
  const Ring z = Ring::integers();
  const ExactMatrix x = ExactMatrix::from_ints(z, {{1, 0}, {0, 1}, {1, 1}});
  CHECK_THROWS_AS(det(x), Error);
  const std::vector<std::size_t> bad_order{1, 0}, out_of_range{0, 3};
  CHECK_THROWS_AS(minor(x, bad_order, c01), Error);
  CHECK_THROWS_AS(minor(x, out_of_range, c01), Error);
  CHECK_THROWS_AS(parse_det_algorithm("gauss"), Error);
  CHECK(parse_det_algorithm("berkowitz") == DetAlgorithm::berkowitz);
}

TEST_CASE("column operations") {
  const Ring z = Ring::integers();
  CHECK(ExactMatrix::identity(z, 2).add_scaled_column(0, 1, z.one()) == ExactMatrix::from_ints(z, {{1, 1}, {0, 1}}));
  const ExactMatrix x = ExactMatrix::from_ints(z, {{1, 0}, {0, 1}, {1, 1}});
  CHECK(x.scale_column(0, z.from_int(2)) == ExactMatrix::from_ints(z, {{2, 0}, {0, 1}, {2, 1}}));
  CHECK_THROWS_AS(x.add_scaled_column(0, 0, z.one()), Error);
  CHECK_THROWS_AS(x.scale_column(2, z.one()), Error);
  CHECK_THROWS_AS(ExactMatrix(z, 2, 2, {z.one()}), Error);
  CHECK_THROWS_AS(ExactMatrix(z, 1, 1, {Ring::prime_field().one()}), Error);
}

TEST_CASE("all algorithms match the Leibniz formula") {
  const Ring rings[] = {Ring::integers(), Ring::prime_field(), Ring::prime_field(PrimeField(5)),
                        Ring::polynomials(make_variables({"x", "y", "z"}))};
  for (const Ring& ring : rings) {
    for (std::size_t order = 1; order <= 5; ++order) {
      const int trials = ring.kind() == RingKind::polynomial ? 5 : 40;
      for (int t = 0; t < trials; ++t) {
        Rng rng(derive_seed(21, {static_cast<std::uint64_t>(ring.kind()), order, static_cast<std::uint64_t>(t)}));
        const ExactMatrix m = random_matrix(ring, order, order, rng);
        const RingValue expected = oracle::leibniz_det(m);
        for (DetAlgorithm alg : all_algorithms) {
          CAPTURE(ring.name());
          CAPTURE(order);
          CAPTURE(to_string(alg));
          CHECK(det(m, alg) == expected);
        }
      }
    }
  }
}

TEST_CASE("mod-p determinant is the reduced integer determinant") {
  const Ring z = Ring::integers();
  const Ring f = Ring::prime_field(PrimeField(10007));
  for (std::size_t order = 1; order <= 9; ++order) {
    for (int t = 0; t < 20; ++t) {
      Rng rng(derive_seed(22, {order, static_cast<std::uint64_t>(t)}));
      const ExactMatrix m = random_matrix(z, order, order, rng);
      std::vector<RingValue> reduced;
      for (const auto& e : m.entries()) reduced.push_back(f.from_integer(e.as_integer()));
      const ExactMatrix mp(f, order, order, std::move(reduced));
      CHECK(det_bareiss(mp) == f.from_integer(det_bareiss(m).as_integer()));
    }
  }
}

TEST_CASE("determinant is alternating and multilinear") {
  const Ring z = Ring::integers();
  for (int t = 0; t < 100; ++t) {
    Rng rng(derive_seed(23, {static_cast<std::uint64_t>(t)}));
    const std::size_t order = 2 + static_cast<std::size_t>(t % 5);
    const ExactMatrix m = random_matrix(z, order, order, rng);
    const RingValue d = det(m);
    CHECK(det(m.swap_rows(0, order - 1)) == -d);
    CHECK(det(m.transpose()) == d);
    CHECK(det(m.add_scaled_column(0, order - 1, z.from_int(-7))) == d);
    CHECK(det(m.scale_column(1, z.from_int(3))) == d * z.from_int(3));
    // Repeat row 0 in the last row.
    ExactMatrix repeated = m;
    for (std::size_t c = 0; c < order; ++c) repeated = repeated.with_entry(order - 1, c, m(0, c));
    for (DetAlgorithm alg : all_algorithms) CHECK(det(repeated, alg).is_zero());
    const ExactMatrix other = random_matrix(z, order, order, rng);
    CHECK(det(m * other) == d * det(other));
  }
}

TEST_CASE("bareiss handles zero pivots") {
  const Ring z = Ring::integers();
  const Ring f = Ring::prime_field(PrimeField(7));
  const auto m = ExactMatrix::from_ints(z, {{0, 0, 1}, {0, 2, 0}, {3, 0, 0}});
  CHECK(det_bareiss(m) == z.from_int(-6));
  const auto mp = ExactMatrix::from_ints(f, {{0, 0, 1}, {0, 2, 0}, {3, 0, 0}});
  CHECK(det_bareiss(mp) == f.from_int(-6));
  const auto singular = ExactMatrix::from_ints(f, {{1, 2, 3}, {0, 0, 5}, {0, 0, 6}});
  CHECK(det_bareiss(singular).is_zero());
}

TEST_CASE("scalar and avx2 row kernels agree") {
  const kernels::ModpKernels* fast = kernels::avx2();
  if (fast == nullptr) {
    MESSAGE("AVX2 kernel unavailable on this machine; equivalence not exercised");
    return;
  }
  const std::uint64_t primes[] = {2, 3, 7, 65521, 1'000'003, 67'108'859};
  for (std::uint64_t p : primes) {
    if (p > fast->max_modulus) continue;
    CAPTURE(p);
    Rng rng(derive_seed(24, {p}));
    std::uniform_int_distribution<std::uint64_t> residue(0, p - 1);
    for (std::size_t len : {0, 1, 3, 4, 5, 8, 17, 64, 131}) {
      std::vector<std::uint64_t> x(len), y(len);
      for (auto& v : x) v = residue(rng);
      for (auto& v : y) v = residue(rng);
      for (std::uint64_t a : {std::uint64_t{0}, std::uint64_t{1}, p - 1, residue(rng)}) {
        const std::uint64_t b = residue(rng);
        std::vector<std::uint64_t> y_scalar = y, y_fast = y;
        kernels::scalar().combine_rows(y_scalar.data(), x.data(), len, a, b, p);
        fast->combine_rows(y_fast.data(), x.data(), len, a, b, p);
        CHECK(y_scalar == y_fast);
        for (std::size_t j = 0; j < len; ++j) {
          const std::uint64_t expected = (mulmod(a, y[j], p) + mulmod(b, x[j], p)) % p;
          CHECK(y_scalar[j] == expected);
        }
      }
    }
  }
}

TEST_CASE("scalar and avx2 determinants agree") {
  const kernels::ModpKernels* fast = kernels::avx2();
  if (fast == nullptr) return;
  const std::uint64_t p = 1'000'003;
  std::uniform_int_distribution<std::uint64_t> residue(0, p - 1);
  for (std::size_t order = 1; order <= 24; ++order) {
    Rng rng(derive_seed(25, {order}));
    std::vector<std::uint64_t> a(order * order);
    for (auto& v : a) v = residue(rng);
    if (order % 3 == 0) {
      for (std::size_t c = 0; c < order; ++c) a[(order - 1) * order + c] = a[c];
    }
    std::vector<std::uint64_t> b = a;
    const std::uint64_t ds = kernels::det_modp(a, order, p, kernels::scalar());
    const std::uint64_t df = kernels::det_modp(b, order, p, *fast);
    CHECK(ds == df);
    if (order % 3 == 0) CHECK(ds == 0);
  }
}

TEST_CASE("kernel selection respects the modulus range") {
  CHECK(std::string(kernels::select((std::uint64_t{1} << 61) - 1).name) == "scalar");
  const Ring big = Ring::prime_field(PrimeField((std::uint64_t{1} << 61) - 1));
  const ExactMatrix m = ExactMatrix::from_ints(big, {{2, 3}, {5, 7}});
  CHECK(det(m) == big.from_int(-1));
}
