#include <doctest.h>

#include <numeric>

#include "mvvd/error.hpp"
#include "mvvd/determinant.hpp"
#include "mvvd/genpos.hpp"
#include "oracles.hpp"

using namespace mvvd;

namespace {

const Ring Z = Ring::integers();

PointConfiguration collinear() {
  return PointConfiguration(ExactMatrix::from_ints(Z, {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 1}}));
}

PointConfiguration simplex_ones() {
  return PointConfiguration(ExactMatrix::from_ints(Z, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}}));
}

// Every (n+1)-subset checked with the Leibniz formula; returns the first vanishing one.
std::optional<std::vector<std::size_t>> brute_force_witness(const PointConfiguration& cfg) {
  const std::size_t n = cfg.dimension();
  std::vector<std::size_t> cols(n + 1);
  std::iota(cols.begin(), cols.end(), 0);
  for (const auto& rows : oracle::brute_force_subsets(cfg.size(), n + 1)) {
    if (oracle::leibniz_det(cfg.points().submatrix(rows, cols)).is_zero()) return rows;
  }
  return std::nullopt;
}

// Unimodular (n+1)x(n+1) matrix: product of random elementary column operations.
ExactMatrix random_unimodular(const Ring& ring, std::size_t order, Rng& rng) {
  ExactMatrix g = ExactMatrix::identity(ring, order);
  std::uniform_int_distribution<std::size_t> col(0, order - 1);
  for (int k = 0; k < 8; ++k) {
    const std::size_t a = col(rng);
    std::size_t b = col(rng);
    if (a == b) b = (a + 1) % order;
    g = g.add_scaled_column(a, b, random_value(ring, rng));
  }
  return g;
}

}  // namespace

TEST_CASE("general position examples") {
  const auto s = in_general_position(simplex_ones());
  CHECK(s.general);
  CHECK_FALSE(s.witness.has_value());
  CHECK(in_general_position_via_eta(simplex_ones()).general);

  const auto c = in_general_position(collinear());
  CHECK_FALSE(c.general);
  CHECK(c.witness == std::vector<std::size_t>{0, 1, 2});
  CHECK_FALSE(in_general_position_via_eta(collinear()).general);
}

TEST_CASE("configuration preconditions") {
  CHECK_THROWS_AS(PointConfiguration(ExactMatrix::from_ints(Z, {{1, 0}, {0, 0}})), Error);
  CHECK_THROWS_AS(PointConfiguration(ExactMatrix::from_ints(Z, {{1}, {2}})), Error);
  CHECK_THROWS_AS(PointConfiguration(symbolic_matrix(3, 2)), Error);
  const PointConfiguration few(ExactMatrix::from_ints(Z, {{1, 0, 0}, {0, 1, 0}}));
  try {
    (void)in_general_position(few);
    FAIL("expected not_enough_points");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::not_enough_points);
  }
  CHECK_THROWS_AS(in_general_position_via_eta(few), Error);
}

TEST_CASE("verdicts match brute force and each other") {
  const Ring rings[] = {Ring::prime_field(PrimeField(13)), Ring::prime_field(), Z};
  for (const Ring& ring : rings) {
    for (int t = 0; t < 120; ++t) {
      Rng rng(derive_seed(51, {static_cast<std::uint64_t>(ring.kind()), static_cast<std::uint64_t>(t)}));
      const std::size_t n = 1 + static_cast<std::size_t>(t % 3);
      const std::size_t m = n + 1 + static_cast<std::size_t>(t % 4);
      const auto cfg = random_configuration(ring, n, m, t % 3 == 0, rng);
      const auto expected = brute_force_witness(cfg);
      const auto got = in_general_position(cfg);
      CHECK(got.general == !expected.has_value());
      CHECK(got.witness == expected);
      CHECK(in_general_position_via_eta(cfg).general == got.general);
    }
  }
}

TEST_CASE("verdict invariances") {
  const Ring f = Ring::prime_field(PrimeField(101));
  for (int t = 0; t < 60; ++t) {
    Rng rng(derive_seed(52, {static_cast<std::uint64_t>(t)}));
    const std::size_t n = 2;
    const std::size_t m = 4 + static_cast<std::size_t>(t % 3);
    const auto cfg = random_configuration(f, n, m, t % 2 == 0, rng);
    const bool verdict = in_general_position(cfg).general;

    std::vector<std::size_t> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(in_general_position(PointConfiguration(cfg.points().select_rows(perm))).general == verdict);

    ExactMatrix scaled = cfg.points();
    RingValue lambda = f.from_int(1 + t % 100);
    for (std::size_t c = 0; c <= n; ++c) scaled = scaled.with_entry(t % m, c, scaled(t % m, c) * lambda);
    CHECK(in_general_position(PointConfiguration(scaled)).general == verdict);

    const ExactMatrix g = random_unimodular(f, n + 1, rng);
    REQUIRE(det(g) == f.one());
    CHECK(in_general_position(PointConfiguration(cfg.points() * g)).general == verdict);
  }
}

TEST_CASE("genpos document") {
  const auto doc = genpos_to_json(in_general_position(collinear()), collinear());
  CHECK(doc["verdict"] == false);
  CHECK(doc["witness"] == nlohmann::json::array({0, 1, 2}));
  CHECK(doc["method"] == "minors");
  CHECK(doc["n"] == 2);
  CHECK(doc["m"] == 4);
  CHECK(doc["ring"] == "int");
  CHECK_FALSE(genpos_to_json(in_general_position(simplex_ones()), simplex_ones()).contains("witness"));
}

TEST_CASE("bench") {
  BenchOptions empty;
  empty.trials = 0;
  const auto e = bench_genpos(empty);
  CHECK(e.agreements == 0);
  CHECK(bench_to_json(e)["agreement"].is_null());

  BenchOptions o;
  o.n = 2;
  o.d = 6;
  o.trials = 6;
  o.seed = 3;
  const auto r = bench_genpos(o);
  CHECK(r.agreements == o.trials);
  CHECK(r.general_count <= o.trials);
  const auto doc = bench_to_json(r);
  CHECK(doc["eta_order"] == 28);
  CHECK(doc["minor_count"] == 56);
  CHECK(doc["agreement"] == 1.0);
  CHECK(doc.contains("minors_seconds"));
  CHECK(doc.contains("eta_seconds"));
}
