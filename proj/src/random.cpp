#include "mvvd/random.hpp"

namespace mvvd {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30U)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27U)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31U);
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::initializer_list<std::uint64_t> tags) {
  std::uint64_t h = splitmix64(seed);
  for (std::uint64_t t : tags) h = splitmix64(h ^ splitmix64(t + 0x632BE59BD9B4E019ULL));
  return h;
}

RingValue random_value(const Ring& ring, Rng& rng) {
  switch (ring.kind()) {
    case RingKind::integer: {
      std::uniform_int_distribution<long long> dist(-random_entry_bound, random_entry_bound);
      return ring.from_int(dist(rng));
    }
    case RingKind::prime_field: {
      std::uniform_int_distribution<std::uint64_t> dist(0, ring.field().modulus() - 1);
      return RingValue(ModInt{dist(rng), ring.field()});
    }
    case RingKind::polynomial: {
      std::uniform_int_distribution<long long> dist(-random_entry_bound, random_entry_bound);
      const auto& vars = ring.variables();
      RingValue v = ring.from_int(dist(rng));
      for (std::size_t k = 0; k < vars->size(); ++k) {
        v += RingValue(MultiPoly::variable(vars, k).scaled(mpz_class(static_cast<long>(dist(rng)))));
      }
      return v;
    }
  }
  return ring.zero();
}

ExactMatrix random_matrix(const Ring& ring, std::size_t rows, std::size_t cols, Rng& rng) {
  std::vector<RingValue> e;
  e.reserve(rows * cols);
  for (std::size_t i = 0; i < rows * cols; ++i) e.push_back(random_value(ring, rng));
  return ExactMatrix(ring, rows, cols, std::move(e));
}

Ring symbolic_ring(std::size_t rows, std::size_t cols, const std::string& prefix) {
  std::vector<std::string> names;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) names.push_back(prefix + std::to_string(r) + "_" + std::to_string(c));
  }
  return Ring::polynomials(make_variables(std::move(names)));
}

ExactMatrix symbolic_matrix(std::size_t rows, std::size_t cols, const std::string& prefix) {
  Ring ring = symbolic_ring(rows, cols, prefix);
  std::vector<RingValue> e;
  for (std::size_t i = 0; i < rows * cols; ++i) e.emplace_back(MultiPoly::variable(ring.variables(), i));
  return ExactMatrix(ring, rows, cols, std::move(e));
}

}  // namespace mvvd
