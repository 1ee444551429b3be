#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <string>

#include "mvvd/matrix.hpp"

namespace mvvd {

using Rng = std::mt19937_64;

// Independent sub-seed for a trial, mixed from a base seed and any number of
// tags (parameters, trial index) with splitmix64. Does not depend on the
// order in which trials run.
std::uint64_t derive_seed(std::uint64_t seed, std::initializer_list<std::uint64_t> tags);

inline constexpr long long random_entry_bound = 9;

// Entries uniform in [-9, 9] over Z, uniform over Z/p, and random affine
// linear forms with coefficients in [-9, 9] over a polynomial ring.
RingValue random_value(const Ring& ring, Rng& rng);
ExactMatrix random_matrix(const Ring& ring, std::size_t rows, std::size_t cols, Rng& rng);

// Polynomial ring on unknowns <prefix><r>_<c>, and the matrix of those unknowns.
Ring symbolic_ring(std::size_t rows, std::size_t cols, const std::string& prefix = "x");
ExactMatrix symbolic_matrix(std::size_t rows, std::size_t cols, const std::string& prefix = "x");

}  // namespace mvvd
