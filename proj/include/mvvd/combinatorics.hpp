#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace mvvd {

// Binomial coefficient; throws invalid_argument if the result exceeds 64 bits.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

using Exponents = std::vector<unsigned>;

/// Exponent vectors of total degree d in `variable_count` variables, in
/// descending lexicographic order: (d,0,...,0) first, (0,...,0,d) last.
class MonomialBasis {
 public:
  MonomialBasis(std::size_t variable_count, unsigned degree);

  std::size_t variable_count() const noexcept { return vars_; }
  // Projective dimension n = variable_count - 1.
  std::size_t dimension() const noexcept { return vars_ - 1; }
  unsigned degree() const noexcept { return degree_; }
  std::size_t size() const noexcept { return monomials_.size(); }
  const Exponents& operator[](std::size_t i) const { return monomials_[i]; }
  const std::vector<Exponents>& monomials() const noexcept { return monomials_; }

  // Position of an exponent vector in the basis, computed by ranking rather
  // than search.
  std::size_t index_of(std::span<const unsigned> exponents) const;

 private:
  std::size_t vars_;
  unsigned degree_;
  std::vector<Exponents> monomials_;
};

// Basis for projective dimension n >= 1 (n + 1 variables).
MonomialBasis monomial_basis(std::size_t n, unsigned d);

enum class SubsetOrder { lex_on_omitted, lex_on_taken };

/// All k-element subsets of {0, ..., m-1}, each reported as its increasing
/// list of taken indices. lex_on_taken sorts by that list; lex_on_omitted
/// sorts by the increasing list of omitted indices instead.
class SubsetIndex {
 public:
  SubsetIndex(std::size_t ground, std::size_t size, SubsetOrder order);

  std::size_t ground() const noexcept { return ground_; }
  std::size_t subset_size() const noexcept { return size_; }
  SubsetOrder order() const noexcept { return order_; }
  std::size_t count() const noexcept { return count_; }

  std::vector<std::size_t> taken(std::size_t index) const;
  std::vector<std::size_t> omitted(std::size_t index) const;
  std::size_t index_of(std::span<const std::size_t> taken) const;

 private:
  std::size_t ground_;
  std::size_t size_;
  SubsetOrder order_;
  std::size_t count_;
};

std::vector<std::size_t> complement(std::span<const std::size_t> subset, std::size_t ground);

}  // namespace mvvd
