#include "mvvd/combinatorics.hpp"

#include <numeric>

#include "mvvd/error.hpp"

namespace mvvd {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > UINT64_MAX) throw Error(ErrorCode::invalid_argument, "binomial coefficient overflows 64 bits");
  }
  return static_cast<std::uint64_t>(r);
}

namespace {

void enumerate(std::size_t vars, unsigned degree, Exponents& prefix, std::vector<Exponents>& out) {
  if (prefix.size() + 1 == vars) {
    prefix.push_back(degree);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (unsigned e = degree + 1; e-- > 0;) {
    prefix.push_back(e);
    enumerate(vars, degree - e, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

MonomialBasis::MonomialBasis(std::size_t variable_count, unsigned degree)
    : vars_(variable_count), degree_(degree) {
  if (vars_ == 0) throw Error(ErrorCode::invalid_argument, "monomial basis needs at least one variable");
  monomials_.reserve(binomial(vars_ - 1 + degree_, degree_));
  Exponents prefix;
  enumerate(vars_, degree_, prefix, monomials_);
}

// Monomials ahead of e: those with a larger first exponent, then recurse on
// the tail within the same first exponent.
std::size_t MonomialBasis::index_of(std::span<const unsigned> e) const {
  if (e.size() != vars_) throw Error(ErrorCode::shape_violation, "exponent vector has wrong length");
  unsigned remaining = degree_;
  if (std::accumulate(e.begin(), e.end(), 0U) != remaining) {
    throw Error(ErrorCode::invalid_argument, "exponent vector has wrong total degree");
  }
  std::size_t rank = 0;
  for (std::size_t v = 0; v + 1 < vars_; ++v) {
    const std::size_t tail_vars = vars_ - v - 1;
    for (unsigned first = remaining; first > e[v]; --first) {
      rank += binomial(remaining - first + tail_vars - 1, tail_vars - 1);
    }
    remaining -= e[v];
  }
  return rank;
}

MonomialBasis monomial_basis(std::size_t n, unsigned d) {
  if (n == 0) throw Error(ErrorCode::invalid_argument, "projective dimension n = 0 is not supported");
  return MonomialBasis(n + 1, d);
}

std::vector<std::size_t> complement(std::span<const std::size_t> subset, std::size_t ground) {
  std::vector<std::size_t> out;
  out.reserve(ground - subset.size());
  std::size_t j = 0;
  for (std::size_t i = 0; i < ground; ++i) {
    if (j < subset.size() && subset[j] == i) {
      ++j;
    } else {
      out.push_back(i);
    }
  }
  return out;
}

namespace {

// k-subset of {0..m-1} at the given rank in lex order of taken lists.
std::vector<std::size_t> unrank_lex(std::size_t m, std::size_t k, std::size_t rank) {
  std::vector<std::size_t> out;
  out.reserve(k);
  std::size_t next = 0;
  for (std::size_t slot = 0; slot < k; ++slot) {
    for (std::size_t candidate = next;; ++candidate) {
      const std::uint64_t block = binomial(m - candidate - 1, k - slot - 1);
      if (rank < block) {
        out.push_back(candidate);
        next = candidate + 1;
        break;
      }
      rank -= block;
    }
  }
  return out;
}

std::size_t rank_lex(std::size_t m, std::span<const std::size_t> subset) {
  const std::size_t k = subset.size();
  std::size_t rank = 0;
  std::size_t next = 0;
  for (std::size_t slot = 0; slot < k; ++slot) {
    for (std::size_t candidate = next; candidate < subset[slot]; ++candidate) {
      rank += binomial(m - candidate - 1, k - slot - 1);
    }
    next = subset[slot] + 1;
  }
  return rank;
}

}  // namespace

SubsetIndex::SubsetIndex(std::size_t ground, std::size_t size, SubsetOrder order)
    : ground_(ground), size_(size), order_(order) {
  if (size_ > ground_) throw Error(ErrorCode::invalid_argument, "subset size exceeds ground set");
  count_ = binomial(ground_, size_);
}

std::vector<std::size_t> SubsetIndex::taken(std::size_t index) const {
  if (index >= count_) throw Error(ErrorCode::index_out_of_range, "subset index out of range");
  if (order_ == SubsetOrder::lex_on_taken) return unrank_lex(ground_, size_, index);
  return complement(unrank_lex(ground_, ground_ - size_, index), ground_);
}

std::vector<std::size_t> SubsetIndex::omitted(std::size_t index) const {
  return complement(taken(index), ground_);
}

std::size_t SubsetIndex::index_of(std::span<const std::size_t> taken) const {
  if (taken.size() != size_) throw Error(ErrorCode::shape_violation, "subset has wrong size");
  for (std::size_t i = 0; i < taken.size(); ++i) {
    if (taken[i] >= ground_ || (i > 0 && taken[i] <= taken[i - 1])) {
      throw Error(ErrorCode::index_out_of_range, "subset must be strictly increasing within the ground set");
    }
  }
  if (order_ == SubsetOrder::lex_on_taken) return rank_lex(ground_, taken);
  auto omitted = complement(taken, ground_);
  return rank_lex(ground_, omitted);
}

}  // namespace mvvd
