#include "mvvd/determinant.hpp"

#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include "mvvd/error.hpp"
#include "mvvd/kernels.hpp"

namespace mvvd {

DetAlgorithm parse_det_algorithm(std::string_view name) {
  if (name == "cofactor") return DetAlgorithm::cofactor;
  if (name == "berkowitz") return DetAlgorithm::berkowitz;
  if (name == "bareiss") return DetAlgorithm::bareiss;
  if (name == "auto") return DetAlgorithm::auto_select;
  throw Error(ErrorCode::invalid_argument, "unknown determinant algorithm '" + std::string(name) + "'");
}

std::string_view to_string(DetAlgorithm algorithm) noexcept {
  switch (algorithm) {
    case DetAlgorithm::cofactor: return "cofactor";
    case DetAlgorithm::berkowitz: return "berkowitz";
    case DetAlgorithm::bareiss: return "bareiss";
    case DetAlgorithm::auto_select: return "auto";
  }
  return "?";
}

namespace {

void require_square(const ExactMatrix& m) {
  if (!m.is_square()) {
    throw Error(ErrorCode::shape_violation, "determinant of non-square " + std::to_string(m.rows()) + "x" +
                                                std::to_string(m.cols()) + " matrix");
  }
}

RingValue bareiss_integer(const ExactMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<mpz_class> a;
  a.reserve(n * n);
  for (const auto& e : m.entries()) a.push_back(e.as_integer());
  mpz_class prev = 1;
  mpz_class tmp;
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k * n + k] == 0) {
      std::size_t i = k + 1;
      while (i < n && a[i * n + k] == 0) ++i;
      if (i == n) return RingValue(mpz_class(0));
      for (std::size_t j = k; j < n; ++j) std::swap(a[k * n + j], a[i * n + j]);
      negate = !negate;
    }
    const mpz_class& pivot = a[k * n + k];
    for (std::size_t i = k + 1; i < n; ++i) {
      const mpz_class& factor = a[i * n + k];
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_mul(tmp.get_mpz_t(), a[i * n + j].get_mpz_t(), pivot.get_mpz_t());
        mpz_submul(tmp.get_mpz_t(), factor.get_mpz_t(), a[k * n + j].get_mpz_t());
        if (k == 0) {
          a[i * n + j].swap(tmp);
        } else {
          mpz_divexact(a[i * n + j].get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
        }
      }
      a[i * n + k] = 0;
    }
    prev = pivot;
  }
  mpz_class d = n == 0 ? mpz_class(1) : a[n * n - 1];
  if (negate) d = -d;
  return RingValue(std::move(d));
}

RingValue bareiss_modp(const ExactMatrix& m) {
  const std::size_t n = m.rows();
  const PrimeField& field = m.ring().field();
  std::vector<std::uint64_t> a;
  a.reserve(n * n);
  for (const auto& e : m.entries()) a.push_back(e.as_mod().value);
  const std::uint64_t d = kernels::det_modp(a, n, field.modulus(), kernels::select(field.modulus()));
  return RingValue(ModInt{d, field});
}

RingValue bareiss_generic(const ExactMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<RingValue> a = m.entries();
  const Ring& ring = m.ring();
  if (n == 0) return ring.one();
  RingValue prev = ring.one();
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k * n + k].is_zero()) {
      std::size_t i = k + 1;
      while (i < n && a[i * n + k].is_zero()) ++i;
      if (i == n) return ring.zero();
      for (std::size_t j = k; j < n; ++j) std::swap(a[k * n + j], a[i * n + j]);
      negate = !negate;
    }
    const RingValue pivot = a[k * n + k];
    for (std::size_t i = k + 1; i < n; ++i) {
      const RingValue factor = a[i * n + k];
      for (std::size_t j = k + 1; j < n; ++j) {
        RingValue num = a[i * n + j] * pivot;
        if (!factor.is_zero() && !a[k * n + j].is_zero()) num -= factor * a[k * n + j];
        a[i * n + j] = k == 0 ? std::move(num) : num.exact_div(prev);
      }
      a[i * n + k] = ring.zero();
    }
    prev = pivot;
  }
  RingValue d = a[n * n - 1];
  return negate ? -d : d;
}

}  // namespace

RingValue det_bareiss(const ExactMatrix& m) {
  require_square(m);
  switch (m.ring().kind()) {
    case RingKind::integer: return bareiss_integer(m);
    case RingKind::prime_field: return bareiss_modp(m);
    case RingKind::polynomial: return bareiss_generic(m);
  }
  throw Error(ErrorCode::unsupported_ring, "unknown ring");
}

RingValue det_cofactor(const ExactMatrix& m) {
  require_square(m);
  const std::size_t n = m.rows();
  if (n > cofactor_max_order) {
    throw Error(ErrorCode::invalid_argument,
                "cofactor expansion limited to order " + std::to_string(cofactor_max_order));
  }
  if (n == 0) return m.ring().one();
  // minors[mask]: determinant of the trailing popcount(mask) rows restricted
  // to the columns in mask. Subsets only depend on smaller masks.
  std::vector<std::optional<RingValue>> minors(std::size_t{1} << n);
  minors[0] = m.ring().one();
  for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
    const std::size_t row = n - static_cast<std::size_t>(std::popcount(mask));
    std::optional<RingValue> sum;
    unsigned position = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if ((mask & (1U << c)) == 0) continue;
      const RingValue& entry = m(row, c);
      const auto& rest = minors[mask & ~(1U << c)];
      if (!entry.is_zero() && rest && !rest->is_zero()) {
        RingValue term = entry * *rest;
        if (position % 2 == 1) term = -term;
        sum = sum ? *sum + term : term;
      }
      ++position;
    }
    // Zero minors are left empty and read back as zero.
    if (sum && !sum->is_zero()) minors[mask] = std::move(sum);
  }
  const auto& full = minors[(std::size_t{1} << n) - 1];
  return full ? *full : m.ring().zero();
}

// Berkowitz: grow the characteristic polynomial from the bottom-right 1x1
// block upwards. For the block with leading entry a, row R, column S and
// trailing block M (of order k), the new coefficient vector is the Toeplitz
// product of [1, -a, -RS, -RMS, ..., -R M^{k-1} S] with the old one.
RingValue det_berkowitz(const ExactMatrix& m) {
  require_square(m);
  const std::size_t n = m.rows();
  const Ring& ring = m.ring();
  if (n == 0) return ring.one();
  std::vector<RingValue> charpoly{ring.one()};
  for (std::size_t top = n; top-- > 0;) {
    const std::size_t k = n - 1 - top;
    std::vector<RingValue> column;
    column.reserve(k + 2);
    column.push_back(ring.one());
    column.push_back(-m(top, top));
    std::vector<RingValue> v;
    v.reserve(k);
    for (std::size_t i = top + 1; i < n; ++i) v.push_back(m(i, top));
    for (std::size_t power = 0; power < k; ++power) {
      RingValue dot = ring.zero();
      for (std::size_t j = 0; j < k; ++j) {
        if (!v[j].is_zero() && !m(top, top + 1 + j).is_zero()) dot += m(top, top + 1 + j) * v[j];
      }
      column.push_back(-dot);
      if (power + 1 < k) {
        std::vector<RingValue> next;
        next.reserve(k);
        for (std::size_t i = 0; i < k; ++i) {
          RingValue s = ring.zero();
          for (std::size_t j = 0; j < k; ++j) {
            if (!v[j].is_zero() && !m(top + 1 + i, top + 1 + j).is_zero()) s += m(top + 1 + i, top + 1 + j) * v[j];
          }
          next.push_back(std::move(s));
        }
        v = std::move(next);
      }
    }
    std::vector<RingValue> updated;
    updated.reserve(k + 2);
    for (std::size_t j = 0; j < k + 2; ++j) {
      RingValue s = ring.zero();
      for (std::size_t l = 0; l <= std::min(j, k); ++l) {
        if (!column[j - l].is_zero() && !charpoly[l].is_zero()) s += column[j - l] * charpoly[l];
      }
      updated.push_back(std::move(s));
    }
    charpoly = std::move(updated);
  }
  RingValue constant = charpoly[n];
  return n % 2 == 1 ? -constant : constant;
}

RingValue det(const ExactMatrix& m, DetAlgorithm algorithm) {
  switch (algorithm) {
    case DetAlgorithm::cofactor: return det_cofactor(m);
    case DetAlgorithm::berkowitz: return det_berkowitz(m);
    case DetAlgorithm::bareiss: return det_bareiss(m);
    case DetAlgorithm::auto_select:
      require_square(m);
      if (m.rows() <= 4) return det_cofactor(m);
      // Polynomial quotients are expensive; memoized expansion shares minors instead.
      if (m.ring().kind() == RingKind::polynomial) {
        return m.rows() <= auto_cofactor_max_order ? det_cofactor(m) : det_berkowitz(m);
      }
      try {
        return det_bareiss(m);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::inexact_division) throw;
        return det_berkowitz(m);
      }
  }
  throw Error(ErrorCode::invalid_argument, "unknown determinant algorithm");
}

RingValue minor(const ExactMatrix& m, std::span<const std::size_t> rows, std::span<const std::size_t> cols,
                DetAlgorithm algorithm) {
  if (rows.size() != cols.size()) throw Error(ErrorCode::shape_violation, "minor needs equally many rows and columns");
  auto check = [](std::span<const std::size_t> idx, std::size_t bound, const char* what) {
    for (std::size_t i = 0; i < idx.size(); ++i) {
      if (idx[i] >= bound || (i > 0 && idx[i] <= idx[i - 1])) {
        throw Error(ErrorCode::index_out_of_range,
                    std::string(what) + " indices must be strictly increasing and in range");
      }
    }
  };
  check(rows, m.rows(), "row");
  check(cols, m.cols(), "column");
  return det(m.submatrix(rows, cols), algorithm);
}

}  // namespace mvvd
