#pragma once

#include <span>
#include <string_view>

#include "mvvd/matrix.hpp"

namespace mvvd {

enum class DetAlgorithm { cofactor, berkowitz, bareiss, auto_select };

DetAlgorithm parse_det_algorithm(std::string_view name);
std::string_view to_string(DetAlgorithm algorithm) noexcept;

// Orders above this are refused by the cofactor expansion (its memo table
// grows as 2^order).
inline constexpr std::size_t cofactor_max_order = 20;
// Largest polynomial matrix that auto_select expands by cofactors.
inline constexpr std::size_t auto_cofactor_max_order = 12;

/// Exact determinant of a square matrix.
///
/// - cofactor: Laplace expansion along rows with memoized column-subset
///   minors; division-free, O(order * 2^order) ring products.
/// - berkowitz: division-free characteristic-polynomial recurrence,
///   O(order^4) ring products, valid over any commutative ring.
/// - bareiss: fraction-free elimination, first nonzero pivot scanning down
///   the column. Over Z/p this runs on the dense mod-p kernels.
/// - auto_select: cofactor up to order 4. Above that, polynomial matrices
///   use cofactor up to auto_cofactor_max_order and berkowitz beyond; other
///   rings use bareiss, falling back to berkowitz on an inexact division.
RingValue det(const ExactMatrix& m, DetAlgorithm algorithm = DetAlgorithm::auto_select);

RingValue det_cofactor(const ExactMatrix& m);
RingValue det_berkowitz(const ExactMatrix& m);
RingValue det_bareiss(const ExactMatrix& m);

// Raw minor (no cofactor sign) on strictly increasing index lists of equal length.
RingValue minor(const ExactMatrix& m, std::span<const std::size_t> rows, std::span<const std::size_t> cols,
                DetAlgorithm algorithm = DetAlgorithm::auto_select);

}  // namespace mvvd
