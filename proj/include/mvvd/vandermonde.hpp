#pragma once

#include <span>
#include <vector>

#include "mvvd/combinatorics.hpp"
#include "mvvd/determinant.hpp"
#include "mvvd/matrix.hpp"

namespace mvvd {

// Coefficients, in MonomialBasis(variable_count, forms.size()) order, of the
// product of the linear forms sum_k form[k] * Y_k.
std::vector<RingValue> linear_form_product(const Ring& ring, std::size_t variable_count,
                                           std::span<const std::span<const RingValue>> forms);

// Applies the degree-d Veronese map to every row: entry (i, j) is the j-th
// basis monomial evaluated at row i. Needs at least two columns.
ExactMatrix veronese_matrix(const ExactMatrix& x, unsigned d);

// Matrix of order-n minors of an m x (n+1) matrix (m >= n >= 1). Rows follow
// the omitted-row sets in lex order, column j omits column j; raw minors.
ExactMatrix mu_matrix(const ExactMatrix& x, DetAlgorithm algorithm = DetAlgorithm::auto_select);

// Product of all full-width minors of order n+1. Stops at the first zero
// minor. An m x (n+1) matrix with m == n gives the empty product 1.
RingValue mu_prime(const ExactMatrix& x, DetAlgorithm algorithm = DetAlgorithm::auto_select);

// For X of shape (n+d) x (n+1): row s (d-subsets of rows, lex on taken) holds
// the coefficients of the product of the rows in s viewed as linear forms.
ExactMatrix eta_matrix(const ExactMatrix& x, unsigned d);

// Matrix of S^d(u) on the degree-d monomial basis in m = order(u)
// variables; column j expands prod_k (u e_k)^{e_jk}.
ExactMatrix sym_power_matrix(const ExactMatrix& u, unsigned d);

// Rows and columns indexed by d-subsets s, s' (lex on taken); entry (s, s')
// is the product over j in s' of det([row j; rows outside s]).
ExactMatrix pairing_matrix(const ExactMatrix& x, unsigned d,
                           DetAlgorithm algorithm = DetAlgorithm::auto_select);

}  // namespace mvvd
