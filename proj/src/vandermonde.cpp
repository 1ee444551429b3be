#include "mvvd/vandermonde.hpp"

#include "mvvd/error.hpp"

namespace mvvd {

namespace {

std::string shape(const ExactMatrix& x) { return std::to_string(x.rows()) + "x" + std::to_string(x.cols()); }

void require_projective(const ExactMatrix& x, const char* what) {
  if (x.cols() < 2) {
    throw Error(ErrorCode::shape_violation,
                std::string(what) + " needs at least two columns, got " + shape(x));
  }
}

// Shape (n+d) x (n+1) with n = cols - 1 >= 1.
void require_configuration(const ExactMatrix& x, unsigned d, const char* what) {
  require_projective(x, what);
  const std::size_t n = x.cols() - 1;
  if (x.rows() != n + d) {
    throw Error(ErrorCode::shape_violation, std::string(what) + " needs " + std::to_string(n + d) +
                                                " rows for n=" + std::to_string(n) + ", d=" + std::to_string(d) +
                                                ", got " + shape(x));
  }
}

}  // namespace

std::vector<RingValue> linear_form_product(const Ring& ring, std::size_t variable_count,
                                           std::span<const std::span<const RingValue>> forms) {
  std::vector<RingValue> coeffs{ring.one()};
  for (std::size_t f = 0; f < forms.size(); ++f) {
    if (forms[f].size() != variable_count) throw Error(ErrorCode::shape_violation, "linear form has wrong length");
    const MonomialBasis from(variable_count, static_cast<unsigned>(f));
    const MonomialBasis to(variable_count, static_cast<unsigned>(f + 1));
    std::vector<RingValue> next(to.size(), ring.zero());
    for (std::size_t i = 0; i < from.size(); ++i) {
      if (coeffs[i].is_zero()) continue;
      Exponents e = from[i];
      for (std::size_t v = 0; v < variable_count; ++v) {
        if (forms[f][v].is_zero()) continue;
        ++e[v];
        next[to.index_of(e)] += coeffs[i] * forms[f][v];
        --e[v];
      }
    }
    coeffs = std::move(next);
  }
  return coeffs;
}

ExactMatrix veronese_matrix(const ExactMatrix& x, unsigned d) {
  require_projective(x, "veronese_matrix");
  const MonomialBasis basis(x.cols(), d);
  const Ring& ring = x.ring();
  std::vector<RingValue> out;
  out.reserve(x.rows() * basis.size());
  for (std::size_t r = 0; r < x.rows(); ++r) {
    // powers[k][e] = x(r, k)^e
    std::vector<std::vector<RingValue>> powers(x.cols());
    for (std::size_t k = 0; k < x.cols(); ++k) {
      powers[k].push_back(ring.one());
      for (unsigned e = 1; e <= d; ++e) powers[k].push_back(powers[k].back() * x(r, k));
    }
    for (const auto& mono : basis.monomials()) {
      RingValue value = ring.one();
      for (std::size_t k = 0; k < x.cols(); ++k) {
        if (mono[k] != 0) value *= powers[k][mono[k]];
      }
      out.push_back(std::move(value));
    }
  }
  return ExactMatrix(ring, x.rows(), basis.size(), std::move(out));
}

ExactMatrix mu_matrix(const ExactMatrix& x, DetAlgorithm algorithm) {
  require_projective(x, "mu_matrix");
  const std::size_t n = x.cols() - 1;
  if (x.rows() < n) {
    throw Error(ErrorCode::shape_violation, "mu_matrix needs at least n=" + std::to_string(n) + " rows, got " + shape(x));
  }
  const SubsetIndex row_sets(x.rows(), n, SubsetOrder::lex_on_omitted);
  std::vector<std::vector<std::size_t>> column_sets;
  for (std::size_t j = 0; j <= n; ++j) {
    std::vector<std::size_t> omit{j};
    column_sets.push_back(complement(omit, n + 1));
  }
  std::vector<RingValue> out;
  out.reserve(row_sets.count() * (n + 1));
  for (std::size_t s = 0; s < row_sets.count(); ++s) {
    const auto rows = row_sets.taken(s);
    for (const auto& cols : column_sets) out.push_back(minor(x, rows, cols, algorithm));
  }
  return ExactMatrix(x.ring(), row_sets.count(), n + 1, std::move(out));
}

RingValue mu_prime(const ExactMatrix& x, DetAlgorithm algorithm) {
  require_projective(x, "mu_prime");
  const std::size_t n = x.cols() - 1;
  if (x.rows() < n) {
    throw Error(ErrorCode::shape_violation, "mu_prime needs at least n=" + std::to_string(n) + " rows, got " + shape(x));
  }
  if (x.rows() == n) return x.ring().one();
  const SubsetIndex row_sets(x.rows(), n + 1, SubsetOrder::lex_on_taken);
  std::vector<std::size_t> all_cols(n + 1);
  for (std::size_t j = 0; j <= n; ++j) all_cols[j] = j;
  RingValue product = x.ring().one();
  for (std::size_t s = 0; s < row_sets.count(); ++s) {
    RingValue m = minor(x, row_sets.taken(s), all_cols, algorithm);
    if (m.is_zero()) return m;
    product *= m;
  }
  return product;
}

ExactMatrix eta_matrix(const ExactMatrix& x, unsigned d) {
  require_configuration(x, d, "eta_matrix");
  const SubsetIndex choices(x.rows(), d, SubsetOrder::lex_on_taken);
  const std::size_t order = choices.count();
  std::vector<RingValue> out;
  out.reserve(order * order);
  for (std::size_t s = 0; s < order; ++s) {
    std::vector<std::span<const RingValue>> forms;
    for (std::size_t r : choices.taken(s)) forms.push_back(x.row(r));
    auto coeffs = linear_form_product(x.ring(), x.cols(), forms);
    out.insert(out.end(), std::make_move_iterator(coeffs.begin()), std::make_move_iterator(coeffs.end()));
  }
  return ExactMatrix(x.ring(), order, order, std::move(out));
}

ExactMatrix sym_power_matrix(const ExactMatrix& u, unsigned d) {
  if (!u.is_square() || u.rows() == 0) {
    throw Error(ErrorCode::shape_violation, "sym_power_matrix needs a non-empty square matrix, got " + shape(u));
  }
  const std::size_t m = u.rows();
  const MonomialBasis basis(m, d);
  const ExactMatrix columns = u.transpose();
  const std::size_t order = basis.size();
  std::vector<RingValue> out(order * order, u.ring().zero());
  for (std::size_t j = 0; j < order; ++j) {
    std::vector<std::span<const RingValue>> forms;
    for (std::size_t k = 0; k < m; ++k) {
      for (unsigned rep = 0; rep < basis[j][k]; ++rep) forms.push_back(columns.row(k));
    }
    auto coeffs = linear_form_product(u.ring(), m, forms);
    for (std::size_t i = 0; i < order; ++i) out[i * order + j] = std::move(coeffs[i]);
  }
  return ExactMatrix(u.ring(), order, order, std::move(out));
}

ExactMatrix pairing_matrix(const ExactMatrix& x, unsigned d, DetAlgorithm algorithm) {
  require_configuration(x, d, "pairing_matrix");
  const std::size_t rows = x.rows();
  const SubsetIndex choices(rows, d, SubsetOrder::lex_on_taken);
  const std::size_t order = choices.count();
  std::vector<std::vector<std::size_t>> taken;
  std::vector<std::vector<std::size_t>> rest;
  for (std::size_t s = 0; s < order; ++s) {
    taken.push_back(choices.taken(s));
    rest.push_back(complement(taken.back(), rows));
  }
  std::vector<RingValue> out;
  out.reserve(order * order);
  for (std::size_t s = 0; s < order; ++s) {
    for (std::size_t t = 0; t < order; ++t) {
      RingValue product = x.ring().one();
      for (std::size_t j : taken[t]) {
        std::vector<std::size_t> selection{j};
        selection.insert(selection.end(), rest[s].begin(), rest[s].end());
        product *= det(x.select_rows(selection), algorithm);
        if (product.is_zero()) break;
      }
      out.push_back(std::move(product));
    }
  }
  return ExactMatrix(x.ring(), order, order, std::move(out));
}

}  // namespace mvvd
