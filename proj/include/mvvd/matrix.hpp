#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "mvvd/ring.hpp"

namespace mvvd {

// Immutable dense row-major matrix whose entries all belong to one ring.
class ExactMatrix {
 public:
  ExactMatrix(Ring ring, std::size_t rows, std::size_t cols, std::vector<RingValue> entries);
  // Zero matrix.
  ExactMatrix(Ring ring, std::size_t rows, std::size_t cols);

  static ExactMatrix identity(Ring ring, std::size_t order);
  static ExactMatrix from_ints(Ring ring, std::initializer_list<std::initializer_list<long long>> rows);
  static ExactMatrix from_ints(Ring ring, const std::vector<std::vector<long long>>& rows);

  const Ring& ring() const noexcept { return ring_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  const RingValue& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  const RingValue& at(std::size_t r, std::size_t c) const;
  std::span<const RingValue> row(std::size_t r) const;
  const std::vector<RingValue>& entries() const noexcept { return entries_; }

  ExactMatrix submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const;
  ExactMatrix select_rows(std::span<const std::size_t> rows) const;
  ExactMatrix with_entry(std::size_t r, std::size_t c, RingValue value) const;
  ExactMatrix swap_rows(std::size_t a, std::size_t b) const;
  ExactMatrix scale_column(std::size_t col, const RingValue& alpha) const;
  // Column dst += alpha * column src; src and dst must differ.
  ExactMatrix add_scaled_column(std::size_t src, std::size_t dst, const RingValue& alpha) const;
  ExactMatrix transpose() const;

  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);

  std::string to_string() const;

 private:
  Ring ring_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<RingValue> entries_;
};

}  // namespace mvvd
