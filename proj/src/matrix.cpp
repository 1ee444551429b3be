#include "mvvd/matrix.hpp"

#include "mvvd/error.hpp"

namespace mvvd {

namespace {

void check_index(std::size_t i, std::size_t bound, const char* what) {
  if (i >= bound) {
    throw Error(ErrorCode::index_out_of_range,
                std::string(what) + " index " + std::to_string(i) + " out of range " + std::to_string(bound));
  }
}

}  // namespace

ExactMatrix::ExactMatrix(Ring ring, std::size_t rows, std::size_t cols, std::vector<RingValue> entries)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw Error(ErrorCode::shape_violation, "matrix has " + std::to_string(entries_.size()) +
                                                " entries, expected " + std::to_string(rows_ * cols_));
  }
  for (const auto& e : entries_) {
    if (!(e.ring() == ring_)) throw Error(ErrorCode::ring_mismatch, "matrix entry outside the matrix ring");
  }
}

ExactMatrix::ExactMatrix(Ring ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(rows * cols, ring_.zero()) {}

ExactMatrix ExactMatrix::identity(Ring ring, std::size_t order) {
  std::vector<RingValue> e(order * order, ring.zero());
  for (std::size_t i = 0; i < order; ++i) e[i * order + i] = ring.one();
  return ExactMatrix(std::move(ring), order, order, std::move(e));
}

ExactMatrix ExactMatrix::from_ints(Ring ring, std::initializer_list<std::initializer_list<long long>> rows) {
  std::vector<std::vector<long long>> v;
  for (const auto& r : rows) v.emplace_back(r);
  return from_ints(std::move(ring), v);
}

ExactMatrix ExactMatrix::from_ints(Ring ring, const std::vector<std::vector<long long>>& rows) {
  const std::size_t m = rows.size();
  const std::size_t c = m == 0 ? 0 : rows.front().size();
  std::vector<RingValue> e;
  e.reserve(m * c);
  for (const auto& r : rows) {
    if (r.size() != c) throw Error(ErrorCode::shape_violation, "ragged rows");
    for (long long x : r) e.push_back(ring.from_int(x));
  }
  return ExactMatrix(std::move(ring), m, c, std::move(e));
}

const RingValue& ExactMatrix::at(std::size_t r, std::size_t c) const {
  check_index(r, rows_, "row");
  check_index(c, cols_, "column");
  return (*this)(r, c);
}

std::span<const RingValue> ExactMatrix::row(std::size_t r) const {
  check_index(r, rows_, "row");
  return {entries_.data() + r * cols_, cols_};
}

ExactMatrix ExactMatrix::submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const {
  std::vector<RingValue> e;
  e.reserve(rows.size() * cols.size());
  for (std::size_t r : rows) {
    check_index(r, rows_, "row");
    for (std::size_t c : cols) {
      check_index(c, cols_, "column");
      e.push_back((*this)(r, c));
    }
  }
  return ExactMatrix(ring_, rows.size(), cols.size(), std::move(e));
}

ExactMatrix ExactMatrix::select_rows(std::span<const std::size_t> rows) const {
  std::vector<RingValue> e;
  e.reserve(rows.size() * cols_);
  for (std::size_t r : rows) {
    check_index(r, rows_, "row");
    e.insert(e.end(), entries_.begin() + static_cast<long>(r * cols_),
             entries_.begin() + static_cast<long>((r + 1) * cols_));
  }
  return ExactMatrix(ring_, rows.size(), cols_, std::move(e));
}

ExactMatrix ExactMatrix::with_entry(std::size_t r, std::size_t c, RingValue value) const {
  check_index(r, rows_, "row");
  check_index(c, cols_, "column");
  if (!(value.ring() == ring_)) throw Error(ErrorCode::ring_mismatch, "entry outside the matrix ring");
  ExactMatrix out = *this;
  out.entries_[r * cols_ + c] = std::move(value);
  return out;
}

ExactMatrix ExactMatrix::swap_rows(std::size_t a, std::size_t b) const {
  check_index(a, rows_, "row");
  check_index(b, rows_, "row");
  ExactMatrix out = *this;
  for (std::size_t c = 0; c < cols_; ++c) std::swap(out.entries_[a * cols_ + c], out.entries_[b * cols_ + c]);
  return out;
}

ExactMatrix ExactMatrix::scale_column(std::size_t col, const RingValue& alpha) const {
  check_index(col, cols_, "column");
  ExactMatrix out = *this;
  for (std::size_t r = 0; r < rows_; ++r) out.entries_[r * cols_ + col] = (*this)(r, col) * alpha;
  return out;
}

ExactMatrix ExactMatrix::add_scaled_column(std::size_t src, std::size_t dst, const RingValue& alpha) const {
  check_index(src, cols_, "column");
  check_index(dst, cols_, "column");
  if (src == dst) throw Error(ErrorCode::invalid_argument, "source and destination columns coincide");
  ExactMatrix out = *this;
  for (std::size_t r = 0; r < rows_; ++r) {
    out.entries_[r * cols_ + dst] = (*this)(r, dst) + (*this)(r, src) * alpha;
  }
  return out;
}

ExactMatrix ExactMatrix::transpose() const {
  std::vector<RingValue> e;
  e.reserve(entries_.size());
  for (std::size_t c = 0; c < cols_; ++c) {
    for (std::size_t r = 0; r < rows_; ++r) e.push_back((*this)(r, c));
  }
  return ExactMatrix(ring_, cols_, rows_, std::move(e));
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (!(a.ring_ == b.ring_)) throw Error(ErrorCode::ring_mismatch, "matrix product across rings");
  if (a.cols_ != b.rows_) throw Error(ErrorCode::shape_violation, "matrix product shape mismatch");
  std::vector<RingValue> e;
  e.reserve(a.rows_ * b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < b.cols_; ++j) {
      RingValue s = a.ring_.zero();
      for (std::size_t k = 0; k < a.cols_; ++k) s += a(i, k) * b(k, j);
      e.push_back(std::move(s));
    }
  }
  return ExactMatrix(a.ring_, a.rows_, b.cols_, std::move(e));
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
  return a.ring_ == b.ring_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

std::string ExactMatrix::to_string() const {
  std::string out = "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    out += r == 0 ? "[" : ", [";
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c != 0) out += ", ";
      out += (*this)(r, c).to_string();
    }
    out += "]";
  }
  return out + "]";
}

}  // namespace mvvd
