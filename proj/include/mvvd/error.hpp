#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mvvd {

// Machine-readable failure category; the CLI prints it verbatim as the reason code.
enum class ErrorCode {
  ring_mismatch,
  inexact_division,
  division_by_zero,
  shape_violation,
  index_out_of_range,
  parse_error,
  io_error,
  invalid_argument,
  not_prime,
  exponent_overflow,
  symbolic_cap_exceeded,
  not_enough_points,
  unsupported_ring,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace mvvd
