#include "mvvd/error.hpp"

namespace mvvd {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ring_mismatch: return "ring_mismatch";
    case ErrorCode::inexact_division: return "inexact_division";
    case ErrorCode::division_by_zero: return "division_by_zero";
    case ErrorCode::shape_violation: return "shape_violation";
    case ErrorCode::index_out_of_range: return "index_out_of_range";
    case ErrorCode::parse_error: return "parse_error";
    case ErrorCode::io_error: return "io_error";
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::not_prime: return "not_prime";
    case ErrorCode::exponent_overflow: return "exponent_overflow";
    case ErrorCode::symbolic_cap_exceeded: return "symbolic_cap_exceeded";
    case ErrorCode::not_enough_points: return "not_enough_points";
    case ErrorCode::unsupported_ring: return "unsupported_ring";
  }
  return "unknown";
}

}  // namespace mvvd
