#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mvvd/matrix.hpp"
#include "mvvd/random.hpp"

namespace mvvd {

// m points of projective n-space as the rows of an m x (n+1) matrix over Z
// or Z/p. Construction rejects all-zero rows and empty configurations.
class PointConfiguration {
 public:
  explicit PointConfiguration(ExactMatrix points);

  const ExactMatrix& points() const noexcept { return points_; }
  std::size_t dimension() const noexcept { return points_.cols() - 1; }
  std::size_t size() const noexcept { return points_.rows(); }

 private:
  ExactMatrix points_;
};

struct GeneralPositionResult {
  bool general = false;
  // Lex-least row subset (lex on taken) whose (n+1)-minor vanishes.
  std::optional<std::vector<std::size_t>> witness;
  std::string method;
};

// Checks every (n+1)-subset of points, stopping at the first vanishing minor.
// Throws not_enough_points when m <= n.
GeneralPositionResult in_general_position(const PointConfiguration& cfg);

// Single determinant: det(eta^(m-n) X) != 0.
GeneralPositionResult in_general_position_via_eta(const PointConfiguration& cfg);

nlohmann::json genpos_to_json(const GeneralPositionResult& result, const PointConfiguration& cfg);

// Random configuration of m points in P^n. With `degenerate`, one point is
// replaced by a combination of n others so the configuration is not in
// general position; all-zero rows are redrawn.
PointConfiguration random_configuration(const Ring& ring, std::size_t n, std::size_t m, bool degenerate, Rng& rng);

struct BenchOptions {
  std::size_t n = 2;
  unsigned d = 2;
  std::size_t trials = 10;
  std::uint64_t seed = 0;
  Ring ring = Ring::prime_field();
};

struct BenchReport {
  BenchOptions options;
  std::size_t agreements = 0;
  std::size_t general_count = 0;
  double minors_seconds = 0.0;
  double eta_seconds = 0.0;
  std::string kernel;
};

// Times the minor-product route against the single eta determinant on
// identical seeded inputs. Every other trial plants a degeneracy so both
// verdicts are exercised.
BenchReport bench_genpos(const BenchOptions& options);
nlohmann::json bench_to_json(const BenchReport& report);

}  // namespace mvvd
