#include "mvvd/genpos.hpp"

#include <algorithm>
#include <chrono>

#include "mvvd/combinatorics.hpp"
#include "mvvd/determinant.hpp"
#include "mvvd/error.hpp"
#include "mvvd/kernels.hpp"
#include "mvvd/vandermonde.hpp"

namespace mvvd {

PointConfiguration::PointConfiguration(ExactMatrix points) : points_(std::move(points)) {
  const auto kind = points_.ring().kind();
  if (kind != RingKind::integer && kind != RingKind::prime_field) {
    throw Error(ErrorCode::unsupported_ring, "point configurations need integer or prime-field coordinates");
  }
  if (points_.rows() == 0) throw Error(ErrorCode::shape_violation, "configuration has no points");
  if (points_.cols() < 2) throw Error(ErrorCode::shape_violation, "points need at least two coordinates");
  for (std::size_t r = 0; r < points_.rows(); ++r) {
    auto row = points_.row(r);
    if (std::all_of(row.begin(), row.end(), [](const RingValue& v) { return v.is_zero(); })) {
      throw Error(ErrorCode::invalid_argument, "row " + std::to_string(r) + " is all zero, not a projective point");
    }
  }
}

namespace {

void require_enough(const PointConfiguration& cfg) {
  if (cfg.size() <= cfg.dimension()) {
    throw Error(ErrorCode::not_enough_points, std::to_string(cfg.size()) + " points in P^" +
                                                  std::to_string(cfg.dimension()) + ", need at least " +
                                                  std::to_string(cfg.dimension() + 1));
  }
}

}  // namespace

GeneralPositionResult in_general_position(const PointConfiguration& cfg) {
  require_enough(cfg);
  const std::size_t n = cfg.dimension();
  const SubsetIndex subsets(cfg.size(), n + 1, SubsetOrder::lex_on_taken);
  std::vector<std::size_t> cols(n + 1);
  for (std::size_t j = 0; j <= n; ++j) cols[j] = j;
  for (std::size_t s = 0; s < subsets.count(); ++s) {
    auto rows = subsets.taken(s);
    if (minor(cfg.points(), rows, cols).is_zero()) return {false, std::move(rows), "minors"};
  }
  return {true, std::nullopt, "minors"};
}

GeneralPositionResult in_general_position_via_eta(const PointConfiguration& cfg) {
  require_enough(cfg);
  const auto d = static_cast<unsigned>(cfg.size() - cfg.dimension());
  const bool general = !det(eta_matrix(cfg.points(), d)).is_zero();
  return {general, std::nullopt, "eta"};
}

nlohmann::json genpos_to_json(const GeneralPositionResult& result, const PointConfiguration& cfg) {
  nlohmann::json doc;
  doc["verdict"] = result.general;
  if (result.witness) doc["witness"] = *result.witness;
  doc["method"] = result.method;
  doc["n"] = cfg.dimension();
  doc["m"] = cfg.size();
  doc["ring"] = std::string(cfg.points().ring().name());
  return doc;
}

PointConfiguration random_configuration(const Ring& ring, std::size_t n, std::size_t m, bool degenerate, Rng& rng) {
  if (n == 0 || m == 0) throw Error(ErrorCode::invalid_argument, "need n >= 1 and m >= 1");
  for (;;) {
    ExactMatrix x = random_matrix(ring, m, n + 1, rng);
    if (degenerate && m > n) {
      // Overwrite one row with a combination of n distinct other rows.
      std::vector<std::size_t> order(m);
      for (std::size_t i = 0; i < m; ++i) order[i] = i;
      std::shuffle(order.begin(), order.end(), rng);
      const std::size_t target = order[0];
      std::vector<RingValue> combo(n + 1, ring.zero());
      for (std::size_t k = 1; k <= n; ++k) {
        RingValue coeff = random_value(ring, rng);
        for (std::size_t c = 0; c <= n; ++c) combo[c] += coeff * x(order[k], c);
      }
      for (std::size_t c = 0; c <= n; ++c) x = x.with_entry(target, c, combo[c]);
    }
    bool has_zero_row = false;
    for (std::size_t r = 0; r < m && !has_zero_row; ++r) {
      auto row = x.row(r);
      has_zero_row = std::all_of(row.begin(), row.end(), [](const RingValue& v) { return v.is_zero(); });
    }
    if (!has_zero_row) return PointConfiguration(std::move(x));
  }
}

BenchReport bench_genpos(const BenchOptions& options) {
  if (options.n == 0 || options.d == 0) throw Error(ErrorCode::invalid_argument, "bench needs n >= 1 and d >= 1");
  BenchReport report{options, 0, 0, 0.0, 0.0, "generic"};
  if (options.ring.kind() == RingKind::prime_field) {
    report.kernel = kernels::select(options.ring.field().modulus()).name;
  } else if (options.ring.kind() == RingKind::integer) {
    report.kernel = "gmp";
  }
  std::vector<PointConfiguration> inputs;
  inputs.reserve(options.trials);
  for (std::size_t t = 0; t < options.trials; ++t) {
    Rng rng(derive_seed(options.seed, {options.n, options.d, t}));
    inputs.push_back(random_configuration(options.ring, options.n, options.n + options.d, t % 2 == 1, rng));
  }
  using clock = std::chrono::steady_clock;
  std::vector<bool> by_minors;
  by_minors.reserve(inputs.size());
  auto start = clock::now();
  for (const auto& cfg : inputs) by_minors.push_back(in_general_position(cfg).general);
  report.minors_seconds = std::chrono::duration<double>(clock::now() - start).count();

  std::vector<bool> by_eta;
  by_eta.reserve(inputs.size());
  start = clock::now();
  for (const auto& cfg : inputs) by_eta.push_back(in_general_position_via_eta(cfg).general);
  report.eta_seconds = std::chrono::duration<double>(clock::now() - start).count();

  for (std::size_t t = 0; t < inputs.size(); ++t) {
    if (by_minors[t] == by_eta[t]) ++report.agreements;
    if (by_minors[t]) ++report.general_count;
  }
  return report;
}

nlohmann::json bench_to_json(const BenchReport& report) {
  const auto& o = report.options;
  nlohmann::json doc;
  doc["n"] = o.n;
  doc["d"] = o.d;
  doc["m"] = o.n + o.d;
  doc["trials"] = o.trials;
  doc["seed"] = o.seed;
  doc["ring"] = std::string(o.ring.name());
  if (o.ring.kind() == RingKind::prime_field) doc["modulus"] = std::to_string(o.ring.field().modulus());
  doc["minor_count"] = binomial(o.n + o.d, o.n + 1);
  doc["eta_order"] = binomial(o.n + o.d, o.n);
  doc["kernel"] = report.kernel;
  doc["general_count"] = report.general_count;
  doc["agreements"] = report.agreements;
  doc["agreement"] = o.trials == 0 ? nlohmann::json(nullptr) : nlohmann::json(double(report.agreements) / double(o.trials));
  doc["minors_seconds"] = report.minors_seconds;
  doc["eta_seconds"] = report.eta_seconds;
  return doc;
}

}  // namespace mvvd
