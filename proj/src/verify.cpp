#include "mvvd/verify.hpp"

#include <algorithm>

#include "mvvd/combinatorics.hpp"
#include "mvvd/error.hpp"
#include "mvvd/random.hpp"
#include "mvvd/vandermonde.hpp"

namespace mvvd {

std::string_view to_string(Verdict verdict) noexcept {
  switch (verdict) {
    case Verdict::equal: return "equal";
    case Verdict::equal_up_to_sign: return "equal_up_to_sign";
    case Verdict::unequal: return "unequal";
  }
  return "?";
}

namespace {

struct Classified {
  Verdict verdict;
  std::optional<int> sign;
};

Classified classify(const RingValue& lhs, const RingValue& rhs, bool up_to_sign) {
  if (!up_to_sign) return {lhs == rhs ? Verdict::equal : Verdict::unequal, std::nullopt};
  if (lhs.is_zero() && rhs.is_zero()) return {Verdict::equal, std::nullopt};
  if (lhs == rhs) return {Verdict::equal_up_to_sign, 1};
  if (lhs == -rhs) return {Verdict::equal_up_to_sign, -1};
  return {Verdict::unequal, std::nullopt};
}

bool sign_tolerant(std::string_view identity) { return identity == "dual" || identity == "abstract"; }

std::size_t dimension_of(const ExactMatrix& x) {
  if (x.cols() < 2) {
    throw Error(ErrorCode::shape_violation, "need at least two columns (n >= 1), got " + std::to_string(x.cols()));
  }
  return x.cols() - 1;
}

unsigned degree_of(const ExactMatrix& x) {
  const std::size_t n = dimension_of(x);
  if (x.rows() < n) {
    throw Error(ErrorCode::shape_violation, "need (n+d) x (n+1) with d >= 0, got " + std::to_string(x.rows()) +
                                                "x" + std::to_string(x.cols()));
  }
  return static_cast<unsigned>(x.rows() - n);
}

}  // namespace

bool VerificationReport::consistent() const {
  auto c = classify(lhs, rhs, sign_tolerant(identity));
  bool checks_pass = std::all_of(checks.begin(), checks.end(), [](const NamedCheck& k) { return k.passed; });
  Verdict expected = checks_pass ? c.verdict : Verdict::unequal;
  return verdict == expected && sign == (checks_pass ? c.sign : std::nullopt);
}

VerificationReport make_report(std::string identity, std::size_t n, std::size_t d, RingValue lhs,
                               RingValue rhs, bool up_to_sign) {
  auto c = classify(lhs, rhs, up_to_sign);
  std::string ring(lhs.ring().name());
  return VerificationReport{std::move(identity), n, d, std::move(ring), std::move(lhs), std::move(rhs),
                            c.verdict, c.sign, std::nullopt, {}};
}

namespace {

void add_check(VerificationReport& report, std::string name, bool passed) {
  report.checks.push_back({std::move(name), passed});
  if (!passed) {
    report.verdict = Verdict::unequal;
    report.sign.reset();
  }
}

}  // namespace

std::uint64_t lemma_exponent(std::size_t n, unsigned d) { return n * binomial(n + d, n + 1); }

std::uint64_t sym_power_exponent(std::size_t m, unsigned d) { return binomial(m + d - 1, m); }

RingValue hdv_lhs(const ExactMatrix& x, const VerifyOptions& options) {
  const unsigned d = degree_of(x);
  return det(veronese_matrix(mu_matrix(x), d), options.algorithm);
}

RingValue hdv_rhs(const ExactMatrix& x, const VerifyOptions& options) {
  const std::size_t n = dimension_of(x);
  return mu_prime(x, options.algorithm).pow(n);
}

VerificationReport verify_hdv(const ExactMatrix& x, const VerifyOptions& options) {
  const std::size_t n = dimension_of(x);
  const unsigned d = degree_of(x);
  return make_report("hdv", n, d, hdv_lhs(x, options), hdv_rhs(x, options), false);
}

VerificationReport verify_dual(const ExactMatrix& x, const VerifyOptions& options) {
  const std::size_t n = dimension_of(x);
  const unsigned d = degree_of(x);
  return make_report("dual", n, d, det(eta_matrix(x, d), options.algorithm), mu_prime(x, options.algorithm), true);
}

VerificationReport verify_column_lemma(const ExactMatrix& x, const RingValue& alpha, std::size_t src,
                                       std::size_t dst, const VerifyOptions& options) {
  const std::size_t n = dimension_of(x);
  const unsigned d = degree_of(x);
  if (!(alpha.ring() == x.ring())) throw Error(ErrorCode::ring_mismatch, "scalar outside the matrix ring");
  if (src >= x.cols() || dst >= x.cols()) throw Error(ErrorCode::index_out_of_range, "column index out of range");
  const RingValue lhs = hdv_lhs(x, options);
  const RingValue rhs = hdv_rhs(x, options);
  VerificationReport report = make_report("lemma", n, d, lhs, rhs, false);

  const ExactMatrix added = x.add_scaled_column(src, dst, alpha);
  add_check(report, "add_column_lhs_unchanged", hdv_lhs(added, options) == lhs);
  add_check(report, "add_column_rhs_unchanged", hdv_rhs(added, options) == rhs);

  const ExactMatrix scaled = x.scale_column(src, alpha);
  const RingValue factor = alpha.pow(lemma_exponent(n, d));
  add_check(report, "scale_column_lhs", hdv_lhs(scaled, options) == lhs * factor);
  add_check(report, "scale_column_rhs", hdv_rhs(scaled, options) == rhs * factor);
  return report;
}

VerificationReport verify_sym_power(const ExactMatrix& u, unsigned d, const VerifyOptions& options) {
  if (!u.is_square() || u.rows() == 0) {
    throw Error(ErrorCode::shape_violation, "symmetric power needs a non-empty square matrix");
  }
  const std::size_t m = u.rows();
  RingValue lhs = det(sym_power_matrix(u, d), options.algorithm);
  RingValue rhs = det(u, options.algorithm).pow(sym_power_exponent(m, d));
  // n records the rank m of the underlying module.
  return make_report("sym", m, d, std::move(lhs), std::move(rhs), false);
}

VerificationReport verify_pairing(const ExactMatrix& x, const VerifyOptions& options) {
  const std::size_t n = dimension_of(x);
  const unsigned d = degree_of(x);
  const ExactMatrix pairing = pairing_matrix(x, d, options.algorithm);
  bool diagonal = true;
  for (std::size_t i = 0; i < pairing.rows() && diagonal; ++i) {
    for (std::size_t j = 0; j < pairing.cols(); ++j) {
      if (i != j && !pairing(i, j).is_zero()) {
        diagonal = false;
        break;
      }
    }
  }
  RingValue lhs = det(pairing, options.algorithm);
  RingValue rhs = mu_prime(x, options.algorithm).pow(n + 1);
  VerificationReport report = make_report("abstract", n, d, std::move(lhs), std::move(rhs), true);
  add_check(report, "diagonal", diagonal);
  return report;
}

VerificationReport naive_comparison(const ExactMatrix& x, unsigned d, const VerifyOptions& options) {
  const std::size_t n = dimension_of(x);
  const std::uint64_t rows = binomial(n + d, n);
  if (x.rows() != rows) {
    throw Error(ErrorCode::shape_violation, "naive identity needs C(n+d,n)=" + std::to_string(rows) + " rows, got " +
                                                std::to_string(x.rows()));
  }
  return make_report("naive", n, d, det(veronese_matrix(x, d), options.algorithm), mu_prime(x, options.algorithm),
                     false);
}

VerificationReport demo_naive_failure(std::size_t n, unsigned d, std::uint64_t seed, const VerifyOptions& options) {
  if (n == 0) throw Error(ErrorCode::invalid_argument, "n must be at least 1");
  Rng rng(derive_seed(seed, {n, d}));
  const ExactMatrix x = random_matrix(Ring::integers(), binomial(n + d, n), n + 1, rng);
  VerificationReport report = naive_comparison(x, d, options);
  report.seed = seed;
  return report;
}

VerificationReport verify_affine_vandermonde(std::span<const RingValue> points, const VerifyOptions& options) {
  if (points.empty()) throw Error(ErrorCode::invalid_argument, "need at least one point");
  const Ring ring = points.front().ring();
  const std::size_t k = points.size();
  std::vector<RingValue> entries;
  entries.reserve(k * k);
  for (const auto& x : points) {
    RingValue power = ring.one();
    for (std::size_t j = 0; j < k; ++j) {
      entries.push_back(power);
      power *= x;
    }
  }
  RingValue lhs = det(ExactMatrix(ring, k, k, std::move(entries)), options.algorithm);
  RingValue rhs = ring.one();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) rhs *= points[j] - points[i];
  }
  return make_report("affine", 1, k - 1, std::move(lhs), std::move(rhs), false);
}

VerificationReport verify_projective_vandermonde(const ExactMatrix& x, const VerifyOptions& options) {
  if (x.cols() != 2 || x.rows() == 0) throw Error(ErrorCode::shape_violation, "projective Vandermonde needs (d+1) x 2");
  const unsigned d = static_cast<unsigned>(x.rows() - 1);
  RingValue lhs = det(veronese_matrix(x, d), options.algorithm);
  RingValue rhs = x.ring().one();
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (std::size_t j = i + 1; j < x.rows(); ++j) rhs *= x(i, 0) * x(j, 1) - x(j, 0) * x(i, 1);
  }
  return make_report("projective", 1, d, std::move(lhs), std::move(rhs), false);
}

}  // namespace mvvd
