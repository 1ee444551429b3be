#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mvvd/determinant.hpp"
#include "mvvd/matrix.hpp"

namespace mvvd {

enum class Verdict { equal, equal_up_to_sign, unequal };

std::string_view to_string(Verdict verdict) noexcept;

struct NamedCheck {
  std::string name;
  bool passed;
};

/// Outcome of one identity check. For sign-tolerant identities a nonzero
/// pair with lhs == +-rhs gets verdict equal_up_to_sign and the sign is
/// recorded; two zero sides are plain `equal` with no sign.
struct VerificationReport {
  std::string identity;
  std::size_t n;
  std::size_t d;
  std::string ring;
  RingValue lhs;
  RingValue rhs;
  Verdict verdict;
  std::optional<int> sign;
  std::optional<std::uint64_t> seed;
  std::vector<NamedCheck> checks;

  // Verdict agrees with the stored sides and sub-checks.
  bool consistent() const;
};

VerificationReport make_report(std::string identity, std::size_t n, std::size_t d, RingValue lhs,
                               RingValue rhs, bool up_to_sign);

struct VerifyOptions {
  DetAlgorithm algorithm = DetAlgorithm::auto_select;
};

// Both sides of det(nu^d mu X) = (mu' X)^n.
RingValue hdv_lhs(const ExactMatrix& x, const VerifyOptions& options = {});
RingValue hdv_rhs(const ExactMatrix& x, const VerifyOptions& options = {});

// X of shape (n+d) x (n+1), n >= 1, d >= 0.
VerificationReport verify_hdv(const ExactMatrix& x, const VerifyOptions& options = {});

// det(eta^d X) against mu' X, up to sign.
VerificationReport verify_dual(const ExactMatrix& x, const VerifyOptions& options = {});

// Column operations: (a) column dst += alpha * column src leaves both sides
// unchanged; (b) scaling column src by alpha multiplies both sides by
// alpha^(n * C(n+d, n+1)). lhs/rhs hold the sides for the unmodified X.
VerificationReport verify_column_lemma(const ExactMatrix& x, const RingValue& alpha, std::size_t src,
                                       std::size_t dst, const VerifyOptions& options = {});

// det S^d(u) against (det u)^C(m+d-1, m).
VerificationReport verify_sym_power(const ExactMatrix& u, unsigned d, const VerifyOptions& options = {});

// det(pairing matrix) against (mu' X)^(n+1) up to sign, with a "diagonal" check.
VerificationReport verify_pairing(const ExactMatrix& x, const VerifyOptions& options = {});

// det(nu^d X) against mu' X for X of shape C(n+d, n) x (n+1). Expected to
// fail for n >= 2 on generic input; holds for n = 1.
VerificationReport naive_comparison(const ExactMatrix& x, unsigned d, const VerifyOptions& options = {});
VerificationReport demo_naive_failure(std::size_t n, unsigned d, std::uint64_t seed,
                                      const VerifyOptions& options = {});

// det [x_i^j] against prod_{i<j} (x_j - x_i).
VerificationReport verify_affine_vandermonde(std::span<const RingValue> points,
                                             const VerifyOptions& options = {});
// det(nu^d X) against prod_{i<j} (X_i Y_j - X_j Y_i) for X of shape (d+1) x 2.
VerificationReport verify_projective_vandermonde(const ExactMatrix& x, const VerifyOptions& options = {});

// Lemma exponent n * C(n+d, n+1) and corollary exponent C(m+d-1, m).
std::uint64_t lemma_exponent(std::size_t n, unsigned d);
std::uint64_t sym_power_exponent(std::size_t m, unsigned d);

}  // namespace mvvd
