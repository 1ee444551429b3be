#include "mvvd/acceptance.hpp"

#include <chrono>
#include <cstdio>
#include <map>
#include <sstream>
#include <utility>

#include "mvvd/combinatorics.hpp"
#include "mvvd/determinant.hpp"
#include "mvvd/error.hpp"
#include "mvvd/genpos.hpp"
#include "mvvd/random.hpp"
#include "mvvd/vandermonde.hpp"
#include "mvvd/verify.hpp"

namespace mvvd {

namespace {

using Clock = std::chrono::steady_clock;

struct Grid {
  std::size_t n;
  unsigned d;
};

// 1 <= n <= 4, 1 <= d <= 4, C(n+d, n) <= 35.
std::vector<Grid> numeric_grid() {
  std::vector<Grid> grid;
  for (std::size_t n = 1; n <= 4; ++n) {
    for (unsigned d = 1; d <= 4; ++d) {
      if (binomial(n + d, n) <= 35) grid.push_back({n, d});
    }
  }
  return grid;
}

std::string label(std::size_t n, unsigned d) {
  return "(" + std::to_string(n) + "," + std::to_string(d) + ")";
}

class Criterion {
 public:
  Criterion(int id, std::string title) : id_(id), title_(std::move(title)), start_(Clock::now()) {}

  void fail(const std::string& why) {
    if (passed_) first_failure_ = why;
    passed_ = false;
  }
  void expect(bool ok, const std::string& why) {
    if (!ok) fail(why);
  }
  void note(const std::string& text) {
    if (!notes_.empty()) notes_ += "; ";
    notes_ += text;
  }
  double elapsed() const { return std::chrono::duration<double>(Clock::now() - start_).count(); }
  void time_limit(double seconds) {
    const double e = elapsed();
    std::ostringstream s;
    s.precision(3);
    s << "runtime " << e << "s exceeds " << seconds << "s";
    expect(e < seconds, s.str());
  }

  CriterionResult finish() const {
    std::string detail = passed_ ? notes_ : first_failure_ + (notes_.empty() ? "" : " | " + notes_);
    return {id_, title_, passed_, detail, elapsed()};
  }

 private:
  int id_;
  std::string title_;
  Clock::time_point start_;
  bool passed_ = true;
  std::string first_failure_;
  std::string notes_;
};

// Sign tracker for identities that hold up to a constant sign per (n, d).
class SignTable {
 public:
  // Returns false when a new sign contradicts an earlier one.
  bool record(std::size_t n, unsigned d, int sign) {
    auto [it, inserted] = signs_.emplace(std::make_pair(n, d), sign);
    return inserted || it->second == sign;
  }
  std::string summary() const {
    std::string out;
    for (const auto& [key, sign] : signs_) {
      if (!out.empty()) out += " ";
      out += label(key.first, key.second) + (sign > 0 ? "+" : "-");
    }
    return out;
  }

 private:
  std::map<std::pair<std::size_t, unsigned>, int> signs_;
};

Ring default_field() { return Ring::prime_field(PrimeField(PrimeField::default_modulus)); }

CriterionResult criterion_affine(const AcceptanceOptions&) {
  Criterion c(1, "symbolic affine Vandermonde, d <= 5");
  for (unsigned d = 0; d <= 5; ++d) {
    std::vector<std::string> names;
    for (unsigned i = 0; i <= d; ++i) names.push_back("x" + std::to_string(i));
    auto vars = make_variables(names);
    std::vector<RingValue> points;
    for (unsigned i = 0; i <= d; ++i) points.emplace_back(MultiPoly::variable(vars, i));
    auto report = verify_affine_vandermonde(points);
    c.expect(report.verdict == Verdict::equal, "d=" + std::to_string(d) + " unequal");
  }
  c.time_limit(10.0);
  return c.finish();
}

CriterionResult criterion_symbolic_hdv(const AcceptanceOptions&) {
  Criterion c(2, "symbolic det(nu^d mu X) = (mu' X)^n");
  const std::vector<Grid> cases = {{1, 1}, {1, 2}, {1, 3}, {2, 2}, {2, 1}, {3, 1}, {4, 1}};
  for (const auto& [n, d] : cases) {
    auto start = Clock::now();
    const ExactMatrix x = symbolic_matrix(n + d, n + 1);
    auto report = verify_hdv(x);
    c.expect(report.verdict == Verdict::equal, label(n, d) + " unequal");
    std::ostringstream s;
    s.precision(2);
    s << label(n, d) << " " << report.lhs.as_poly().term_count() << " terms "
      << std::chrono::duration<double>(Clock::now() - start).count() << "s";
    c.note(s.str());
  }
  c.time_limit(120.0);
  return c.finish();
}

CriterionResult criterion_numeric_hdv(const AcceptanceOptions& options) {
  Criterion c(3, "numeric det(nu^d mu X) = (mu' X)^n over Z and Z/1000003");
  const std::size_t trials = options.quick ? 10 : 100;
  const Ring field = default_field();
  std::size_t checked = 0;
  for (const auto& [n, d] : numeric_grid()) {
    for (const Ring& ring : {Ring::integers(), field}) {
      for (std::size_t t = 0; t < trials; ++t) {
        Rng rng(derive_seed(options.seed, {3, n, d, static_cast<std::uint64_t>(ring.kind()), t}));
        const ExactMatrix x = random_matrix(ring, n + d, n + 1, rng);
        auto report = verify_hdv(x);
        c.expect(report.verdict == Verdict::equal,
                 label(n, d) + " " + std::string(ring.name()) + " trial " + std::to_string(t) + " unequal");
        ++checked;
      }
    }
  }
  c.note(std::to_string(checked) + " instances");
  c.time_limit(120.0);
  return c.finish();
}

CriterionResult criterion_dual(const AcceptanceOptions& options) {
  Criterion c(4, "det(eta^d X) = eps(n,d) mu' X with constant sign");
  const std::size_t trials = options.quick ? 10 : 100;
  const Ring field = default_field();
  SignTable signs;
  for (const auto& [n, d] : numeric_grid()) {
    for (const Ring& ring : {Ring::integers(), field}) {
      for (std::size_t t = 0; t < trials; ++t) {
        Rng rng(derive_seed(options.seed, {4, n, d, static_cast<std::uint64_t>(ring.kind()), t}));
        auto report = verify_dual(random_matrix(ring, n + d, n + 1, rng));
        if (report.verdict == Verdict::unequal) {
          c.fail(label(n, d) + " " + std::string(ring.name()) + " trial " + std::to_string(t) + " unequal");
        } else if (report.sign && !signs.record(n, d, *report.sign)) {
          c.fail(label(n, d) + " sign changed at trial " + std::to_string(t));
        }
      }
    }
  }
  const ExactMatrix worked = ExactMatrix::from_ints(Ring::integers(), {{1, 0}, {0, 1}, {1, 1}});
  auto report = verify_dual(worked);
  c.expect(report.sign == 1 && report.lhs == Ring::integers().from_int(-1),
           "worked example: expected det eta = mu' = -1 with sign +");
  c.note("eps " + signs.summary());
  return c.finish();
}

CriterionResult criterion_lemma(const AcceptanceOptions& options) {
  Criterion c(5, "column lemma: invariance and alpha^(n C(n+d,n+1)) scaling");
  const std::size_t trials = options.quick ? 5 : 50;
  const Ring ring = Ring::integers();
  std::size_t checked = 0;
  for (const auto& [n, d] : numeric_grid()) {
    for (std::size_t t = 0; t < trials; ++t) {
      Rng rng(derive_seed(options.seed, {5, n, d, t}));
      const ExactMatrix x = random_matrix(ring, n + d, n + 1, rng);
      std::uniform_int_distribution<std::size_t> column(0, n);
      const std::size_t src = column(rng);
      std::size_t dst = column(rng);
      while (dst == src) dst = column(rng);
      for (long long alpha : {2LL, 3LL, -1LL}) {
        auto report = verify_column_lemma(x, ring.from_int(alpha), src, dst);
        if (report.verdict != Verdict::equal) {
          std::string failed;
          for (const auto& k : report.checks) {
            if (!k.passed) failed += " " + k.name;
          }
          c.fail(label(n, d) + " trial " + std::to_string(t) + " alpha " + std::to_string(alpha) + ":" + failed);
        }
        ++checked;
      }
    }
  }
  c.note(std::to_string(checked) + " lemma checks");
  return c.finish();
}

CriterionResult criterion_sym_power(const AcceptanceOptions& options) {
  Criterion c(6, "det S^d(u) = (det u)^C(m+d-1,m)");
  const std::size_t trials = options.quick ? 5 : 50;
  const Ring ring = Ring::integers();
  for (std::size_t m = 1; m <= 4; ++m) {
    for (unsigned d = 0; d <= 4; ++d) {
      for (std::size_t t = 0; t < trials; ++t) {
        Rng rng(derive_seed(options.seed, {6, m, d, t}));
        auto report = verify_sym_power(random_matrix(ring, m, m, rng), d);
        c.expect(report.verdict == Verdict::equal,
                 "m=" + std::to_string(m) + " d=" + std::to_string(d) + " trial " + std::to_string(t) + " unequal");
      }
    }
  }
  const ExactMatrix u = symbolic_matrix(2, 2, "u");
  auto report = verify_sym_power(u, 2);
  c.expect(report.verdict == Verdict::equal, "symbolic (m,d)=(2,2) unequal");
  return c.finish();
}

CriterionResult criterion_pairing(const AcceptanceOptions& options) {
  Criterion c(7, "pairing matrix diagonal, det = +-(mu' X)^(n+1)");
  const std::size_t trials = options.quick ? 5 : 50;
  const Ring ring = Ring::integers();
  SignTable signs;
  for (const auto& [n, d] : std::vector<Grid>{{1, 2}, {2, 2}, {2, 3}}) {
    for (std::size_t t = 0; t < trials; ++t) {
      Rng rng(derive_seed(options.seed, {7, n, d, t}));
      auto report = verify_pairing(random_matrix(ring, n + d, n + 1, rng));
      if (report.verdict == Verdict::unequal) {
        c.fail(label(n, d) + " trial " + std::to_string(t) + " failed");
      } else if (report.sign && !signs.record(n, d, *report.sign)) {
        c.fail(label(n, d) + " sign changed at trial " + std::to_string(t));
      }
    }
  }
  c.note("signs " + signs.summary());
  return c.finish();
}

CriterionResult criterion_naive(const AcceptanceOptions& options) {
  Criterion c(8, "naive identity fails for n=2, holds for n=1");
  auto failing = demo_naive_failure(2, 2, options.seed);
  c.expect(failing.verdict == Verdict::unequal, "(2,2) naive identity unexpectedly held");
  for (unsigned d = 1; d <= 4; ++d) {
    auto holding = demo_naive_failure(1, d, options.seed);
    c.expect(holding.verdict == Verdict::equal, label(1, d) + " naive identity failed");
  }
  return c.finish();
}

CriterionResult criterion_det_oracles(const AcceptanceOptions& options) {
  Criterion c(9, "cofactor = berkowitz = bareiss over Z and Z[x,y,z]");
  const std::size_t trials = options.quick ? 20 : 200;
  const Ring poly = Ring::polynomials(make_variables({"x", "y", "z"}));
  for (const Ring& ring : {Ring::integers(), poly}) {
    for (std::size_t order = 1; order <= 6; ++order) {
      for (std::size_t t = 0; t < trials; ++t) {
        Rng rng(derive_seed(options.seed, {9, static_cast<std::uint64_t>(ring.kind()), order, t}));
        const ExactMatrix m = random_matrix(ring, order, order, rng);
        const RingValue oracle = det_cofactor(m);
        c.expect(det_berkowitz(m) == oracle && det_bareiss(m) == oracle,
                 std::string(ring.name()) + " order " + std::to_string(order) + " trial " + std::to_string(t));
      }
    }
  }
  return c.finish();
}

CriterionResult criterion_genpos(const AcceptanceOptions& options) {
  Criterion c(10, "general position: minors route = eta route");
  const std::size_t trials = options.quick ? 50 : 500;
  const Ring field = default_field();
  std::size_t general = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    const std::size_t m = 4 + t % 4;
    Rng rng(derive_seed(options.seed, {10, m, t}));
    auto cfg = random_configuration(field, 2, m, (t / 4) % 2 == 1, rng);
    auto by_minors = in_general_position(cfg);
    auto by_eta = in_general_position_via_eta(cfg);
    c.expect(by_minors.general == by_eta.general, "disagreement at trial " + std::to_string(t));
    general += by_minors.general ? 1 : 0;
  }
  c.note(std::to_string(general) + "/" + std::to_string(trials) + " in general position");

  const Ring z = Ring::integers();
  PointConfiguration collinear(ExactMatrix::from_ints(z, {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 1}}));
  auto a = in_general_position(collinear);
  c.expect(!a.general && a.witness == std::vector<std::size_t>{0, 1, 2}, "collinear triple: expected false, {0,1,2}");
  c.expect(!in_general_position_via_eta(collinear).general, "collinear triple: eta route should be false");
  PointConfiguration simplex(ExactMatrix::from_ints(z, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}}));
  c.expect(in_general_position(simplex).general, "simplex + ones: expected true");
  c.expect(in_general_position_via_eta(simplex).general, "simplex + ones: eta route should be true");
  return c.finish();
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options) {
  using Runner = CriterionResult (*)(const AcceptanceOptions&);
  const Runner runners[] = {criterion_affine, criterion_symbolic_hdv, criterion_numeric_hdv, criterion_dual,
                            criterion_lemma,  criterion_sym_power,    criterion_pairing,     criterion_naive,
                            criterion_det_oracles, criterion_genpos};
  std::vector<CriterionResult> results;
  int id = 1;
  for (Runner run : runners) {
    CriterionResult r;
    try {
      r = run(options);
    } catch (const Error& e) {
      r = {id, "criterion " + std::to_string(id), false,
           "error " + std::string(to_string(e.code())) + ": " + e.what(), 0.0};
    }
    if (options.on_result) options.on_result(r);
    results.push_back(std::move(r));
    ++id;
  }
  return results;
}

std::string format_result_line(const CriterionResult& result) {
  char head[64];
  std::snprintf(head, sizeof head, "[%s] C%-2d %7.2fs  ", result.passed ? "PASS" : "FAIL", result.id, result.seconds);
  std::string line = head + result.title;
  if (!result.detail.empty()) line += "  -- " + result.detail;
  return line;
}

}  // namespace mvvd
