// mvvd: construct Vandermonde-type matrices, verify the identities between
// their determinants, and test point configurations for general position.
//
// Exit status: 0 when the command succeeded and (for verify) the verdict is
// the expected one, 1 when a verdict or self-test came out wrong, 2 on any
// error. Errors print one line "error: <reason_code>: <message>" to stderr.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "mvvd/acceptance.hpp"
#include "mvvd/combinatorics.hpp"
#include "mvvd/determinant.hpp"
#include "mvvd/error.hpp"
#include "mvvd/genpos.hpp"
#include "mvvd/matrix_io.hpp"
#include "mvvd/random.hpp"
#include "mvvd/vandermonde.hpp"
#include "mvvd/verify.hpp"

namespace {

using mvvd::Error;
using mvvd::ErrorCode;
using mvvd::ExactMatrix;
using mvvd::Ring;
using nlohmann::json;

constexpr int exit_ok = 0;
constexpr int exit_unexpected = 1;
constexpr int exit_error = 2;

struct Config {
  std::optional<std::size_t> n;
  std::optional<unsigned> d;
  std::optional<std::string> ring;
  std::string modulus;
  std::string input;
  std::string output = "-";
  std::uint64_t seed = 1;
  std::size_t trials = 10;
  std::string algorithm = "auto";
  bool symbolic = false;
  bool quick = false;
  std::uint64_t cap = 10;
  std::string identity;
  long long alpha = 2;
  std::size_t src = 0;
  std::size_t dst = 1;
  std::size_t m = 2;
  std::string method = "minors";
};

Ring make_ring(const Config& cfg, const std::string& fallback) {
  const std::string kind = cfg.ring.value_or(fallback);
  if (kind == "int") {
    if (!cfg.modulus.empty()) throw Error(ErrorCode::invalid_argument, "--modulus only applies to --ring mod_p");
    return Ring::integers();
  }
  if (kind == "mod_p") {
    return Ring::prime_field(cfg.modulus.empty() ? mvvd::PrimeField() : mvvd::PrimeField::from_string(cfg.modulus));
  }
  throw Error(ErrorCode::invalid_argument, "ring '" + kind + "' has no random sampler; use --symbolic or --input");
}

mvvd::DetAlgorithm algorithm_of(const Config& cfg) { return mvvd::parse_det_algorithm(cfg.algorithm); }

std::size_t require_n(const Config& cfg) {
  if (!cfg.n) throw Error(ErrorCode::invalid_argument, "--n is required without --input");
  if (*cfg.n == 0) throw Error(ErrorCode::invalid_argument, "n must be at least 1");
  return *cfg.n;
}

unsigned require_d(const Config& cfg) {
  if (!cfg.d) throw Error(ErrorCode::invalid_argument, "--d is required without --input");
  return *cfg.d;
}

void check_symbolic_cap(const Config& cfg, std::uint64_t size, const std::string& what) {
  if (size > cfg.cap) {
    throw Error(ErrorCode::symbolic_cap_exceeded, what + " = " + std::to_string(size) + " exceeds the symbolic cap " +
                                                      std::to_string(cfg.cap) + " (raise with --cap)");
  }
}

void check_ring_flag(const Config& cfg, const ExactMatrix& x) {
  if (cfg.ring && *cfg.ring != x.ring().name()) {
    throw Error(ErrorCode::ring_mismatch,
                "input is over " + std::string(x.ring().name()) + " but --ring " + *cfg.ring + " was given");
  }
  if (cfg.symbolic) throw Error(ErrorCode::invalid_argument, "--symbolic generates its own matrix; drop --input");
}

void check_shape_flags(const Config& cfg, const ExactMatrix& x) {
  if (x.cols() < 2) throw Error(ErrorCode::shape_violation, "input needs at least two columns (n >= 1)");
  const std::size_t n = x.cols() - 1;
  if (cfg.n && *cfg.n != n) {
    throw Error(ErrorCode::shape_violation, "--n " + std::to_string(*cfg.n) + " but input has " +
                                                std::to_string(x.cols()) + " columns");
  }
  if (cfg.d && x.rows() >= n && *cfg.d != x.rows() - n) {
    throw Error(ErrorCode::shape_violation, "--d " + std::to_string(*cfg.d) + " but input has " +
                                                std::to_string(x.rows()) + " rows (n+d)");
  }
}

// (n+d) x (n+1) matrix from --input, --symbolic, or a seeded random draw.
ExactMatrix source_matrix(const Config& cfg) {
  if (!cfg.input.empty()) {
    ExactMatrix x = mvvd::read_matrix_file(cfg.input);
    check_ring_flag(cfg, x);
    check_shape_flags(cfg, x);
    return x;
  }
  const std::size_t n = require_n(cfg);
  const unsigned d = require_d(cfg);
  if (cfg.symbolic || cfg.ring == "poly") {
    if (cfg.ring && *cfg.ring != "poly") throw Error(ErrorCode::invalid_argument, "--symbolic needs --ring poly");
    check_symbolic_cap(cfg, mvvd::binomial(n + d, n), "C(n+d,n)");
    return mvvd::symbolic_matrix(n + d, n + 1);
  }
  mvvd::Rng rng(mvvd::derive_seed(cfg.seed, {n, d}));
  return mvvd::random_matrix(make_ring(cfg, "int"), n + d, n + 1, rng);
}

// Square m x m matrix for the symmetric-power commands.
ExactMatrix square_source(const Config& cfg, unsigned d) {
  if (!cfg.input.empty()) {
    ExactMatrix u = mvvd::read_matrix_file(cfg.input);
    check_ring_flag(cfg, u);
    return u;
  }
  if (cfg.m == 0) throw Error(ErrorCode::invalid_argument, "--m must be at least 1");
  if (cfg.symbolic || cfg.ring == "poly") {
    if (cfg.ring && *cfg.ring != "poly") throw Error(ErrorCode::invalid_argument, "--symbolic needs --ring poly");
    check_symbolic_cap(cfg, mvvd::binomial(cfg.m + d - 1, d), "C(m+d-1,d)");
    return mvvd::symbolic_matrix(cfg.m, cfg.m, "u");
  }
  mvvd::Rng rng(mvvd::derive_seed(cfg.seed, {cfg.m, d}));
  return mvvd::random_matrix(make_ring(cfg, "int"), cfg.m, cfg.m, rng);
}

int cmd_basis(const Config& cfg) {
  const mvvd::MonomialBasis basis = mvvd::monomial_basis(require_n(cfg), require_d(cfg));
  json monomials = json::array();
  for (const auto& e : basis.monomials()) monomials.push_back(e);
  mvvd::write_document(cfg.output, {{"n", *cfg.n}, {"d", *cfg.d}, {"size", basis.size()}, {"monomials", monomials}});
  return exit_ok;
}

int cmd_veronese(const Config& cfg) {
  const ExactMatrix x = source_matrix(cfg);
  const unsigned d = cfg.d ? *cfg.d : static_cast<unsigned>(x.rows() + 1 - x.cols());
  mvvd::write_document(cfg.output, mvvd::matrix_to_json(mvvd::veronese_matrix(x, d)));
  return exit_ok;
}

int cmd_mu(const Config& cfg) {
  mvvd::write_document(cfg.output, mvvd::matrix_to_json(mvvd::mu_matrix(source_matrix(cfg), algorithm_of(cfg))));
  return exit_ok;
}

int cmd_eta(const Config& cfg) {
  const ExactMatrix x = source_matrix(cfg);
  if (x.rows() < x.cols()) {
    throw Error(ErrorCode::shape_violation, "eta needs (n+d) x (n+1) with d >= 1, got " + std::to_string(x.rows()) +
                                                "x" + std::to_string(x.cols()));
  }
  const unsigned d = static_cast<unsigned>(x.rows() + 1 - x.cols());
  mvvd::write_document(cfg.output, mvvd::matrix_to_json(mvvd::eta_matrix(x, d)));
  return exit_ok;
}

int cmd_sym(const Config& cfg) {
  const unsigned d = require_d(cfg);
  mvvd::write_document(cfg.output, mvvd::matrix_to_json(mvvd::sym_power_matrix(square_source(cfg, d), d)));
  return exit_ok;
}

bool expected_verdict(const mvvd::VerificationReport& report) {
  if (report.identity == "naive") {
    return report.n >= 2 ? report.verdict == mvvd::Verdict::unequal : report.verdict == mvvd::Verdict::equal;
  }
  return report.verdict != mvvd::Verdict::unequal;
}

int cmd_verify(const Config& cfg) {
  const mvvd::VerifyOptions options{algorithm_of(cfg)};
  std::optional<mvvd::VerificationReport> report;
  const std::string& id = cfg.identity;
  if (id == "hdv") {
    report = mvvd::verify_hdv(source_matrix(cfg), options);
  } else if (id == "dual") {
    report = mvvd::verify_dual(source_matrix(cfg), options);
  } else if (id == "abstract") {
    report = mvvd::verify_pairing(source_matrix(cfg), options);
  } else if (id == "lemma") {
    const ExactMatrix x = source_matrix(cfg);
    report = mvvd::verify_column_lemma(x, x.ring().from_int(cfg.alpha), cfg.src, cfg.dst, options);
  } else if (id == "sym") {
    const unsigned d = require_d(cfg);
    report = mvvd::verify_sym_power(square_source(cfg, d), d, options);
  } else if (id == "naive") {
    if (cfg.symbolic) throw Error(ErrorCode::invalid_argument, "naive comparison is numeric only");
    if (!cfg.input.empty()) {
      const ExactMatrix x = mvvd::read_matrix_file(cfg.input);
      check_ring_flag(cfg, x);
      report = mvvd::naive_comparison(x, require_d(cfg), options);
    } else {
      if (cfg.ring && *cfg.ring != "int") throw Error(ErrorCode::invalid_argument, "naive demo runs over int");
      report = mvvd::demo_naive_failure(require_n(cfg), require_d(cfg), cfg.seed, options);
    }
  } else {
    throw Error(ErrorCode::invalid_argument, "unknown identity '" + id + "'");
  }
  if (cfg.input.empty() && !cfg.symbolic && cfg.ring != "poly") report->seed = cfg.seed;
  mvvd::write_document(cfg.output, mvvd::report_to_json(*report));
  return expected_verdict(*report) ? exit_ok : exit_unexpected;
}

int cmd_genpos(const Config& cfg) {
  std::optional<mvvd::PointConfiguration> points;
  if (!cfg.input.empty()) {
    ExactMatrix x = mvvd::read_matrix_file(cfg.input);
    check_ring_flag(cfg, x);
    points.emplace(std::move(x));
  } else {
    const std::size_t n = require_n(cfg);
    mvvd::Rng rng(mvvd::derive_seed(cfg.seed, {n, require_d(cfg)}));
    points.emplace(mvvd::random_configuration(make_ring(cfg, "int"), n, n + *cfg.d, false, rng).points());
  }
  mvvd::GeneralPositionResult result;
  if (cfg.method == "minors") {
    result = mvvd::in_general_position(*points);
  } else if (cfg.method == "eta") {
    result = mvvd::in_general_position_via_eta(*points);
  } else {
    throw Error(ErrorCode::invalid_argument, "unknown method '" + cfg.method + "'");
  }
  mvvd::write_document(cfg.output, mvvd::genpos_to_json(result, *points));
  return exit_ok;
}

int cmd_bench(const Config& cfg) {
  mvvd::BenchOptions options;
  options.n = require_n(cfg);
  options.d = require_d(cfg);
  if (options.d == 0) throw Error(ErrorCode::invalid_argument, "bench needs d >= 1");
  options.trials = cfg.trials;
  options.seed = cfg.seed;
  options.ring = make_ring(cfg, "mod_p");
  const mvvd::BenchReport report = mvvd::bench_genpos(options);
  mvvd::write_document(cfg.output, mvvd::bench_to_json(report));
  return report.agreements == options.trials ? exit_ok : exit_unexpected;
}

int cmd_selftest(const Config& cfg) {
  mvvd::AcceptanceOptions options;
  options.quick = cfg.quick;
  options.seed = cfg.seed;
  options.on_result = [](const mvvd::CriterionResult& r) {
    std::fprintf(stderr, "%s\n", mvvd::format_result_line(r).c_str());
  };
  const auto results = mvvd::run_acceptance(options);
  json criteria = json::array();
  bool all = true;
  for (const auto& r : results) {
    criteria.push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail}});
    all = all && r.passed;
  }
  mvvd::write_document(cfg.output, {{"quick", cfg.quick}, {"seed", cfg.seed}, {"passed", all}, {"criteria", criteria}});
  return all ? exit_ok : exit_unexpected;
}

void add_common(CLI::App* app, Config& cfg) {
  app->add_option("--output", cfg.output, "Output path, '-' for stdout");
  app->add_option("--seed", cfg.seed, "Seed for random instances");
}

void add_matrix_source(CLI::App* app, Config& cfg) {
  add_common(app, cfg);
  app->add_option("--n", cfg.n, "Projective dimension n");
  app->add_option("--d", cfg.d, "Degree d");
  app->add_option("--ring", cfg.ring, "Ring for generated matrices")->check(CLI::IsMember({"int", "mod_p", "poly"}));
  app->add_option("--modulus", cfg.modulus, "Prime modulus for mod_p (default 1000003)");
  app->add_option("--input", cfg.input, "Matrix document to read");
  app->add_flag("--symbolic", cfg.symbolic, "Use a matrix of independent unknowns");
  app->add_option("--cap", cfg.cap, "Symbolic size cap on C(n+d,n)");
  app->add_option("--algorithm", cfg.algorithm, "Determinant algorithm")
      ->check(CLI::IsMember({"auto", "berkowitz", "bareiss", "cofactor"}));
}

void print_error(std::string_view code, const std::string& message) {
  std::string line = message;
  for (char& c : line) {
    if (c == '\n' || c == '\r') c = ' ';
  }
  std::cerr << "error: " << code << ": " << line << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multivariate Vandermonde determinants: constructions, verifiers and general-position tests"};
  app.require_subcommand(1);
  Config cfg;

  auto* basis = app.add_subcommand("basis", "List the degree-d monomial basis in n+1 variables");
  add_common(basis, cfg);
  basis->add_option("--n", cfg.n, "Projective dimension n")->required();
  basis->add_option("--d", cfg.d, "Degree d")->required();

  auto* veronese = app.add_subcommand("veronese", "Apply the degree-d Veronese map to each row");
  add_matrix_source(veronese, cfg);
  auto* mu = app.add_subcommand("mu", "Matrix of maximal minors indexed by omitted rows");
  add_matrix_source(mu, cfg);
  auto* eta = app.add_subcommand("eta", "Coefficients of products of d row forms");
  add_matrix_source(eta, cfg);
  auto* sym = app.add_subcommand("sym", "Matrix of the d-th symmetric power of a square matrix");
  add_matrix_source(sym, cfg);
  sym->add_option("--m", cfg.m, "Order of the generated square matrix");

  auto* verify = app.add_subcommand("verify", "Check one identity and write a report");
  add_matrix_source(verify, cfg);
  verify->add_option("identity", cfg.identity, "Identity to check")
      ->required()
      ->check(CLI::IsMember({"hdv", "dual", "lemma", "sym", "abstract", "naive"}));
  verify->add_option("--alpha", cfg.alpha, "Scalar for the column lemma");
  verify->add_option("--src", cfg.src, "Source column for the column lemma (also the scaled column)");
  verify->add_option("--dst", cfg.dst, "Destination column for the column lemma");
  verify->add_option("--m", cfg.m, "Order of the generated square matrix for sym");

  auto* genpos = app.add_subcommand("genpos", "Test a point configuration for general position (over mod_p the verdict is for the reduction mod p)");
  add_matrix_source(genpos, cfg);
  genpos->add_option("--method", cfg.method, "minors or eta")->check(CLI::IsMember({"minors", "eta"}));

  auto* bench = app.add_subcommand("bench", "Time the minors route against the eta route");
  add_matrix_source(bench, cfg);
  bench->add_option("--trials", cfg.trials, "Number of configurations");

  auto* selftest = app.add_subcommand("selftest", "Run the acceptance suite");
  add_common(selftest, cfg);
  selftest->add_flag("--quick", cfg.quick, "Reduced trial counts");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    print_error("invalid_argument", e.what());
    return exit_error;
  }

  try {
    if (*basis) return cmd_basis(cfg);
    if (*veronese) return cmd_veronese(cfg);
    if (*mu) return cmd_mu(cfg);
    if (*eta) return cmd_eta(cfg);
    if (*sym) return cmd_sym(cfg);
    if (*verify) return cmd_verify(cfg);
    if (*genpos) return cmd_genpos(cfg);
    if (*bench) return cmd_bench(cfg);
    if (*selftest) return cmd_selftest(cfg);
  } catch (const Error& e) {
    print_error(mvvd::to_string(e.code()), e.what());
    return exit_error;
  } catch (const nlohmann::json::exception& e) {
    print_error("parse_error", e.what());
    return exit_error;
  } catch (const std::bad_alloc&) {
    print_error("out_of_memory", "allocation failed");
    return exit_error;
  } catch (const std::exception& e) {
    print_error("internal", e.what());
    return exit_error;
  }
  return exit_error;
}
