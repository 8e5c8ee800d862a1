#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "spectradiag/gen.hpp"
#include "spectradiag/horn.hpp"
#include "spectradiag/io.hpp"
#include "spectradiag/kernels.hpp"
#include "spectradiag/mirsky.hpp"
#include "spectradiag/verify.hpp"

namespace {

using nlohmann::json;
using namespace spectradiag;

constexpr int kExitOk = 0;
constexpr int kExitMajorization = 2;
constexpr int kExitTrace = 3;
constexpr int kExitVerification = 4;
constexpr int kExitUsage = 64;

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io::ParseError("cannot open input file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw io::ParseError("cannot open output file '" + path + "'");
  out << text;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_text(out_path, text);
  }
}

double env_or_default_tol() {
  if (const char* env = std::getenv("SPECTRA_DIAG_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v >= 0.0)) {
      throw io::ParseError("SPECTRA_DIAG_TOL: expected a nonnegative number");
    }
    return v;
  }
  return 1e-12;
}

// Precedence: --tol flag, then the problem file's tol, then SPECTRA_DIAG_TOL,
// then 1e-12.
double resolve_tol(bool flag_given, double flag_value, const std::optional<double>& file_tol) {
  if (flag_given) return flag_value;
  if (file_tol) return *file_tol;
  return env_or_default_tol();
}

struct CheckArgs {
  std::string input;
  std::string mode = "majorize";
  double tol = 0.0;
  bool tol_given = false;
};

int cmd_check(const CheckArgs& args) {
  const auto problem = io::parse_problem(slurp(args.input));
  const double tol = resolve_tol(args.tol_given, args.tol, problem.tol);

  if (args.mode == "majorize") {
    const auto report = check_majorization(problem.lambda_real(), problem.d_real(), tol);
    json j;
    j["mode"] = "majorize";
    j["holds"] = report.holds;
    j["slacks"] = io::seq_to_json(report.slacks);
    j["trace_gap"] = report.trace_gap;
    j["tolerance_used"] = report.tolerance_used;
    if (!report.holds) j["first_violation"] = report.first_violation();
    std::cout << j.dump(2) << "\n";
    return report.holds ? kExitOk : kExitMajorization;
  }

  if (!problem.d) throw io::ParseError("missing field 'd'");
  const ComplexSeq lambda(problem.lambda);
  const ComplexSeq d(*problem.d);
  const bool match = trace_match(lambda, d, tol);
  json j;
  j["mode"] = "trace";
  j["match"] = match;
  j["tol"] = tol;
  std::cout << j.dump(2) << "\n";
  return match ? kExitOk : kExitTrace;
}

struct BuildArgs {
  std::string input;
  double tol = 0.0;
  bool tol_given = false;
  std::string format = "json";
  std::string emit_what = "all";
  std::string out;
  std::string preset;
};

int cmd_horn(const BuildArgs& args) {
  const auto problem = io::parse_problem(slurp(args.input));
  const double tol = resolve_tol(args.tol_given, args.tol, problem.tol);

  RealSeq lambda = problem.lambda_real();
  std::optional<RealSeq> d;
  if (args.preset == "corr") {
    auto [scaled, ones] = corr_preset(lambda);
    lambda = std::move(scaled);
    d = std::move(ones);
  } else {
    d = problem.d_real();
  }

  HornCertificate cert = horn_construct(lambda, *d, tol);
  const RealMatrix a = hermitian_of(cert.q, cert.lambda);
  const DoublyStochasticMatrix s = orthostochastic_of(cert.q);
  const auto report = verify_horn(cert);

  const bool want_q = args.emit_what == "q" || args.emit_what == "all";
  const bool want_a = args.emit_what == "a" || args.emit_what == "all";
  const bool want_s = args.emit_what == "s" || args.emit_what == "all";

  if (args.format == "json") {
    const json j = io::horn_to_json(cert, want_a ? &a : nullptr, want_s ? &s : nullptr, want_q);
    emit(j.dump(2) + "\n", args.out);
  } else {
    const int parts = int(want_q) + int(want_a) + int(want_s);
    if (parts > 1 && args.out.empty()) {
      throw io::ParseError("csv with more than one matrix needs --out <prefix>");
    }
    if (args.out.empty()) {
      if (want_q) std::cout << io::matrix_to_csv(cert.q.entries());
      if (want_a) std::cout << io::matrix_to_csv(a);
      if (want_s) std::cout << io::matrix_to_csv(s.entries());
    } else {
      if (want_q) write_text(args.out + "_q.csv", io::matrix_to_csv(cert.q.entries()));
      if (want_a) write_text(args.out + "_a.csv", io::matrix_to_csv(a));
      if (want_s) write_text(args.out + "_s.csv", io::matrix_to_csv(s.entries()));
    }
  }

  if (!report.pass) {
    std::cerr << "self-verification failed\n";
    return kExitVerification;
  }
  return kExitOk;
}

int cmd_mirsky(const BuildArgs& args) {
  const auto problem = io::parse_problem(slurp(args.input));
  const double tol = resolve_tol(args.tol_given, args.tol, problem.tol);
  if (!problem.d) throw io::ParseError("missing field 'd'");

  const ComplexSeq lambda(problem.lambda);
  const ComplexSeq d(*problem.d);
  const MirskyCertificate cert = mirsky_construct(lambda, d, tol);
  if (cert.growth > 1e8) {
    std::cerr << "warning: growth(L) = " << cert.growth
              << " exceeds 1e8; the construction is ill-conditioned\n";
  }
  const auto report = verify_mirsky(cert);

  const bool want_l = args.emit_what == "l" || args.emit_what == "all";
  const bool want_a = args.emit_what == "a" || args.emit_what == "all";

  if (args.format == "json") {
    const json j = io::mirsky_to_json(cert, want_l, want_a);
    emit(j.dump(2) + "\n", args.out);
  } else {
    if (!cert.is_real) throw io::ParseError("csv has no complex convention; use --format json");
    const int n = cert.a.n();
    RealMatrix l_re(n), a_re(n);
    for (int i = 0; i < n; ++i) {
      for (int k = 0; k < n; ++k) {
        l_re(i, k) = cert.l.entries()(i, k).real();
        a_re(i, k) = cert.a(i, k).real();
      }
    }
    std::vector<double> c_re(cert.c_values.size());
    for (std::size_t i = 0; i < c_re.size(); ++i) c_re[i] = cert.c_values[i].real();

    const int parts = int(want_l) + int(want_a);
    if (parts > 1 && args.out.empty()) {
      throw io::ParseError("csv with more than one matrix needs --out <prefix>");
    }
    if (args.out.empty()) {
      if (want_l) std::cout << io::matrix_to_csv(l_re);
      if (want_a) std::cout << io::matrix_to_csv(a_re);
    } else {
      if (want_l) write_text(args.out + "_l.csv", io::matrix_to_csv(l_re));
      if (want_a) write_text(args.out + "_a.csv", io::matrix_to_csv(a_re));
      if (!c_re.empty()) write_text(args.out + "_c.csv", io::row_to_csv(c_re));
    }
  }

  if (!report.pass) {
    std::cerr << "self-verification failed\n";
    return kExitVerification;
  }
  return kExitOk;
}

struct GenArgs {
  std::uint64_t seed = 1;
  int n = 8;
  int mix = 8;
  std::vector<double> range;
  std::string kind = "majorized";
  bool complex_values = false;
  std::string preset;
};

int cmd_gen(const GenArgs& args) {
  GenConfig cfg;
  cfg.seed = args.seed;
  cfg.n = args.n;
  cfg.mix_count = args.mix;
  if (!args.range.empty()) {
    cfg.lo = args.range[0];
    cfg.hi = args.range[1];
  }

  json j;
  if (args.preset == "corr") {
    if (args.range.empty()) {
      cfg.lo = 0.0;
      cfg.hi = 10.0;
    } else if (cfg.lo < 0.0) {
      throw io::ParseError("--preset corr needs a nonnegative value range");
    }
    auto [lambda, ones] = corr_preset(random_spectrum(cfg));
    j["lambda"] = io::seq_to_json(lambda.values());
    j["d"] = io::seq_to_json(ones.values());
  } else if (args.kind == "majorized") {
    const RealSeq lambda = random_spectrum(cfg);
    GenConfig dcfg = cfg;
    dcfg.seed = cfg.seed + 1;  // decouple the shuffle stream from the spectrum stream
    const RealSeq d = random_majorized_diag(lambda, dcfg);
    j["lambda"] = io::seq_to_json(lambda.values());
    j["d"] = io::seq_to_json(d.values());
  } else if (args.kind == "trace") {
    auto [lambda, d] = trace_matched_pair(cfg, args.complex_values);
    j["lambda"] = io::seq_to_json(lambda.values(), !args.complex_values);
    j["d"] = io::seq_to_json(d.values(), !args.complex_values);
  } else {  // spectrum
    j["lambda"] = io::seq_to_json(random_spectrum(cfg).values());
  }
  std::cout << j.dump(2) << "\n";
  return kExitOk;
}

struct VerifyArgs {
  std::string input;
  TolProfile profile = TolProfile::defaults();
};

int cmd_verify(const VerifyArgs& args) {
  const json j = io::parse_json(slurp(args.input));
  const std::string kind = j.is_object() && j.contains("kind") ? j.at("kind").get<std::string>() : "";

  if (kind == "horn") {
    const auto loaded = io::horn_from_json(j);
    auto report = verify_horn(loaded.cert, args.profile);
    // Cross-check any matrices stored alongside the certificate.
    if (loaded.a) {
      const RealMatrix a = hermitian_of(loaded.cert.q, loaded.cert.lambda);
      if (loaded.a->n() != a.n() || max_abs_diff(*loaded.a, a) > report.thresholds.diag) {
        report.pass = false;
      }
    }
    if (loaded.s) {
      const RealMatrix s = kernels::squared_entries(loaded.cert.q.entries());
      if (loaded.s->n() != s.n() || max_abs_diff(*loaded.s, s) > report.thresholds.ds_sum) {
        report.pass = false;
      }
    }
    std::cout << io::report_to_json(report).dump(2) << "\n";
    return report.pass ? kExitOk : kExitVerification;
  }

  if (kind == "mirsky") {
    std::optional<io::LoadedMirskyCert> loaded;
    try {
      loaded = io::mirsky_from_json(j);
    } catch (const std::invalid_argument& e) {
      std::cerr << "certificate structure invalid: " << e.what() << "\n";
      return kExitVerification;
    }
    auto report = verify_mirsky(loaded->cert, args.profile);
    // The elementary shifts must agree with the subdiagonal of L.
    const auto& cert = loaded->cert;
    for (std::size_t k = 0; k + 1 < static_cast<std::size_t>(cert.a.n()); ++k) {
      const auto lk = cert.l.entries()(static_cast<int>(k) + 1, static_cast<int>(k));
      if (std::abs(lk - cert.c_values[k]) > 1e-12 * std::max(1.0, cert.growth)) {
        report.pass = false;
      }
    }
    std::cout << io::report_to_json(report).dump(2) << "\n";
    return report.pass ? kExitOk : kExitVerification;
  }

  throw io::ParseError("field 'kind': expected \"horn\" or \"mirsky\"");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"prescribed-diagonal matrix constructions with independent verification"};
  app.require_subcommand(1);

  CheckArgs check_args;
  auto* check = app.add_subcommand("check", "majorization / trace-matching test of a problem file");
  check->add_option("input", check_args.input, "problem JSON file, or - for stdin")->required();
  check->add_option("--mode", check_args.mode, "majorize or trace")
      ->check(CLI::IsMember({"majorize", "trace"}));
  auto* check_tol = check->add_option("--tol", check_args.tol, "tolerance");

  BuildArgs horn_args;
  auto* horn = app.add_subcommand("horn", "build orthogonal Q with diag(Q [L] Q^T) = D");
  horn->add_option("input", horn_args.input, "problem JSON file, or - for stdin")->required();
  auto* horn_tol = horn->add_option("--tol", horn_args.tol, "tolerance");
  horn->add_option("--format", horn_args.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  horn->add_option("--emit", horn_args.emit_what, "q, a, s, or all")
      ->check(CLI::IsMember({"q", "a", "s", "all"}));
  horn->add_option("--out", horn_args.out, "output path (csv: path prefix)");
  horn->add_option("--preset", horn_args.preset, "corr: scale lambda to trace n, target all-ones diagonal")
      ->check(CLI::IsMember({"corr"}));

  BuildArgs mirsky_args;
  auto* mirsky =
      app.add_subcommand("mirsky", "build unit lower triangular L with diag(L^-1 [U_L] L) = D");
  mirsky->add_option("input", mirsky_args.input, "problem JSON file, or - for stdin")->required();
  auto* mirsky_tol = mirsky->add_option("--tol", mirsky_args.tol, "tolerance");
  mirsky->add_option("--format", mirsky_args.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  mirsky->add_option("--emit", mirsky_args.emit_what, "l, a, or all")
      ->check(CLI::IsMember({"l", "a", "all"}));
  mirsky->add_option("--out", mirsky_args.out, "output path (csv: path prefix)");

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "deterministic seeded problem generators");
  gen->add_option("--seed", gen_args.seed, "64-bit seed");
  gen->add_option("--n", gen_args.n, "dimension")->check(CLI::PositiveNumber);
  gen->add_option("--mix", gen_args.mix, "permutation matrices averaged")
      ->check(CLI::PositiveNumber);
  gen->add_option("--range", gen_args.range, "value range lo hi")->expected(2);
  gen->add_option("--kind", gen_args.kind, "majorized, trace, or spectrum")
      ->check(CLI::IsMember({"majorized", "trace", "spectrum"}));
  gen->add_flag("--complex", gen_args.complex_values, "complex values (trace pairs)");
  gen->add_option("--preset", gen_args.preset, "corr: correlation-spectrum problem")
      ->check(CLI::IsMember({"corr"}));

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "re-check an emitted certificate");
  verify->add_option("input", verify_args.input, "certificate JSON file, or - for stdin")
      ->required();
  verify->add_option("--tol-diag", verify_args.profile.diag, "diagonal threshold factor");
  verify->add_option("--tol-orth", verify_args.profile.orth, "orthogonality threshold factor");
  verify->add_option("--tol-eig", verify_args.profile.eig, "eigenvalue threshold factor");
  verify->add_option("--tol-schur", verify_args.profile.schur, "Schur relation threshold factor");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  check_args.tol_given = check_tol->count() > 0;
  horn_args.tol_given = horn_tol->count() > 0;
  mirsky_args.tol_given = mirsky_tol->count() > 0;

  try {
    if (check->parsed()) return cmd_check(check_args);
    if (horn->parsed()) return cmd_horn(horn_args);
    if (mirsky->parsed()) return cmd_mirsky(mirsky_args);
    if (gen->parsed()) return cmd_gen(gen_args);
    if (verify->parsed()) return cmd_verify(verify_args);
  } catch (const io::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const MajorizationError& e) {
    std::cerr << "error: " << e.what() << " at prefix index " << e.first_violation << "\n";
    return kExitMajorization;
  } catch (const NotCorrelationSpectrumError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMajorization;
  } catch (const TraceMismatchError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitTrace;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 70;
  }
  return kExitUsage;
}
