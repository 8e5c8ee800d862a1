#pragma once

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "spectradiag/dense.hpp"
#include "spectradiag/horn.hpp"
#include "spectradiag/mirsky.hpp"
#include "spectradiag/verify.hpp"

// Problem and certificate serialization. JSON numbers round-trip exactly
// (shortest representation that reparses to the same double); CSV uses 17
// significant digits. Complex scalars serialize as [re, im] pairs.
namespace spectradiag::io {

/// Malformed input; the message names the offending line or field.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParsedProblem {
  std::vector<std::complex<double>> lambda;
  std::optional<std::vector<std::complex<double>>> d;
  std::optional<double> tol;

  bool all_real() const;
  RealSeq lambda_real() const;  // throws ParseError if any imaginary part is nonzero
  RealSeq d_real() const;
};

/// Parses {"lambda": [...], "d": [...], "tol": t}; d and tol optional.
/// Entries are numbers or [re, im] pairs.
ParsedProblem parse_problem(const std::string& text);

/// json::parse with parse errors rewritten to name the line.
nlohmann::json parse_json(const std::string& text);

nlohmann::json matrix_to_json(const RealMatrix& m);
nlohmann::json matrix_to_json(const ComplexMatrix& m, bool as_real);
nlohmann::json seq_to_json(const std::vector<double>& v);
nlohmann::json seq_to_json(const std::vector<std::complex<double>>& v, bool as_real);

RealMatrix matrix_from_json(const nlohmann::json& j, const std::string& field);
ComplexMatrix cmatrix_from_json(const nlohmann::json& j, const std::string& field);

/// Certificate document for a Horn construction. a and s may be null to
/// omit them (--emit filtering).
nlohmann::json horn_to_json(const HornCertificate& cert, const RealMatrix* a,
                            const DoublyStochasticMatrix* s, bool include_q = true);

nlohmann::json mirsky_to_json(const MirskyCertificate& cert, bool include_l = true,
                              bool include_a = true);

nlohmann::json report_to_json(const VerifyReport& report);

struct LoadedHornCert {
  HornCertificate cert;
  std::optional<RealMatrix> a;  // as stored in the file, for cross-checking
  std::optional<RealMatrix> s;
};

struct LoadedMirskyCert {
  MirskyCertificate cert;
};

/// Throws ParseError on schema mismatch. A structurally broken L (diagonal
/// not exactly 1, nonzero above) throws std::invalid_argument, which callers
/// treat as a verification failure rather than a schema error.
LoadedHornCert horn_from_json(const nlohmann::json& j);
LoadedMirskyCert mirsky_from_json(const nlohmann::json& j);

/// Comma-separated, one row per line, no header, LF endings, %.17g.
std::string matrix_to_csv(const RealMatrix& m);
std::string row_to_csv(const std::vector<double>& v);

}  // namespace spectradiag::io
