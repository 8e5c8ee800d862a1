#include "spectradiag/io.hpp"

#include <cmath>
#include <cstdio>

namespace spectradiag::io {

namespace {

using nlohmann::json;

std::size_t line_of_byte(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') ++line;
  }
  return line;
}

std::complex<double> complex_from_element(const json& el, const std::string& field,
                                          std::size_t index) {
  const auto where = [&] { return "field '" + field + "' entry " + std::to_string(index); };
  if (el.is_number()) {
    const double re = el.get<double>();
    if (!std::isfinite(re)) throw ParseError(where() + ": value must be finite");
    return {re, 0.0};
  }
  if (el.is_array() && el.size() == 2 && el[0].is_number() && el[1].is_number()) {
    const double re = el[0].get<double>();
    const double im = el[1].get<double>();
    if (!std::isfinite(re) || !std::isfinite(im)) {
      throw ParseError(where() + ": value must be finite");
    }
    return {re, im};
  }
  throw ParseError(where() + ": expected a number or a [re, im] pair");
}

std::vector<std::complex<double>> cseq_from_json(const json& j, const std::string& field) {
  if (!j.is_array() || j.empty()) {
    throw ParseError("field '" + field + "': expected a nonempty array");
  }
  std::vector<std::complex<double>> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(complex_from_element(j[i], field, i));
  return out;
}

std::vector<double> rseq_from_json(const json& j, const std::string& field) {
  const auto z = cseq_from_json(j, field);
  std::vector<double> out(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (z[i].imag() != 0.0) throw ParseError("field '" + field + "': expected real values");
    out[i] = z[i].real();
  }
  return out;
}

json complex_to_json(std::complex<double> z) { return json::array({z.real(), z.imag()}); }

const json& require(const json& j, const std::string& field) {
  if (!j.contains(field)) throw ParseError("missing field '" + field + "'");
  return j.at(field);
}

std::string format17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

}  // namespace

bool ParsedProblem::all_real() const {
  for (const auto& z : lambda) {
    if (z.imag() != 0.0) return false;
  }
  if (d) {
    for (const auto& z : *d) {
      if (z.imag() != 0.0) return false;
    }
  }
  return true;
}

RealSeq ParsedProblem::lambda_real() const {
  std::vector<double> v(lambda.size());
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (lambda[i].imag() != 0.0) throw ParseError("field 'lambda': expected real values");
    v[i] = lambda[i].real();
  }
  return RealSeq(std::move(v));
}

RealSeq ParsedProblem::d_real() const {
  if (!d) throw ParseError("missing field 'd'");
  std::vector<double> v(d->size());
  for (std::size_t i = 0; i < d->size(); ++i) {
    if ((*d)[i].imag() != 0.0) throw ParseError("field 'd': expected real values");
    v[i] = (*d)[i].real();
  }
  return RealSeq(std::move(v));
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("parse error at line " + std::to_string(line_of_byte(text, e.byte)) + ": " +
                     e.what());
  }
}

ParsedProblem parse_problem(const std::string& text) {
  const json j = parse_json(text);
  if (!j.is_object()) throw ParseError("problem must be a JSON object");

  ParsedProblem p;
  p.lambda = cseq_from_json(require(j, "lambda"), "lambda");
  if (j.contains("d")) {
    p.d = cseq_from_json(j.at("d"), "d");
    if (p.d->size() != p.lambda.size()) {
      throw ParseError("field 'd': length differs from 'lambda'");
    }
  }
  if (j.contains("tol")) {
    if (!j.at("tol").is_number()) throw ParseError("field 'tol': expected a number");
    const double tol = j.at("tol").get<double>();
    if (!std::isfinite(tol) || tol < 0.0) throw ParseError("field 'tol': must be finite and >= 0");
    p.tol = tol;
  }
  return p;
}

json matrix_to_json(const RealMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.n(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.n(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

json matrix_to_json(const ComplexMatrix& m, bool as_real) {
  json rows = json::array();
  for (int i = 0; i < m.n(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.n(); ++j) {
      if (as_real) {
        row.push_back(m(i, j).real());
      } else {
        row.push_back(complex_to_json(m(i, j)));
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

json seq_to_json(const std::vector<double>& v) { return json(v); }

json seq_to_json(const std::vector<std::complex<double>>& v, bool as_real) {
  json arr = json::array();
  for (const auto& z : v) {
    if (as_real) {
      arr.push_back(z.real());
    } else {
      arr.push_back(complex_to_json(z));
    }
  }
  return arr;
}

RealMatrix matrix_from_json(const json& j, const std::string& field) {
  if (!j.is_array() || j.empty()) {
    throw ParseError("field '" + field + "': expected a nonempty array of rows");
  }
  const int n = static_cast<int>(j.size());
  RealMatrix m(n);
  for (int i = 0; i < n; ++i) {
    const auto row = rseq_from_json(j[i], field);
    if (static_cast<int>(row.size()) != n) {
      throw ParseError("field '" + field + "': row " + std::to_string(i) + " is not length " +
                       std::to_string(n));
    }
    for (int k = 0; k < n; ++k) m(i, k) = row[k];
  }
  return m;
}

ComplexMatrix cmatrix_from_json(const json& j, const std::string& field) {
  if (!j.is_array() || j.empty()) {
    throw ParseError("field '" + field + "': expected a nonempty array of rows");
  }
  const int n = static_cast<int>(j.size());
  ComplexMatrix m(n);
  for (int i = 0; i < n; ++i) {
    const auto row = cseq_from_json(j[i], field);
    if (static_cast<int>(row.size()) != n) {
      throw ParseError("field '" + field + "': row " + std::to_string(i) + " is not length " +
                       std::to_string(n));
    }
    for (int k = 0; k < n; ++k) m(i, k) = row[k];
  }
  return m;
}

json horn_to_json(const HornCertificate& cert, const RealMatrix* a,
                  const DoublyStochasticMatrix* s, bool include_q) {
  json j;
  j["kind"] = "horn";
  j["n"] = cert.q.n();
  j["lambda"] = seq_to_json(cert.lambda.values());
  j["d"] = seq_to_json(cert.d.values());
  if (include_q) j["q"] = matrix_to_json(cert.q.entries());
  if (a != nullptr) j["a"] = matrix_to_json(*a);
  if (s != nullptr) j["s"] = matrix_to_json(s->entries());
  json residuals;
  residuals["diag"] = cert.diag_residual;
  residuals["orth"] = cert.orth_residual;
  if (s != nullptr) {
    residuals["s_row"] = s->row_residual();
    residuals["s_col"] = s->col_residual();
  }
  j["residuals"] = std::move(residuals);
  json steps = json::array();
  for (const auto& st : cert.steps) {
    steps.push_back({{"k", st.k},
                     {"lambda_k", st.lambda_k},
                     {"lambda_k1", st.lambda_k1},
                     {"d_k", st.d_k},
                     {"lambda_k1_new", st.lambda_k1_new}});
  }
  j["steps"] = std::move(steps);
  return j;
}

json mirsky_to_json(const MirskyCertificate& cert, bool include_l, bool include_a) {
  json j;
  j["kind"] = "mirsky";
  j["n"] = cert.a.n();
  j["lambda"] = seq_to_json(cert.lambda.values(), cert.is_real);
  j["d"] = seq_to_json(cert.d.values(), cert.is_real);
  if (include_l) j["l"] = matrix_to_json(cert.l.entries(), cert.is_real);
  if (include_a) j["a"] = matrix_to_json(cert.a, cert.is_real);
  j["c_values"] = seq_to_json(cert.c_values, cert.is_real);
  j["growth"] = cert.growth;
  j["is_real"] = cert.is_real;
  j["residuals"] = {{"diag", cert.diag_residual}, {"similarity", cert.similarity_residual}};
  return j;
}

json report_to_json(const VerifyReport& report) {
  json j;
  j["pass"] = report.pass;
  j["errors"] = {{"diag", report.diag_err},
                 {"orth", report.orth_err},
                 {"eig", report.eig_err},
                 {"schur", report.schur_relation_err},
                 {"ds_row", report.ds_row_err},
                 {"ds_col", report.ds_col_err},
                 {"similarity", report.similarity_err},
                 {"charpoly", report.charpoly_err}};
  j["thresholds"] = {{"diag", report.thresholds.diag},
                     {"orth", report.thresholds.orth},
                     {"eig", report.thresholds.eig},
                     {"schur", report.thresholds.schur},
                     {"ds_sum", report.thresholds.ds_sum},
                     {"similarity", report.thresholds.similarity},
                     {"charpoly", report.thresholds.charpoly}};
  return j;
}

LoadedHornCert horn_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind") || j.at("kind") != "horn") {
    throw ParseError("not a horn certificate");
  }
  auto lambda = RealSeq(rseq_from_json(require(j, "lambda"), "lambda"));
  auto d = RealSeq(rseq_from_json(require(j, "d"), "d"));
  auto q_mat = matrix_from_json(require(j, "q"), "q");
  const int n = static_cast<int>(require(j, "n").get<int>());
  if (q_mat.n() != n || lambda.size() != static_cast<std::size_t>(n) ||
      d.size() != static_cast<std::size_t>(n)) {
    throw ParseError("inconsistent dimensions");
  }

  const json& residuals = require(j, "residuals");
  const double diag_resid = require(residuals, "diag").get<double>();
  const double orth_resid = require(residuals, "orth").get<double>();

  std::vector<PivotStep> steps;
  if (j.contains("steps")) {
    for (const auto& st : j.at("steps")) {
      steps.push_back({st.at("k").get<int>(), st.at("lambda_k").get<double>(),
                       st.at("lambda_k1").get<double>(), st.at("d_k").get<double>(),
                       st.at("lambda_k1_new").get<double>()});
    }
  }

  LoadedHornCert loaded{
      HornCertificate{OrthogonalMatrix::certify(std::move(q_mat)), std::move(lambda), std::move(d),
                      diag_resid, orth_resid, std::move(steps)},
      std::nullopt, std::nullopt};
  if (j.contains("a")) loaded.a = matrix_from_json(j.at("a"), "a");
  if (j.contains("s")) loaded.s = matrix_from_json(j.at("s"), "s");
  return loaded;
}

LoadedMirskyCert mirsky_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind") || j.at("kind") != "mirsky") {
    throw ParseError("not a mirsky certificate");
  }
  auto lambda = ComplexSeq(cseq_from_json(require(j, "lambda"), "lambda"));
  auto d = ComplexSeq(cseq_from_json(require(j, "d"), "d"));
  auto l_mat = cmatrix_from_json(require(j, "l"), "l");
  auto a = cmatrix_from_json(require(j, "a"), "a");
  auto c_values = cseq_from_json(require(j, "c_values"), "c_values");
  const int n = static_cast<int>(require(j, "n").get<int>());
  if (a.n() != n || l_mat.n() != n || lambda.size() != static_cast<std::size_t>(n) ||
      d.size() != static_cast<std::size_t>(n)) {
    throw ParseError("inconsistent dimensions");
  }
  const json& residuals = require(j, "residuals");
  const double diag_resid = require(residuals, "diag").get<double>();
  const double sim_resid = require(residuals, "similarity").get<double>();
  const double growth = require(j, "growth").get<double>();
  const bool is_real = require(j, "is_real").get<bool>();

  // from_matrix rejects tampered triangular structure; callers report that
  // as a failed verification, not a schema error.
  auto l = UnitLowerTriangular::from_matrix(std::move(l_mat));
  return LoadedMirskyCert{MirskyCertificate{std::move(l), std::move(a), std::move(lambda),
                                            std::move(d), std::move(c_values), sim_resid,
                                            diag_resid, growth, is_real}};
}

std::string matrix_to_csv(const RealMatrix& m) {
  std::string out;
  for (int i = 0; i < m.n(); ++i) {
    for (int j = 0; j < m.n(); ++j) {
      if (j > 0) out += ',';
      out += format17(m(i, j));
    }
    out += '\n';
  }
  return out;
}

std::string row_to_csv(const std::vector<double>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ',';
    out += format17(v[i]);
  }
  out += '\n';
  return out;
}

}  // namespace spectradiag::io
