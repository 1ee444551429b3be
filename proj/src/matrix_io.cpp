#include "mvvd/matrix_io.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "mvvd/error.hpp"

namespace mvvd {

using nlohmann::json;

namespace {

std::string entry_text(const json& entry) {
  if (entry.is_string()) return entry.get<std::string>();
  if (entry.is_number_integer()) return entry.dump();
  throw Error(ErrorCode::parse_error, "matrix entry must be a string or integer, got " + entry.dump());
}

Ring ring_from_json(const json& doc) {
  if (!doc.contains("ring") || !doc["ring"].is_string()) throw Error(ErrorCode::parse_error, "missing 'ring' field");
  const std::string kind = doc["ring"].get<std::string>();
  if (kind == "int") return Ring::integers();
  if (kind == "mod_p") {
    if (!doc.contains("modulus")) return Ring::prime_field();
    return Ring::prime_field(PrimeField::from_string(entry_text(doc["modulus"])));
  }
  if (kind == "poly") {
    std::vector<std::string> names;
    if (doc.contains("variables")) {
      if (!doc["variables"].is_array()) throw Error(ErrorCode::parse_error, "'variables' must be a list");
      for (const auto& v : doc["variables"]) {
        if (!v.is_string()) throw Error(ErrorCode::parse_error, "variable names must be strings");
        names.push_back(v.get<std::string>());
      }
    } else if (doc.contains("rows") && doc["rows"].is_array()) {
      for (const auto& row : doc["rows"]) {
        if (!row.is_array()) continue;
        for (const auto& e : row) {
          for (auto& name : scan_identifiers(entry_text(e))) {
            if (std::find(names.begin(), names.end(), name) == names.end()) names.push_back(std::move(name));
          }
        }
      }
    }
    return Ring::polynomials(make_variables(std::move(names)));
  }
  throw Error(ErrorCode::parse_error, "unknown ring '" + kind + "'");
}

}  // namespace

ExactMatrix matrix_from_json(const json& doc) {
  if (!doc.is_object()) throw Error(ErrorCode::parse_error, "matrix document must be an object");
  Ring ring = ring_from_json(doc);
  if (!doc.contains("rows") || !doc["rows"].is_array()) throw Error(ErrorCode::parse_error, "missing 'rows' list");
  const auto& rows = doc["rows"];
  const std::size_t m = rows.size();
  const std::size_t c = m == 0 ? 0 : rows[0].size();
  std::vector<RingValue> entries;
  entries.reserve(m * c);
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != c) throw Error(ErrorCode::shape_violation, "rows must be lists of equal length");
    for (const auto& e : row) entries.push_back(ring.parse(entry_text(e)));
  }
  return ExactMatrix(std::move(ring), m, c, std::move(entries));
}

json matrix_to_json(const ExactMatrix& m) {
  json doc;
  doc["ring"] = std::string(m.ring().name());
  if (m.ring().kind() == RingKind::prime_field) doc["modulus"] = std::to_string(m.ring().field().modulus());
  if (m.ring().kind() == RingKind::polynomial) doc["variables"] = *m.ring().variables();
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    rows.push_back(std::move(row));
  }
  doc["rows"] = std::move(rows);
  return doc;
}

ExactMatrix parse_matrix(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::parse_error, std::string("malformed JSON: ") + e.what());
  }
  return matrix_from_json(doc);
}

ExactMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::io_error, "cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_matrix(buffer.str());
}

std::string dump_document(const json& doc) { return doc.dump(2) + "\n"; }

void write_document(const std::string& path, const json& doc) {
  const std::string text = dump_document(doc);
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::io_error, "cannot write '" + path + "'");
  out << text;
}

json report_to_json(const VerificationReport& report) {
  json doc;
  doc["identity"] = report.identity;
  doc["n"] = report.n;
  doc["d"] = report.d;
  doc["ring"] = report.ring;
  doc["lhs"] = report.lhs.to_string();
  doc["rhs"] = report.rhs.to_string();
  doc["verdict"] = std::string(to_string(report.verdict));
  if (report.sign) doc["sign"] = *report.sign;
  if (report.seed) doc["seed"] = *report.seed;
  if (!report.checks.empty()) {
    json checks = json::array();
    for (const auto& c : report.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}});
    doc["checks"] = std::move(checks);
  }
  return doc;
}

}  // namespace mvvd
