#pragma once

#include <string>

#include <json.hpp>

#include "mvvd/matrix.hpp"
#include "mvvd/verify.hpp"

namespace mvvd {

/// Shared matrix document:
///   {"ring": "int" | "mod_p" | "poly",
///    "modulus": "<decimal>",        (mod_p only)
///    "variables": ["x", "y", ...],  (poly; inferred from the entries if absent)
///    "rows": [["<entry>", ...], ...]}
/// Entries are decimal strings, or polynomial text for the poly ring.
ExactMatrix matrix_from_json(const nlohmann::json& doc);
nlohmann::json matrix_to_json(const ExactMatrix& m);

ExactMatrix parse_matrix(const std::string& text);
ExactMatrix read_matrix_file(const std::string& path);

// Pretty-printed document with a trailing newline; keys sorted, so output
// is byte-stable.
std::string dump_document(const nlohmann::json& doc);
// Writes to path, or to stdout when path is empty or "-".
void write_document(const std::string& path, const nlohmann::json& doc);

nlohmann::json report_to_json(const VerificationReport& report);

}  // namespace mvvd
