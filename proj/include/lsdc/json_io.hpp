#pragma once

#include <string>

#include <json.hpp>

#include "lsdc/scheme.hpp"

namespace lsdc {

/// Matrix file format: {"q": <prime>, "matrix": [[...], ...]}.
/// Entries must already be residues in [0, q); anything else is an
/// IoError (inputs are data, not expressions to reduce).
nlohmann::json matrix_to_json(const FqMatrix& m);
FqMatrix matrix_from_json(const nlohmann::json& j);
FqMatrix load_matrix(const std::string& path);
void save_matrix(const FqMatrix& m, const std::string& path);

/// Scheme file format:
///   {"q", "K", "N", "L", "T", "F", "D", "E", "provenance"}
/// with matrices as row-major arrays of residues.  Serialization is
/// byte-stable (sorted keys, two-space indent, trailing newline).
nlohmann::json scheme_to_json(const Scheme& s);
Scheme scheme_from_json(const nlohmann::json& j);
std::string scheme_to_string(const Scheme& s);
Scheme scheme_from_string(const std::string& text);
Scheme load_scheme(const std::string& path);
void save_scheme(const Scheme& s, const std::string& path);

} // namespace lsdc
