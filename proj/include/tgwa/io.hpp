#pragma once

// Datum files, element expressions, Cartan-matrix input, bundled fixtures and reports.

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "tgwa/cartan.hpp"
#include "tgwa/element.hpp"

namespace tgwa {

struct DatumFile {
  TGWDatum datum;
  std::string description;
  std::string provenance;
  /// SHA-256 of the raw input bytes.
  std::string digest;
};

/// Throws SchemaError, SyntaxError, ValidationError.
DatumFile parse_datum(std::string_view text);
/// A path, or the name of a bundled fixture (with or without ".json") if no such file exists.
/// Throws IoError in addition to the parse errors.
DatumFile load_datum(const std::string& path);

nlohmann::json datum_to_json(const DatumFile& f);
std::string write_datum(const DatumFile& f);

/// Polynomial grammar plus the generators X1..Xn, Y1..Yn. Ring variables take
/// precedence over generator tokens of the same spelling.
Element parse_element(const Engine& engine, std::string_view text);

/// JSON integer matrix, bare or as {"cartan": [[...]]}. Throws SchemaError, InvalidGCM.
GCM parse_gcm(std::string_view text);
GCM load_gcm(const std::string& path);

std::vector<std::string> bundled_fixture_names();
/// Throws IoError for an unknown name.
std::string bundled_fixture(std::string_view name);

std::string sha256_hex(std::string_view bytes);
std::string read_file(const std::string& path);

}  // namespace tgwa
