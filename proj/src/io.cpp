#include "tgwa/io.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <openssl/evp.h>

#include "tgwa/errors.hpp"
#include "tgwa/expr_parser.hpp"

namespace tgwa {

namespace detail {
// Generated at build time from fixtures/*.json.
extern const std::vector<std::pair<std::string_view, std::string_view>> kEmbeddedFixtures;
}  // namespace detail

using nlohmann::json;

namespace {

const json& require(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError(std::string("missing field '") + key + "'");
  return *it;
}

std::string require_string(const json& v, const std::string& where) {
  if (!v.is_string()) throw SchemaError(where + " must be a string");
  return v.get<std::string>();
}

Poly parse_at(const std::string& text, const std::vector<std::string>& names, const std::string& where) {
  try {
    return parse_poly(text, names);
  } catch (const SyntaxError& e) {
    throw SyntaxError(e.position(), where + ": " + e.detail());
  } catch (const UnknownVariable& e) {
    throw SchemaError(where + ": " + e.what());
  }
}

std::vector<Poly> parse_map(const json& m, const std::vector<std::string>& names, const std::string& where) {
  const std::size_t nv = names.size();
  std::vector<Poly> images;
  for (std::size_t v = 0; v < nv; ++v) images.push_back(Poly::variable(nv, v));
  if (!m.is_object()) throw SchemaError(where + " must be an object");
  for (const auto& [var, img] : m.items()) {
    auto it = std::find(names.begin(), names.end(), var);
    if (it == names.end()) throw SchemaError(where + ": unknown variable '" + var + "'");
    images[static_cast<std::size_t>(it - names.begin())] =
        parse_at(require_string(img, where + "." + var), names, where + "." + var);
  }
  return images;
}

json map_to_json(const std::vector<Poly>& images, const std::vector<std::string>& names) {
  json m = json::object();
  for (std::size_t v = 0; v < images.size(); ++v)
    if (images[v] != Poly::variable(names.size(), v)) m[names[v]] = to_string(images[v], names);
  return m;
}

struct ElementOps {
  using Value = Element;
  const Engine& engine;
  const std::vector<std::string>& names;

  Value constant(const Rational& c) { return Element::scalar(Poly::constant(engine.variable_count(), c)); }
  Value identifier(std::string_view name, std::size_t pos) {
    auto it = std::find(names.begin(), names.end(), name);
    if (it != names.end())
      return Element::scalar(Poly::variable(engine.variable_count(), static_cast<std::size_t>(it - names.begin())));
    if (name.size() >= 2 && (name[0] == 'X' || name[0] == 'Y')) {
      std::size_t k = 0;
      bool digits = name[1] != '0';
      for (std::size_t i = 1; i < name.size() && digits; ++i) {
        if (!std::isdigit(static_cast<unsigned char>(name[i]))) digits = false;
        else k = k * 10 + static_cast<std::size_t>(name[i] - '0');
      }
      if (digits && k >= 1 && k <= engine.rank()) {
        auto idx = static_cast<std::uint32_t>(k - 1);
        return engine.generator(name[0] == 'X' ? Letter::X(idx) : Letter::Y(idx));
      }
    }
    throw UnknownVariable(pos, std::string(name));
  }
  Value add(Value a, Value b) { return a + b; }
  Value sub(Value a, Value b) { return a - b; }
  Value mul(Value a, Value b) { return engine.multiply(a, b); }
  Value neg(Value a) { return -a; }
  Value one() { return Element::scalar(engine.one()); }
};

}  // namespace

std::string sha256_hex(std::string_view bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw Error("sha256 failed");
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

DatumFile parse_datum(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SyntaxError(e.byte, "invalid JSON");
  }
  if (!j.is_object()) throw SchemaError("datum must be a JSON object");

  DatumFile f;
  f.digest = sha256_hex(text);
  TGWDatum& d = f.datum;
  if (j.contains("name")) d.name = require_string(j["name"], "name");
  if (j.contains("description")) f.description = require_string(j["description"], "description");
  if (j.contains("provenance")) f.provenance = require_string(j["provenance"], "provenance");

  const json& rank = require(j, "rank");
  if (!rank.is_number_integer() || rank.get<long>() < 1) throw SchemaError("rank must be a positive integer");
  const auto n = rank.get<std::size_t>();
  d.rank = n;

  const json& vars = require(j, "variables");
  if (!vars.is_array()) throw SchemaError("variables must be an array");
  for (std::size_t v = 0; v < vars.size(); ++v) {
    std::string name = require_string(vars[v], "variables[" + std::to_string(v + 1) + "]");
    if (std::find(d.variables.begin(), d.variables.end(), name) != d.variables.end())
      throw SchemaError("duplicate variable '" + name + "'");
    d.variables.push_back(std::move(name));
  }
  if (j.contains("labels")) {
    const json& labels = j["labels"];
    if (!labels.is_array() || labels.size() != vars.size())
      throw SchemaError("labels must be an array with one entry per variable");
    for (std::size_t v = 0; v < labels.size(); ++v)
      d.labels.push_back(require_string(labels[v], "labels[" + std::to_string(v + 1) + "]"));
  }

  const json& sigma = require(j, "sigma");
  if (!sigma.is_array() || sigma.size() != n) throw SchemaError("sigma must list rank entries");
  for (std::size_t i = 0; i < n; ++i) {
    const std::string where = "sigma[" + std::to_string(i + 1) + "]";
    if (!sigma[i].is_object()) throw SchemaError(where + " must be an object");
    std::vector<Poly> images = parse_map(sigma[i].value("map", json::object()), d.variables, where + ".map");
    std::vector<Poly> inverse;
    if (sigma[i].contains("inverse")) {
      inverse = parse_map(sigma[i]["inverse"], d.variables, where + ".inverse");
    } else if (auto shift = translation_vector(Endo(images, images))) {
      for (std::size_t v = 0; v < images.size(); ++v)
        inverse.push_back(Poly::variable(images.size(), v) - Poly::constant(images.size(), (*shift)[v]));
    } else if (is_lower_triangular_linear(Endo(images, images))) {
      inverse = triangular_inverse(images);
    } else {
      throw SchemaError(where + ": missing field 'inverse'");
    }
    d.sigma.emplace_back(std::move(images), std::move(inverse));
  }

  const json& t = require(j, "t");
  if (!t.is_array() || t.size() != n) throw SchemaError("t must list rank entries");
  for (std::size_t i = 0; i < n; ++i) {
    const std::string where = "t[" + std::to_string(i + 1) + "]";
    d.t.push_back(parse_at(require_string(t[i], where), d.variables, where));
  }

  const json& mu = require(j, "mu");
  if (!mu.is_array() || mu.size() != n) throw SchemaError("mu must be a rank x rank matrix");
  for (std::size_t i = 0; i < n; ++i) {
    if (!mu[i].is_array() || mu[i].size() != n) throw SchemaError("mu must be a rank x rank matrix");
    RatVector row;
    for (std::size_t k = 0; k < n; ++k) {
      const std::string where = "mu[" + std::to_string(i + 1) + "][" + std::to_string(k + 1) + "]";
      const std::string s = require_string(mu[i][k], where);
      try {
        row.push_back(parse_rational(s));
      } catch (const SyntaxError& e) {
        throw SyntaxError(e.position(), where + ": " + e.detail());
      }
    }
    d.mu.push_back(std::move(row));
  }

  if (j.contains("family")) {
    auto fam = family_from_string(require_string(j["family"], "family"));
    if (!fam) throw SchemaError("family must be translation, triangular-q or generic");
    d.family = *fam;
  }

  ValidationReport report = validate_datum(d);
  if (!report.valid) throw ValidationError(report.problems.front());
  return f;
}

DatumFile load_datum(const std::string& path) {
  if (std::filesystem::exists(path)) return parse_datum(read_file(path));
  std::string name = std::filesystem::path(path).filename().string();
  if (name.size() > 5 && name.ends_with(".json")) name.resize(name.size() - 5);
  for (const auto& [fixture, _] : detail::kEmbeddedFixtures)
    if (fixture == name) return parse_datum(bundled_fixture(name));
  throw IoError("cannot read '" + path + "'");
}

json datum_to_json(const DatumFile& f) {
  const TGWDatum& d = f.datum;
  json j;
  j["name"] = d.name;
  if (!f.description.empty()) j["description"] = f.description;
  if (!f.provenance.empty()) j["provenance"] = f.provenance;
  j["rank"] = d.rank;
  j["variables"] = d.variables;
  if (!d.labels.empty()) j["labels"] = d.labels;
  j["sigma"] = json::array();
  for (const auto& s : d.sigma)
    j["sigma"].push_back({{"map", map_to_json(s.images(), d.variables)},
                          {"inverse", map_to_json(s.declared_inverse(), d.variables)}});
  j["t"] = json::array();
  for (const auto& p : d.t) j["t"].push_back(to_string(p, d.variables));
  j["mu"] = json::array();
  for (const auto& row : d.mu) {
    json r = json::array();
    for (const auto& c : row) r.push_back(to_string(c));
    j["mu"].push_back(r);
  }
  j["family"] = to_string(d.family);
  return j;
}

std::string write_datum(const DatumFile& f) { return datum_to_json(f).dump(2) + "\n"; }

Element parse_element(const Engine& engine, std::string_view text) {
  ElementOps ops{engine, engine.datum().variables};
  ExpressionParser<ElementOps> parser(text, ops);
  return parser.parse();
}

GCM parse_gcm(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SyntaxError(e.byte, "invalid JSON");
  }
  if (j.is_object()) j = require(j, "cartan");
  if (!j.is_array() || j.empty()) throw SchemaError("Cartan matrix must be a nonempty array of rows");
  GCM c;
  for (const auto& row : j) {
    if (!row.is_array()) throw SchemaError("Cartan matrix rows must be arrays");
    std::vector<long> r;
    for (const auto& e : row) {
      if (!e.is_number_integer()) throw SchemaError("Cartan matrix entries must be integers");
      r.push_back(e.get<long>());
    }
    c.push_back(std::move(r));
  }
  validate_gcm(c);
  return c;
}

GCM load_gcm(const std::string& path) { return parse_gcm(read_file(path)); }

std::vector<std::string> bundled_fixture_names() {
  std::vector<std::string> out;
  for (const auto& [name, _] : detail::kEmbeddedFixtures) out.emplace_back(name);
  return out;
}

std::string bundled_fixture(std::string_view name) {
  for (const auto& [fixture, text] : detail::kEmbeddedFixtures)
    if (fixture == name) return std::string(text);
  throw IoError("no bundled fixture named '" + std::string(name) + "'");
}

}  // namespace tgwa
