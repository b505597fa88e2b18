#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace tgwa;
using namespace tgwa::testing;

namespace {

const char* kMinimal = R"({
  "name": "tiny", "rank": 1, "variables": ["u"],
  "sigma": [{"map": {"u": "u+1"}, "inverse": {"u": "u-1"}}],
  "t": ["u"], "mu": [["1"]], "family": "translation"
})";

std::string replace(std::string s, const std::string& from, const std::string& to) {
  const auto pos = s.find(from);
  REQUIRE(pos != std::string::npos);
  return s.replace(pos, from.size(), to);
}

template <class E>
std::string message_of(const std::string& text) {
  try {
    (void)parse_datum(text);
  } catch (const E& e) {
    return e.what();
  }
  FAIL("no exception");
  return {};
}

}  // namespace

TEST_CASE("bundled data load") {
  DatumFile mu = load_datum("ex_mu.json");
  CHECK(mu.datum.mu[0][1] == 2);
  CHECK(mu.datum.mu[1][0] == Rational(1, 2));
  CHECK(mu.datum.variables.empty());

  DatumFile s = load_datum("sergeev_1u1");
  CHECK(to_string(s.datum.t[0], s.datum.variables) == "-h1 + h2");
  CHECK(to_string(s.datum.t[1], s.datum.variables) == "-h1 + h2 + 1");
  CHECK(s.digest.size() == 64);
  CHECK_THROWS_AS(load_datum("no_such_fixture"), IoError);
}

TEST_CASE("every bundled fixture loads and is consistent") {
  const auto names = bundled_fixture_names();
  CHECK(names.size() == 7);
  for (const auto& name : names) {
    CAPTURE(name);
    DatumFile f = load_datum(name);
    CHECK(validate_datum(f.datum).valid);
    CHECK(check_consistency(f.datum).is_yes());
  }
}

TEST_CASE("minimal datum and defaults") {
  DatumFile f = parse_datum(kMinimal);
  CHECK(f.datum.name == "tiny");
  CHECK(f.datum.family == FamilyTag::Translation);

  // Unlisted variables default to identity; a missing inverse is derived.
  std::string two = R"({"rank": 1, "variables": ["u", "v"], "sigma": [{"map": {"u": "u+1"}}],
                        "t": ["v"], "mu": [["1"]]})";
  DatumFile g = parse_datum(two);
  CHECK(apply_endo(g.datum.sigma[0], Poly::variable(2, 1)) == Poly::variable(2, 1));
  CHECK(g.datum.sigma[0].declared_inverse()[0] == P("u-1", g.datum.variables));
}

TEST_CASE("invalid inputs") {
  CHECK(message_of<ValidationError>(
            replace(bundled_fixture("ex_mu"), "\"2\"]", "\"0\"]")) == std::string("mu[1][2] not invertible"));
  CHECK_THROWS_AS(parse_datum(replace(kMinimal, "\"rank\": 1", "\"rank\": 0")), SchemaError);
  CHECK_THROWS_AS(parse_datum(replace(kMinimal, "\"rank\": 1", "\"rank\": 2")), SchemaError);
  CHECK_THROWS_AS(parse_datum(replace(kMinimal, "[\"u\"], \"mu\"", "[\"w\"], \"mu\"")), SchemaError);
  CHECK_THROWS_AS(parse_datum(replace(kMinimal, "\"u+1\"", "\"u++\"")), SyntaxError);
  CHECK_THROWS_AS(parse_datum(replace(kMinimal, "\"u-1\"", "\"u-2\"")), ValidationError);
  CHECK_THROWS_AS(parse_datum("{not json"), SyntaxError);
  CHECK_THROWS_AS(parse_datum(replace(kMinimal, "[\"1\"]]", "[\"1/0\"]]")), SyntaxError);
  CHECK_THROWS_AS(parse_datum(replace(kMinimal, "\"translation\"", "\"other\"")), SchemaError);
}

TEST_CASE("write then load is the identity") {
  for (const auto& name : bundled_fixture_names()) {
    CAPTURE(name);
    DatumFile a = load_datum(name);
    DatumFile b = parse_datum(write_datum(a));
    CHECK(b.datum.rank == a.datum.rank);
    CHECK(b.datum.variables == a.datum.variables);
    CHECK(b.datum.labels == a.datum.labels);
    CHECK(b.datum.t == a.datum.t);
    CHECK(b.datum.mu == a.datum.mu);
    CHECK(b.datum.family == a.datum.family);
    for (std::size_t i = 0; i < a.datum.rank; ++i) {
      CHECK(b.datum.sigma[i].images() == a.datum.sigma[i].images());
      CHECK(b.datum.sigma[i].declared_inverse() == a.datum.sigma[i].declared_inverse());
    }
    CHECK(write_datum(b) == write_datum(a));
  }
}

TEST_CASE("element expressions") {
  Engine e(fixture("kh_a2"));
  CHECK(parse_element(e, "X1*X2") == e.from_word({Letter::X(0), Letter::X(1)}));
  CHECK(parse_element(e, "X1^2") == parse_element(e, "X1*X1"));
  CHECK(parse_element(e, "H*Y1 - Y1*H") == parse_element(e, "Y1"));
  CHECK_THROWS_AS(parse_element(e, "X3"), UnknownVariable);
  CHECK_THROWS_AS(parse_element(e, "X1 X2"), SyntaxError);
}

TEST_CASE("Cartan matrix input") {
  CHECK(parse_gcm("[[2,-1],[-1,2]]") == GCM{{2, -1}, {-1, 2}});
  CHECK(parse_gcm(R"({"cartan": [[2,0],[0,2]]})") == GCM{{2, 0}, {0, 2}});
  CHECK_THROWS_AS(parse_gcm("[[2,-1],[0,2]]"), InvalidGCM);
  CHECK_THROWS_AS(parse_gcm("[[2,\"a\"],[0,2]]"), SchemaError);
}

TEST_CASE("digests") {
  CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  CHECK(load_datum("weyl").digest == sha256_hex(bundled_fixture("weyl")));
}
