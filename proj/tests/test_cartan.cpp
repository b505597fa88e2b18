#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace tgwa;
using namespace tgwa::testing;

namespace {

const GCM A2{{2, -1}, {-1, 2}};
const GCM A1A1{{2, 0}, {0, 2}};
const GCM A2A1{{2, -1, 0}, {-1, 2, 0}, {0, 0, 2}};

std::size_t var(const TGWDatum& d, const std::string& name) {
  for (std::size_t k = 0; k < d.variables.size(); ++k)
    if (d.variables[k] == name) return k;
  FAIL("missing variable " << name);
  return 0;
}

}  // namespace

TEST_CASE("GCM validation") {
  CHECK_NOTHROW(validate_gcm(A2));
  CHECK_NOTHROW(validate_gcm(A2A1));
  CHECK_THROWS_AS(validate_gcm({{2, -1}, {0, 2}}), InvalidGCM);
  CHECK_THROWS_AS(validate_gcm({{2, -1}, {-2, 2}}), InvalidGCM);
  CHECK_THROWS_AS(validate_gcm({{1, 0}, {0, 2}}), InvalidGCM);
  CHECK_THROWS_AS(validate_gcm({{2, 1}, {1, 2}}), InvalidGCM);
  CHECK_THROWS_AS(validate_gcm({{2, 0}}), InvalidGCM);
  CHECK_THROWS_AS(build_tq({{2, -1}, {0, 2}}, Rational(2)), InvalidGCM);
}

TEST_CASE("Coxeter components") {
  using C = std::vector<std::vector<std::size_t>>;
  CHECK(coxeter_components(A2) == C{{0, 1}});
  CHECK(coxeter_components(A1A1) == C{{0}, {1}});
  CHECK(coxeter_components(A2A1) == C{{0, 1}, {2}});
  CHECK(coxeter_components({{2, 0, -1}, {0, 2, 0}, {-1, 0, 2}}) == C{{0, 2}, {1}});
}

TEST_CASE("T_q(A_1 x A_1)") {
  TGWDatum d = build_tq(A1A1, Rational(2));
  REQUIRE(d.variables.size() == 1);
  CHECK(d.display_names()[0] == "H12^(0)");
  const Poly h = Poly::variable(1, 0);
  for (const auto& s : d.sigma) CHECK(apply_endo(s, h) == h);
  CHECK(d.t[0] == h);
  CHECK(d.t[1] == h);
  CHECK(d.family == FamilyTag::TriangularQ);
}

TEST_CASE("T_q(A_2)") {
  TGWDatum d = build_tq(A2, Rational(2));
  REQUIRE(d.variables.size() == 2);
  const std::size_t lo = var(d, "H1_2__0"), hi = var(d, "H1_2__2");
  const Poly hm = Poly::variable(2, lo), hp = Poly::variable(2, hi);
  CHECK(d.display_names()[lo] == "H12^(-1)");
  CHECK(d.display_names()[hi] == "H12^(1)");
  CHECK(apply_endo(d.sigma[1], hp) == Rational(2) * hp + hm);
  CHECK(apply_endo(d.sigma[1], hm) == Rational(1, 2) * hm);
  // sigma_1 inverts sigma_2 on these variables.
  CHECK(apply_endo(d.sigma[0], apply_endo(d.sigma[1], hp)) == hp);
  CHECK(apply_endo(d.sigma[0], apply_endo(d.sigma[1], hm)) == hm);
  CHECK(d.t[0] == hp);
  CHECK(d.t[1] == apply_endo(d.sigma[1].inverse(), hp));
  CHECK_THROWS_AS(build_tq(A2, Rational(0)), ZeroQ);
}

TEST_CASE("constructed data are consistent with profile C and component kernels") {
  for (const GCM& c : {A2, A1A1, A2A1}) {
    for (long q : {2, 3, 1}) {
      CAPTURE(q);
      TGWDatum d = build_tq(c, Rational(q));
      CHECK(validate_datum(d).valid);
      CHECK(check_consistency(d).is_yes());
      CartanProfile p = finitistic_profile(d);
      REQUIRE(p.all_known());
      CHECK(p.cartan() == c);
      KernelDescription k = kernel_of_sigma(d);
      CHECK(k.certified);
      CHECK(k.lattice == kernel_basis_components(c));
    }
  }
  CHECK(kernel_basis_components(A2A1) == Lattice::from_generators(3, {{1, 1, 0}, {0, 0, 1}}));
  CHECK(kernel_basis_components(A1A1) == Lattice::full(2));
}

TEST_CASE("quantum integers") {
  CHECK(quantum_int(0, Rational(7)) == 0);
  CHECK(quantum_int(2, Rational(2)) == Rational(5, 2));
  CHECK(quantum_int(3, Rational(1)) == 3);
  CHECK(quantum_int(-2, Rational(2)) == Rational(-5, 2));
  CHECK(quantum_int(3, Rational(-1)) == 3);
  CHECK(quantum_int(2, Rational(-1)) == -2);
  // Direct sum q^-2 + 1 + q^2.
  CHECK(quantum_int(3, Rational(3)) == Rational(1, 9) + 1 + 9);
  CHECK_THROWS_AS(quantum_int(2, Rational(0)), ZeroQ);
}

TEST_CASE("relation checks") {
  {
    Engine e(build_tq(A1A1, Rational(2)));
    CHECK(verify_relation(e, E(e, "X1*X2"), E(e, "X2*X1")));
    CHECK(verify_relation(e, E(e, "Y1*Y2"), E(e, "Y2*Y1")));
  }
  {
    Engine e(fixture("kh_a2"));
    CHECK(verify_relation(e, E(e, "X1^2*X2 - 2*X1*X2*X1 + X2*X1^2"), E(e, "0")));
    CHECK(verify_relation(e, E(e, "Y2*X2"), E(e, "X1*Y1")));
    CHECK(verify_relation(e, E(e, "X1*Y1"), E(e, "H+1")));
    CHECK_FALSE(verify_relation(e, E(e, "X1*X2"), E(e, "X2*X1")));
  }
}

TEST_CASE("cross-component generators commute") {
  Engine e(build_tq(A2A1, Rational(2)));
  for (auto [i, j] : {std::pair{1, 3}, std::pair{2, 3}}) {
    const std::string a = std::to_string(i), b = std::to_string(j);
    CHECK(verify_relation(e, E(e, "X" + a + "*X" + b), E(e, "X" + b + "*X" + a)));
    CHECK(verify_relation(e, E(e, "Y" + a + "*Y" + b), E(e, "Y" + b + "*Y" + a)));
    CHECK(verify_relation(e, E(e, "X" + a + "^2*X" + b), E(e, "X" + b + "*X" + a + "^2")));
  }
}

TEST_CASE("centralizers of constructed data are commutative") {
  for (const GCM& c : {A2, A1A1, A2A1}) {
    TGWDatum d = build_tq(c, Rational(2));
    Engine e(d);
    CHECK(centralizer_commutative(e, kernel_of_sigma(d), 2).is_yes());
  }
}
