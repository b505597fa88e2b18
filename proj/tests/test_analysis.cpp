#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace tgwa;
using namespace tgwa::testing;

namespace {

Lattice lat(std::size_t n, std::vector<IntVector> gens) { return Lattice::from_generators(n, std::move(gens)); }

// Brute-force kernel over a box: every g with sigma_g = id.
Lattice box_kernel(const TGWDatum& d, long r) {
  const std::size_t n = d.rank;
  std::vector<IntVector> hits;
  DegVec g(n, -r);
  for (;;) {
    bool fixed = true;
    for (std::size_t v = 0; v < d.variable_count() && fixed; ++v)
      fixed = twist_by_substitution(d, g, Poly::variable(d.variable_count(), v)) == Poly::variable(d.variable_count(), v);
    if (fixed) {
      IntVector iv;
      for (long x : g) iv.emplace_back(x);
      hits.push_back(iv);
    }
    std::size_t k = 0;
    while (k < n && g[k] == r) g[k++] = -r;
    if (k == n) break;
    ++g[k];
  }
  return Lattice::from_generators(n, hits);
}

}  // namespace

TEST_CASE("kernel of sigma on bundled data") {
  KernelDescription kh = kernel_of_sigma(fixture("kh_a2"));
  CHECK(kh.certified);
  CHECK(kh.method == KernelMethod::Translation);
  CHECK(kh.lattice == lat(2, {{1, 1}}));

  KernelDescription s = kernel_of_sigma(fixture("sergeev_1u1"));
  CHECK(s.certified);
  CHECK(s.lattice.is_zero());

  KernelDescription mu = kernel_of_sigma(fixture("ex_mu"));
  CHECK(mu.certified);
  CHECK(mu.lattice == Lattice::full(2));

  KernelDescription tq = kernel_of_sigma(fixture("tq_a2_q2"));
  CHECK(tq.certified);
  CHECK(tq.method == KernelMethod::TriangularQ);
  CHECK(tq.lattice == lat(2, {{1, 1}}));
}

TEST_CASE("certified kernels fix every variable and match a box search") {
  Rng rng(kSeed);
  for (const auto& d : datum_pool(rng)) {
    KernelDescription k = kernel_of_sigma(d);
    REQUIRE(k.certified);
    for (const auto& b : k.lattice.basis()) {
      DegVec g;
      for (const auto& x : b) g.push_back(x.get_si());
      for (std::size_t v = 0; v < d.variable_count(); ++v)
        CHECK(apply_endo(sigma_power(d, g), Poly::variable(d.variable_count(), v)) ==
              Poly::variable(d.variable_count(), v));
    }
    CHECK(k.lattice == box_kernel(d, 2));
  }
}

TEST_CASE("generic data fall back to an uncertified box search") {
  TGWDatum d;
  d.rank = 2;
  d.variables = {"u"};
  // u -> -u has order two; the kernel is 2Z x Z.
  d.sigma = {Endo({P("-u", d.variables)}, {P("-u", d.variables)}), Endo::identity(1)};
  d.t = {P("u^2+1", d.variables), P("1", d.variables)};
  d.mu.assign(2, RatVector(2, Rational(1)));
  d.family = FamilyTag::Generic;
  KernelDescription k = kernel_of_sigma(d, 2);
  CHECK_FALSE(k.certified);
  CHECK(k.method == KernelMethod::BoundedBox);
  CHECK(k.lattice == lat(2, {{2, 0}, {0, 1}}));
}

TEST_CASE("finitistic profiles") {
  CartanProfile kh = finitistic_profile(fixture("kh_a2"));
  REQUIRE(kh.all_known());
  CHECK(*kh.m[0][1] == 2);
  CHECK(*kh.m[1][0] == 2);
  CHECK(kh.cartan() == std::vector<std::vector<long>>{{2, -1}, {-1, 2}});
  CHECK(kh.m == kh.m_right);

  CartanProfile mu = finitistic_profile(fixture("ex_mu"));
  CHECK(mu.cartan() == std::vector<std::vector<long>>{{2, 0}, {0, 2}});

  CartanProfile s = finitistic_profile(fixture("sergeev_1u1"));
  CHECK(*s.m[0][1] == 2);
  CHECK(*s.m[1][0] == 2);
}

TEST_CASE("non-affine automorphisms may leave entries unknown") {
  TGWDatum d;
  d.rank = 2;
  d.variables = {"u", "v"};
  // sigma_1: u -> u + v^2 is polynomial of degree two; the orbit of t_2 = u grows without bound
  // only if v moves, so make sigma_1 move v too.
  d.sigma = {Endo({P("u+v^2", d.variables), P("v+1", d.variables)}, {P("u-(v-1)^2", d.variables), P("v-1", d.variables)}),
             Endo::identity(2)};
  d.t = {P("1", d.variables), P("u", d.variables)};
  d.mu.assign(2, RatVector(2, Rational(1)));
  CartanProfile p = finitistic_profile(d, 3);
  CHECK_FALSE(p.exact[0][1]);
  CHECK(p.m[1][0] == 1);
  CHECK_THROWS_AS(p.cartan(), UnknownEntries);
  CHECK_THROWS_AS(lie_type_is_A1n(p), UnknownEntries);
}

TEST_CASE("Lie type (A_1)^n") {
  CHECK(lie_type_is_A1n(finitistic_profile(fixture("ex_mu"))));
  CHECK_FALSE(lie_type_is_A1n(finitistic_profile(fixture("kh_a2"))));
  CHECK(lie_type_is_A1n(finitistic_profile(fixture("weyl"))));
}

TEST_CASE("Z^n-simplicity of R") {
  CHECK(zn_simplicity(fixture("sergeev_1u1")).is_yes());
  CHECK(zn_simplicity(fixture("ex_nonsimple_gwa")).is_yes());
  CHECK(zn_simplicity(fixture("ex_mu")).is_yes());
  Verdict tq = zn_simplicity(fixture("tq_a2_q2"));
  REQUIRE(tq.is_no());
  CHECK(tq.summary.find("H12^(-1)") != std::string::npos);

  // A fixed linear form: u - v is invariant under the diagonal translation.
  TGWDatum d;
  d.rank = 1;
  d.variables = {"u", "v"};
  d.sigma = {Endo({P("u+1", d.variables), P("v+1", d.variables)}, {P("u-1", d.variables), P("v-1", d.variables)})};
  d.t = {P("u", d.variables)};
  d.mu = {{Rational(1)}};
  Verdict fixed = zn_simplicity(d);
  REQUIRE(fixed.is_no());
  CHECK(fixed.data["generator"] == "-u + v");

  // Not recognized: a nonlinear automorphism without linear eigenvectors.
  TGWDatum g;
  g.rank = 1;
  g.variables = {"u", "v"};
  g.sigma = {Endo({P("v", g.variables), P("u+v^2", g.variables)}, {P("v-u^2", g.variables), P("u", g.variables)})};
  g.t = {P("1", g.variables)};
  g.mu = {{Rational(1)}};
  CHECK(zn_simplicity(g).is_unknown());
}

TEST_CASE("center containment") {
  {
    TGWDatum d = fixture("sergeev_1u1");
    Engine e(d);
    Verdict v = center_contained_in_R(e, kernel_of_sigma(d));
    CHECK(v.is_yes());
    CHECK(v.data["rule"] == "trivial-kernel");
  }
  {
    TGWDatum d = fixture("ex_mu");
    Engine e(d);
    Verdict v = center_contained_in_R(e, kernel_of_sigma(d));
    CHECK(v.is_yes());
    CHECK(v.data["rule"] == "quantum-torus");
  }
  {
    TGWDatum d = fixture("kh_a2");
    Engine e(d);
    Verdict v = center_contained_in_R(e, kernel_of_sigma(d), {4, 0});
    REQUIRE(v.is_no());
    CHECK(v.data["element"] == "X1*X2 - X2*X1");
    CHECK(v.data["degree"] == nlohmann::json::array({1, 1}));
    CHECK(v.data["verified_central"] == true);
    CHECK(v.data["verified_nonzero"] == true);
  }
  {
    // Rank-two GWA with sigma_2 = id: the GWA rule applies.
    TGWDatum d;
    d.rank = 2;
    d.variables = {"u"};
    d.sigma = {Endo({P("u+1", d.variables)}, {P("u-1", d.variables)}), Endo::identity(1)};
    d.t = {P("u", d.variables), P("1", d.variables)};
    d.mu.assign(2, RatVector(2, Rational(1)));
    Engine e(d);
    Verdict v = center_contained_in_R(e, kernel_of_sigma(d));
    REQUIRE(v.is_no());
    CHECK(v.data["rule"] == "gwa");
    CHECK(e.is_zero_in_A(e.commutator(E(e, "X2"), E(e, "X1"))));
  }
  {
    KernelDescription unk;
    unk.lattice = Lattice::full(2);
    Engine e(fixture("ex_mu"));
    CHECK(center_contained_in_R(e, unk).is_unknown());
  }
}

TEST_CASE("quantum torus rule agrees with the bounded search") {
  TGWDatum d = fixture("ex_mu");
  Engine e(d);
  KernelDescription k = kernel_of_sigma(d);
  // The bounded search explores every g in K with |g|_1 <= 4 and finds nothing central.
  TGWDatum as_generic = d;
  as_generic.variables = {"z"};
  as_generic.sigma = {Endo::identity(1), Endo::identity(1)};
  as_generic.t = {Poly::constant(1, 1), Poly::constant(1, 1)};
  Engine g(as_generic);
  Verdict bounded = center_contained_in_R(g, kernel_of_sigma(as_generic), {4, 0});
  CHECK(bounded.is_unknown());
  CHECK(center_contained_in_R(e, k).is_yes());
}

TEST_CASE("centralizer commutativity") {
  {
    TGWDatum d = fixture("tq_a2_q2");
    Engine e(d);
    Verdict v = centralizer_commutative(e, kernel_of_sigma(d));
    CHECK(v.is_yes());
    CHECK(v.data["rule"] == "rank-at-most-one");
  }
  {
    TGWDatum d = fixture("tq_a1a1_q2");
    Engine e(d);
    Verdict v = centralizer_commutative(e, kernel_of_sigma(d), 3);
    CHECK(v.is_yes());
  }
  {
    TGWDatum d = fixture("ex_mu");
    Engine e(d);
    Verdict v = centralizer_commutative(e, kernel_of_sigma(d), 1);
    REQUIRE(v.is_no());
    CHECK(v.data["bracket"] == "[X1,Y2]");
    CHECK(e.equal_in_A(E(e, "X1*Y2"), E(e, "2*Y2*X1")));
  }
}

TEST_CASE("standard words") {
  CHECK(standard_word({2, -1}) == Word{Letter::X(0), Letter::X(0), Letter::Y(1)});
  CHECK(standard_word({0, 0}).empty());
}
