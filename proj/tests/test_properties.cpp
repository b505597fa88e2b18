#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "properties.hpp"

using namespace tgwa::testing;

namespace {

void expect(const PropertyResult& r) {
  INFO(r.first_failure);
  CHECK(r.cases == 100);
  CHECK(r.ok());
}

}  // namespace

TEST_CASE("reduction preserves degree") { expect(prop_degree_preservation()); }
TEST_CASE("degree-zero words reduce to ring elements") { expect(prop_degree_zero_totality()); }
TEST_CASE("gradation form adjoint identity") { expect(prop_gamma_adjoint()); }
TEST_CASE("gradation form twist identity") { expect(prop_gamma_twist()); }
TEST_CASE("reduced monomials are nonzero in A") { expect(prop_monomial_nonvanishing()); }
TEST_CASE("kernel components centralize R") { expect(prop_kernel_centralizes()); }
TEST_CASE("multiplication is associative") { expect(prop_associativity()); }
TEST_CASE("reduction agrees with the relation oracle") { expect(prop_oracle_equivalence()); }
