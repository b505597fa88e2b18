#pragma once

// Univariate gcd and resultants, rational roots, and a small Buchberger engine.

#include <vector>

#include "tgwa/poly.hpp"

namespace tgwa {

/// Monic gcd of two univariate coefficient lists (ascending). gcd(0,0) = 0.
RatVector univariate_gcd(RatVector a, RatVector b);

/// Monic gcd of univariate polynomials in variable var.
Poly univariate_gcd(const Poly& a, const Poly& b, std::size_t var);

/// Resultant of two univariate polynomials via the full Sylvester determinant.
Rational sylvester_resultant(const RatVector& f, const RatVector& g);

/// Res_u(t(u), t(u+x)) as a polynomial in one variable x. Throws ZeroPolynomial.
/// Every rational root rho of the result means gcd(t(u), t(u+rho)) is non-constant.
Poly shift_resultant(const RatVector& t);

/// Distinct rational roots of a univariate polynomial in var.
std::vector<Rational> rational_roots(const Poly& p, std::size_t var);

/// Reduced Groebner basis (grlex) of the ideal generated by the inputs.
std::vector<Poly> groebner_basis(const std::vector<Poly>& generators);

/// True iff 1 lies in the ideal generated by the inputs.
bool groebner_contains_one(const std::vector<Poly>& generators);

/// Remainder of p on division by a list of polynomials (grlex).
Poly normal_form(const Poly& p, const std::vector<Poly>& divisors);

/// Value of t(ell) when p can be written as a univariate polynomial t in the
/// affine form ell = u_k + sum c_j u_j (normalised so the variable k has coefficient 1).
struct LinearFormPresentation {
  Poly form;          // ell
  RatVector coeffs;   // p = sum coeffs[i] * ell^i
};
std::optional<LinearFormPresentation> as_polynomial_in_linear_form(const Poly& p);

}  // namespace tgwa
