#pragma once

// Sparse multivariate polynomials over Q and substitution endomorphisms.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tgwa/exact_arith.hpp"

namespace tgwa {

using Exponents = std::vector<std::uint32_t>;

/// Graded-lexicographic order: total degree first, then lexicographic.
struct GrlexLess {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

class Poly {
 public:
  using TermMap = std::map<Exponents, Rational, GrlexLess>;

  explicit Poly(std::size_t variable_count = 0) : nvars_(variable_count) {}
  static Poly constant(std::size_t variable_count, const Rational& c);
  static Poly variable(std::size_t variable_count, std::size_t index);
  static Poly monomial(Exponents e, const Rational& c);

  std::size_t variable_count() const noexcept { return nvars_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  /// Constant term value; meaningful as "the value" only when is_constant().
  Rational constant_term() const;
  int total_degree() const noexcept;  // -1 for the zero polynomial
  int degree_in(std::size_t var) const noexcept;
  /// Variables that occur with positive exponent.
  std::vector<std::size_t> support() const;
  bool is_affine_linear() const noexcept { return total_degree() <= 1; }

  /// Leading term under grlex (largest exponent). Requires !is_zero().
  const TermMap::value_type& leading_term() const { return *terms_.rbegin(); }

  void add_term(const Exponents& e, const Rational& c);

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  Poly operator-() const;
  Poly pow(unsigned k) const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.nvars_ == b.nvars_ && a.terms_ == b.terms_; }

  /// Substitutes values for every variable.
  Rational evaluate(std::span<const Rational> point) const;
  /// Univariate coefficient list (ascending) in variable var; other variables must be absent.
  RatVector univariate_coefficients(std::size_t var) const;
  static Poly from_univariate(std::size_t variable_count, std::size_t var, std::span<const Rational> coeffs);

 private:
  std::size_t nvars_;
  TermMap terms_;
};

/// Canonical printing: terms in descending grlex order, e.g. "u^2 - 3/2*u*v + 1".
std::string to_string(const Poly& p, const std::vector<std::string>& names);

/// Parses a polynomial expression over the named variables. Throws SyntaxError, UnknownVariable.
Poly parse_poly(std::string_view text, const std::vector<std::string>& names);

/// Substitution u_j -> images[j] with a declared inverse substitution.
class Endo {
 public:
  Endo() = default;
  Endo(std::vector<Poly> images, std::vector<Poly> inverse);
  static Endo identity(std::size_t variable_count);

  std::size_t variable_count() const noexcept { return images_.size(); }
  const std::vector<Poly>& images() const noexcept { return images_; }
  const std::vector<Poly>& declared_inverse() const noexcept { return inverse_; }

  Endo inverse() const { return Endo(inverse_, images_); }
  bool is_identity() const;

  friend bool operator==(const Endo& a, const Endo& b) { return a.images_ == b.images_; }

 private:
  std::vector<Poly> images_;
  std::vector<Poly> inverse_;
};

/// Applies the substitution images to p. Throws DimensionMismatch.
Poly substitute(const std::vector<Poly>& images, const Poly& p);
Poly apply_endo(const Endo& e, const Poly& p);

/// outer o inner, i.e. p -> outer(inner(p)); inverses compose in reverse.
Endo compose(const Endo& outer, const Endo& inner);
/// e^k for any integer k (negative powers use the declared inverse).
Endo power(const Endo& e, long k);

bool is_automorphism_pair(const Endo& e);
/// Throws DimensionMismatch.
bool endos_commute(const Endo& a, const Endo& b);

enum class FamilyTag { Translation, TriangularQ, Generic };

std::string to_string(FamilyTag f);
std::optional<FamilyTag> family_from_string(std::string_view s);

/// Translation vector c with e(u_j) = u_j + c_j, if e is a translation.
std::optional<RatVector> translation_vector(const Endo& e);
/// e(u_j) is a linear combination of u_0..u_j for every j.
bool is_lower_triangular_linear(const Endo& e);
/// Inverse of a lower-triangular linear substitution by back-substitution.
/// Requires is_lower_triangular_linear(images) with nonzero diagonal.
std::vector<Poly> triangular_inverse(const std::vector<Poly>& images);

/// Affine-linear part of an endomorphism as a matrix on (1, u_1, ..., u_n):
/// column j holds the coefficients of e(basis_j). Nullopt if some image is not affine.
std::optional<RatMatrix> affine_matrix(const Endo& e);

}  // namespace tgwa
