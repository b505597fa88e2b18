#pragma once

// Exact rational arithmetic, rational linear algebra and integer lattices.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tgwa {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

/// Parses "p" or "p/q" with an optional sign. Throws SyntaxError.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& value);
std::string to_string(const IntVector& v);

Integer factorial(unsigned long n);

class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static RatMatrix from_rows(const std::vector<RatVector>& rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RatVector row(std::size_t r) const;
  void append_row(const RatVector& row);
  RatVector apply(std::span<const Rational> v) const;
  RatVector apply(std::span<const Integer> v) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

std::size_t rank(const RatMatrix& m);

/// Basis of { v in Q^cols : M v = 0 }, computed by fraction-free elimination.
std::vector<RatVector> rational_nullspace(const RatMatrix& m);

/// Some solution of M x = b, or nullopt if the system is inconsistent.
std::optional<RatVector> solve(const RatMatrix& m, std::span<const Rational> rhs);

/// A subgroup of Z^n stored by its row Hermite normal form, so equal lattices
/// have identical bases.
class Lattice {
 public:
  explicit Lattice(std::size_t ambient_rank = 0) : ambient_rank_(ambient_rank) {}

  /// Lattice generated by arbitrary (possibly dependent) integer vectors.
  static Lattice from_generators(std::size_t ambient_rank, std::vector<IntVector> generators);
  static Lattice full(std::size_t ambient_rank);

  std::size_t ambient_rank() const noexcept { return ambient_rank_; }
  std::size_t rank() const noexcept { return basis_.size(); }
  bool is_zero() const noexcept { return basis_.empty(); }
  const std::vector<IntVector>& basis() const noexcept { return basis_; }

  bool contains(const IntVector& v) const;
  /// Integer coordinates of v in the stored basis, if v lies in the lattice.
  std::optional<IntVector> coordinates(const IntVector& v) const;

  friend bool operator==(const Lattice& a, const Lattice& b) {
    return a.ambient_rank_ == b.ambient_rank_ && a.basis_ == b.basis_;
  }

  std::string to_string() const;

 private:
  std::size_t ambient_rank_;
  std::vector<IntVector> basis_;
};

/// Basis of { g in Z^cols : M g = 0 }.
Lattice integer_kernel(const RatMatrix& m);

/// Basis of { g in Z^m : prod values_j^g_j = 1 }. Throws ZeroValue.
Lattice rational_mult_relations(std::span<const Rational> values);

/// Joint version: every row imposes prod row_j^g_j = 1 on the same g.
Lattice rational_mult_relations(const std::vector<RatVector>& rows);

/// Distinct rational roots of sum coeffs[k] x^k. Throws ZeroPolynomial.
std::vector<Rational> rational_roots(std::span<const Rational> coeffs_ascending);

/// Determinant by fraction-free (Bareiss) elimination after clearing denominators.
Rational determinant(const RatMatrix& m);

}  // namespace tgwa
