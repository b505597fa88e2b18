#pragma once

// Kernel of sigma, finitistic profile, Lie type, Z^n-simplicity of R,
// the center test and centralizer commutativity.

#include <optional>
#include <vector>

#include "tgwa/element.hpp"
#include "tgwa/verdict.hpp"

namespace tgwa {

enum class KernelMethod { Translation, TriangularQ, BoundedBox };

std::string to_string(KernelMethod m);

struct KernelDescription {
  Lattice lattice;
  bool certified = false;
  KernelMethod method = KernelMethod::BoundedBox;
  long box_radius = 0;  // meaningful for BoundedBox

  nlohmann::json to_json() const;
};

/// Certified for translation and triangular-q data; otherwise a box search.
KernelDescription kernel_of_sigma(const TGWDatum& d, long box_radius = 3);

struct CartanProfile {
  std::size_t rank = 0;
  /// m[i][j] for i != j; nullopt when no relation was found within the bound.
  std::vector<std::vector<std::optional<long>>> m;
  /// Right-sided minima, reported alongside m.
  std::vector<std::vector<std::optional<long>>> m_right;
  /// Entry (i,j) is exact when sigma_i is affine-linear.
  std::vector<std::vector<bool>> exact;

  bool all_known() const;
  /// a_ii = 2, a_ij = 1 - m_ij. Throws UnknownEntries.
  std::vector<std::vector<long>> cartan() const;
  nlohmann::json to_json() const;
};

CartanProfile finitistic_profile(const TGWDatum& d, long bound = 64);

/// Throws UnknownEntries.
bool lie_type_is_A1n(const CartanProfile& profile);

Verdict zn_simplicity(const TGWDatum& d);

struct CenterOptions {
  long deg_cap = 4;
  long coeff_cap = 2;
};

Verdict center_contained_in_R(const Engine& engine, const KernelDescription& K, CenterOptions opts = {});

Verdict centralizer_commutative(const Engine& engine, const KernelDescription& K, long m_cap = 3);

/// Monic Z_1^{(g_1)}...Z_n^{(g_n)} with Z^{(k)} = X^k for k >= 0 and Y^{-k} otherwise.
Word standard_word(const DegVec& g);

}  // namespace tgwa
