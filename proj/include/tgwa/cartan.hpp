#pragma once

// Symmetric generalized Cartan matrices and the algebras T_q(C) built from them.

#include <vector>

#include "tgwa/element.hpp"

namespace tgwa {

using GCM = std::vector<std::vector<long>>;

/// Throws InvalidGCM with the first violated condition.
void validate_gcm(const GCM& c);

/// Connected components of the Coxeter graph (0-based, each sorted, ordered by least vertex).
std::vector<std::vector<std::size_t>> coxeter_components(const GCM& c);

/// Throws InvalidGCM, ZeroQ.
TGWDatum build_tq(const GCM& c, const Rational& q);

/// Indicator vectors of the Coxeter components.
Lattice kernel_basis_components(const GCM& c);

/// [k]_q = q^{-k+1} + q^{-k+3} + ... + q^{k-1}, [-k]_q = -[k]_q. Throws ZeroQ.
Rational quantum_int(long k, const Rational& q);

bool verify_relation(const Engine& engine, const Element& lhs, const Element& rhs);

}  // namespace tgwa
