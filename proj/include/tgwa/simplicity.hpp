#pragma once

// Simplicity deciders: the rank-one criterion, type (A_1)^n, the Weyl-pair
// certificate and the general orchestrator.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tgwa/analysis.hpp"

namespace tgwa {

struct OreConditionResult {
  std::size_t index = 0;  // 0-based generator index
  std::size_t rank = 1;
  /// (d, holds) for d = 1..d_bound.
  std::vector<std::pair<long, bool>> per_d;
  bool all_d_certificate = false;
  std::optional<long> witness_d;
  /// Generators of the proper ideal (t_i, sigma_i^d(t_i)) at the witness, printed.
  std::vector<std::string> witness_ideal;
  std::string method;  // "constant", "fixed-form", "resultant", "bounded"

  Verdict verdict() const;
  nlohmann::json to_json() const;
};

OreConditionResult ore_ideal_condition(const TGWDatum& d, std::size_t i, long d_bound = 25);

struct SimplicityReport {
  Verdict verdict;  // Yes = Simple, No = NotSimple
  std::map<std::string, Verdict> conditions;
  std::string theorem_used;

  std::string headline() const;
  nlohmann::json to_json() const;
};

struct SimplicityOptions {
  long d_bound = 25;
  long box_radius = 3;
  long weyl_max_degree = 3;
  CenterOptions center;
};

/// Requires rank 1, one variable and sigma(u) = a*u + b. Throws FamilyMismatch.
SimplicityReport jordan_rank1(const Engine& engine, SimplicityOptions opts = {});

/// Nested brackets with -Y_i against every monic X-word of per-index degree <= max_degree.
Verdict weyl_pair_certificate(const Engine& engine, long max_degree = 3);

/// Requires a fully known profile of type (A_1)^n. Throws FamilyMismatch.
SimplicityReport a1n_simplicity(const Engine& engine, SimplicityOptions opts = {});

SimplicityReport orchestrate_simplicity(const Engine& engine, SimplicityOptions opts = {});

/// ad(z)(a) = z*a - a*z.
Element ad(const Engine& engine, const Element& z, const Element& a);

}  // namespace tgwa
