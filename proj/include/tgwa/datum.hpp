#pragma once

// TGW data (R, sigma, t, mu) over a polynomial ring, validation and consistency.

#include <string>
#include <vector>

#include "tgwa/poly.hpp"
#include "tgwa/verdict.hpp"

namespace tgwa {

using DegVec = std::vector<long>;

struct TGWDatum {
  std::string name;
  std::size_t rank = 0;
  std::vector<std::string> variables;
  std::vector<Endo> sigma;
  std::vector<Poly> t;
  std::vector<RatVector> mu;
  FamilyTag family = FamilyTag::Generic;
  /// Optional display names for the variables (same length as variables, or empty).
  std::vector<std::string> labels;

  std::size_t variable_count() const noexcept { return variables.size(); }
  const std::vector<std::string>& display_names() const noexcept {
    return labels.empty() ? variables : labels;
  }
};

struct ValidationReport {
  bool valid = true;
  /// Holds when valid: every t_i is nonzero in a domain, hence regular.
  bool regularly_graded = false;
  std::vector<std::string> problems;
};

ValidationReport validate_datum(const TGWDatum& d);

/// sigma_g = sigma_1^{g_1} o ... o sigma_n^{g_n}.
Endo sigma_power(const TGWDatum& d, const DegVec& g);

/// Yes, or No with the first failing index pair or triple (1-based).
Verdict check_consistency(const TGWDatum& d);

std::string to_string(const DegVec& g);

}  // namespace tgwa
