#include "tgwa/datum.hpp"

#include <sstream>

#include "tgwa/errors.hpp"

namespace tgwa {

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::Yes: return "Yes";
    case Outcome::No: return "No";
    case Outcome::Unknown: return "Unknown";
  }
  return "Unknown";
}

Verdict Verdict::yes(std::string summary, nlohmann::json data) {
  return Verdict{Outcome::Yes, std::move(summary), std::move(data), {}};
}

Verdict Verdict::no(std::string summary, nlohmann::json data) {
  return Verdict{Outcome::No, std::move(summary), std::move(data), {}};
}

Verdict Verdict::unknown(std::vector<std::string> blockers) {
  std::string summary = "Unknown";
  if (!blockers.empty()) summary += ": " + blockers.front();
  return Verdict{Outcome::Unknown, std::move(summary), nlohmann::json::object(), std::move(blockers)};
}

nlohmann::json Verdict::to_json() const {
  nlohmann::json j;
  j["outcome"] = to_string(outcome);
  j["summary"] = summary;
  j["data"] = data;
  if (outcome == Outcome::Unknown) j["blockers"] = blockers;
  return j;
}

std::string to_string(const DegVec& g) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < g.size(); ++i) os << (i ? "," : "") << g[i];
  os << ')';
  return os.str();
}

ValidationReport validate_datum(const TGWDatum& d) {
  ValidationReport rep;
  auto problem = [&rep](std::string s) {
    rep.valid = false;
    rep.problems.push_back(std::move(s));
  };
  const std::size_t n = d.rank, nv = d.variable_count();
  if (d.sigma.size() != n) problem("expected " + std::to_string(n) + " automorphisms, got " + std::to_string(d.sigma.size()));
  if (d.t.size() != n) problem("expected " + std::to_string(n) + " elements t, got " + std::to_string(d.t.size()));
  if (d.mu.size() != n) problem("mu must have " + std::to_string(n) + " rows");
  if (!d.labels.empty() && d.labels.size() != nv) problem("labels must match the variable list");
  if (!rep.valid) return rep;

  bool shapes_ok = true;
  for (std::size_t i = 0; i < n; ++i) {
    const std::string si = std::to_string(i + 1);
    if (d.sigma[i].variable_count() != nv || d.sigma[i].declared_inverse().size() != nv) {
      problem("sigma_" + si + " does not act on exactly the declared variables");
      shapes_ok = false;
    } else {
      for (std::size_t j = 0; j < nv; ++j)
        if (d.sigma[i].images()[j].variable_count() != nv || d.sigma[i].declared_inverse()[j].variable_count() != nv)
          shapes_ok = false;
    }
    if (d.t[i].variable_count() != nv) {
      problem("t_" + si + " is over the wrong number of variables");
      shapes_ok = false;
    } else if (d.t[i].is_zero()) {
      problem("t_" + si + " is zero");
    }
    if (d.mu[i].size() != n) {
      problem("mu row " + si + " must have " + std::to_string(n) + " entries");
      continue;
    }
    for (std::size_t j = 0; j < n; ++j) {
      const std::string cell = "mu[" + si + "][" + std::to_string(j + 1) + "]";
      if (i == j && d.mu[i][j] != 1) problem(cell + " must be 1");
      if (i != j && d.mu[i][j] == 0) problem(cell + " not invertible");
    }
  }
  if (!shapes_ok) return rep;

  for (std::size_t i = 0; i < n; ++i)
    if (!is_automorphism_pair(d.sigma[i]))
      problem("sigma_" + std::to_string(i + 1) + ": declared inverse is not a two-sided inverse");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!endos_commute(d.sigma[i], d.sigma[j]))
        problem("sigma_" + std::to_string(i + 1) + " and sigma_" + std::to_string(j + 1) + " do not commute");

  for (std::size_t i = 0; i < n; ++i) {
    const std::string si = std::to_string(i + 1);
    if (d.family == FamilyTag::Translation && !translation_vector(d.sigma[i]))
      problem("sigma_" + si + " is not a translation but the family is translation");
    if (d.family == FamilyTag::TriangularQ && !is_lower_triangular_linear(d.sigma[i]))
      problem("sigma_" + si + " is not triangular linear but the family is triangular-q");
  }
  rep.regularly_graded = rep.valid;
  return rep;
}

Endo sigma_power(const TGWDatum& d, const DegVec& g) {
  if (g.size() != d.rank) throw DimensionMismatch("sigma_power: degree has wrong length");
  Endo acc = Endo::identity(d.variable_count());
  for (std::size_t i = 0; i < d.rank; ++i)
    if (g[i] != 0) acc = compose(acc, power(d.sigma[i], g[i]));
  return acc;
}

Verdict check_consistency(const TGWDatum& d) {
  const std::size_t n = d.rank;
  const auto& names = d.display_names();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Endo& si = d.sigma[i];
      const Endo& sj = d.sigma[j];
      Poly lhs = apply_endo(si, apply_endo(sj, d.t[i] * d.t[j]));
      Poly rhs = apply_endo(si, d.t[i]) * apply_endo(sj, d.t[j]) * Rational(d.mu[i][j] * d.mu[j][i]);
      if (lhs != rhs) {
        nlohmann::json w;
        w["condition"] = "pair";
        w["indices"] = {i + 1, j + 1};
        w["lhs"] = to_string(lhs, names);
        w["rhs"] = to_string(rhs, names);
        return Verdict::no("pair condition fails at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                               "): left side " + w["lhs"].get<std::string>() + ", right side " +
                               w["rhs"].get<std::string>(),
                           w);
      }
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = i + 1; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i || j == k) continue;
        const Poly& tj = d.t[j];
        Poly lhs = tj * apply_endo(d.sigma[i], apply_endo(d.sigma[k], tj));
        Poly rhs = apply_endo(d.sigma[i], tj) * apply_endo(d.sigma[k], tj);
        if (lhs != rhs) {
          nlohmann::json w;
          w["condition"] = "triple";
          w["indices"] = {i + 1, j + 1, k + 1};
          w["lhs"] = to_string(lhs, names);
          w["rhs"] = to_string(rhs, names);
          return Verdict::no("triple condition fails at (i,j,k) = (" + std::to_string(i + 1) + "," +
                                 std::to_string(j + 1) + "," + std::to_string(k + 1) + ")",
                             w);
        }
      }
  return Verdict::yes("consistency conditions hold; R embeds in the construction");
}

}  // namespace tgwa
