#include "tgwa/simplicity.hpp"

#include <algorithm>

#include "tgwa/errors.hpp"
#include "tgwa/poly_tools.hpp"

namespace tgwa {

namespace {

struct IdealCheck {
  bool unit = false;
  std::vector<std::string> generators;  // of the ideal when proper
};

IdealCheck two_generator_ideal(const Poly& a, const Poly& b, const std::vector<std::string>& names) {
  const std::size_t nv = a.variable_count();
  IdealCheck out;
  if (nv == 1) {
    Poly g = univariate_gcd(a, b, 0);
    out.unit = g.is_constant() && !g.is_zero();
    if (!out.unit) out.generators.push_back(to_string(g, names));
    return out;
  }
  auto basis = groebner_basis({a, b});
  out.unit = basis.size() == 1 && basis.front().is_constant();
  if (!out.unit)
    for (const auto& p : basis) out.generators.push_back(to_string(p, names));
  return out;
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? sep : "") + v[k];
  return s;
}

Verdict combine(const std::vector<const Verdict*>& parts, const std::string& yes_summary) {
  for (const auto* v : parts)
    if (v->is_no()) return Verdict::no(v->summary, v->data);
  std::vector<std::string> blockers;
  for (const auto* v : parts)
    for (const auto& b : v->blockers) blockers.push_back(b);
  for (const auto* v : parts)
    if (v->is_unknown() && v->blockers.empty()) blockers.push_back(v->summary);
  if (!blockers.empty()) return Verdict::unknown(blockers);
  return Verdict::yes(yes_summary);
}

SimplicityReport assemble(std::map<std::string, Verdict> conditions, std::string theorem) {
  SimplicityReport rep;
  rep.theorem_used = std::move(theorem);
  // Report the first decisive condition in a fixed reading order.
  const std::vector<std::string> order{"preconditions", "infinite_order", "t_nonzero", "ore_condition",
                                       "zn_simple", "center_in_R"};
  std::vector<const Verdict*> ordered;
  for (const auto& k : order)
    if (auto it = conditions.find(k); it != conditions.end()) ordered.push_back(&it->second);
  rep.verdict = combine(ordered, "all conditions hold");
  rep.conditions = std::move(conditions);
  return rep;
}

Verdict ore_all_indices(const TGWDatum& d, long d_bound) {
  std::vector<OreConditionResult> results;
  for (std::size_t i = 0; i < d.rank; ++i) results.push_back(ore_ideal_condition(d, i, d_bound));
  std::vector<Verdict> vs;
  for (const auto& r : results) vs.push_back(r.verdict());
  std::vector<const Verdict*> parts;
  for (const auto& v : vs) parts.push_back(&v);
  Verdict out = combine(parts, "t_i and sigma_i^d(t_i) generate R for every i and d");
  nlohmann::json per = nlohmann::json::array();
  for (const auto& r : results) per.push_back(r.to_json());
  if (!out.is_unknown()) out.data["per_index"] = per;
  return out;
}

Verdict preconditions(const Engine& engine, const CartanProfile& profile) {
  const TGWDatum& d = engine.datum();
  ValidationReport v = validate_datum(d);
  if (!v.valid) return Verdict::no("datum is invalid: " + v.problems.front());
  Verdict c = check_consistency(d);
  if (c.is_no()) return Verdict::no("datum is inconsistent: " + c.summary, c.data);
  if (!profile.all_known()) return Verdict::no("finitistic profile has unknown entries");
  nlohmann::json j;
  j["regularly_graded"] = v.regularly_graded;
  j["profile"] = profile.to_json();
  return Verdict::yes("regularly graded, consistent and finitistic", j);
}

}  // namespace

Verdict OreConditionResult::verdict() const {
  nlohmann::json j = to_json();
  if (witness_d) {
    const std::string i = std::to_string(index + 1);
    std::string summary = "witness d=" + std::to_string(*witness_d) + ": ideal (t, σ" +
                          (*witness_d == 1 ? std::string() : "^" + std::to_string(*witness_d)) + "t) = (" +
                          join(witness_ideal, ", ") + ")";
    if (rank > 1) summary = "i=" + i + ", " + summary;
    return Verdict::no(summary, j);
  }
  if (all_d_certificate) return Verdict::yes("the ideal (t, σ^d t) is R for every d >= 1 (" + method + ")", j);
  Verdict u = Verdict::unknown({"ideal condition holds for d <= " + std::to_string(per_d.size()) +
                                " but no all-d certificate applies"});
  u.data = j;
  return u;
}

nlohmann::json OreConditionResult::to_json() const {
  nlohmann::json j;
  j["index"] = index + 1;
  j["method"] = method;
  j["all_d_certificate"] = all_d_certificate;
  j["checked_up_to"] = per_d.size();
  if (witness_d) {
    j["witness_d"] = *witness_d;
    j["witness_ideal"] = witness_ideal;
  }
  return j;
}

OreConditionResult ore_ideal_condition(const TGWDatum& d, std::size_t i, long d_bound) {
  if (i >= d.rank) throw DimensionMismatch("ore_ideal_condition: index out of range");
  const Poly& t = d.t[i];
  const Endo& s = d.sigma[i];
  const auto& names = d.display_names();
  OreConditionResult res;
  res.index = i;
  res.rank = d.rank;
  if (t.is_zero()) throw ZeroPolynomial("ore_ideal_condition: t is zero");
  if (t.is_constant()) {
    for (long k = 1; k <= d_bound; ++k) res.per_d.emplace_back(k, true);
    res.all_d_certificate = true;
    res.method = "constant";
    return res;
  }
  Poly shifted = t;
  for (long k = 1; k <= d_bound; ++k) {
    shifted = apply_endo(s, shifted);
    IdealCheck c = two_generator_ideal(t, shifted, names);
    res.per_d.emplace_back(k, c.unit);
    if (!c.unit && !res.witness_d) {
      res.witness_d = k;
      res.witness_ideal = c.generators;
    }
  }
  res.method = "bounded";

  auto pres = as_polynomial_in_linear_form(t);
  if (!pres) return res;
  Poly step = apply_endo(s, pres->form) - pres->form;
  if (!step.is_constant()) return res;
  const Rational b = step.constant_term();
  std::optional<long> exact;
  if (b == 0) {
    exact = 1;
    res.method = "fixed-form";
  } else {
    Poly r = shift_resultant(pres->coeffs);
    for (const auto& root : rational_roots(r, 0)) {
      Rational q = root / b;
      if (q.get_den() != 1 || q <= 0) continue;
      long dd = q.get_num().get_si();
      if (!exact || dd < *exact) exact = dd;
    }
    res.method = "resultant";
  }
  res.all_d_certificate = true;
  if (exact && *exact <= d_bound) {
    if (res.witness_d != exact) throw Error("ore certificate disagrees with the per-d check");
  } else if (exact) {
    res.witness_d = exact;
    res.witness_ideal = two_generator_ideal(t, apply_endo(power(s, *exact), t), names).generators;
  } else if (res.witness_d) {
    throw Error("ore certificate disagrees with the per-d check");
  }
  return res;
}

std::string SimplicityReport::headline() const {
  switch (verdict.outcome) {
    case Outcome::Yes: return "Simple";
    case Outcome::No: return "NotSimple; " + verdict.summary;
    case Outcome::Unknown: return "Unknown; " + join(verdict.blockers, "; ");
  }
  return "Unknown";
}

nlohmann::json SimplicityReport::to_json() const {
  nlohmann::json j;
  j["verdict"] = verdict.outcome == Outcome::Yes ? "Simple" : verdict.outcome == Outcome::No ? "NotSimple" : "Unknown";
  j["headline"] = headline();
  j["theorem_used"] = theorem_used;
  nlohmann::json c;
  for (const auto& [k, v] : conditions) c[k] = v.to_json();
  j["conditions"] = c;
  if (verdict.is_no()) j["witness"] = verdict.data;
  if (verdict.is_unknown()) j["blockers"] = verdict.blockers;
  return j;
}

Element ad(const Engine& engine, const Element& z, const Element& a) { return engine.commutator(z, a); }

SimplicityReport jordan_rank1(const Engine& engine, SimplicityOptions opts) {
  const TGWDatum& d = engine.datum();
  if (d.rank != 1 || d.variable_count() != 1) throw FamilyMismatch("jordan_rank1 needs rank 1 over one variable");
  const Poly& img = d.sigma[0].images()[0];
  if (img.total_degree() != 1) throw FamilyMismatch("jordan_rank1 needs sigma(u) = a*u + b");
  auto lin = img.terms().find(Exponents{1});
  const Rational a = lin == img.terms().end() ? Rational(0) : lin->second;
  const Rational b = img.constant_term();
  std::map<std::string, Verdict> cond;
  nlohmann::json ab{{"a", to_string(a)}, {"b", to_string(b)}};
  if ((a == 1 && b != 0) || (a != 1 && a != -1))
    cond["infinite_order"] = Verdict::yes("sigma has infinite order", ab);
  else
    cond["infinite_order"] = Verdict::no("sigma has finite order", ab);
  cond["t_nonzero"] = d.t[0].is_zero() ? Verdict::no("t is zero") : Verdict::yes("t is nonzero");
  cond["zn_simple"] = zn_simplicity(d);
  cond["ore_condition"] = ore_ideal_condition(d, 0, opts.d_bound).verdict();
  return assemble(std::move(cond), "rank-one criterion");
}

Verdict weyl_pair_certificate(const Engine& engine, long max_degree) {
  const TGWDatum& d = engine.datum();
  const std::size_t n = d.rank;
  const auto& names = d.display_names();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && d.mu[i][j] != 1)
        return Verdict::no("mu_" + std::to_string(i + 1) + std::to_string(j + 1) + " is not 1",
                           {{"indices", {i + 1, j + 1}}});
  RatVector c;
  for (std::size_t i = 0; i < n; ++i) {
    Poly diff = apply_endo(d.sigma[i], d.t[i]) - d.t[i];
    if (!diff.is_constant() || diff.is_zero())
      return Verdict::no("sigma_" + std::to_string(i + 1) + "(t_" + std::to_string(i + 1) +
                             ") - t_" + std::to_string(i + 1) + " is not a nonzero constant",
                         {{"index", i + 1}, {"difference", to_string(diff, names)}});
    c.push_back(diff.constant_term());
  }
  std::vector<Element> minus_y;
  for (std::uint32_t i = 0; i < n; ++i) minus_y.push_back(-engine.generator(Letter::Y(i)));

  long checked = 0;
  DegVec g(n, 0);
  for (;;) {
    std::size_t k = 0;
    while (k < n && g[k] == max_degree) g[k++] = 0;
    if (k == n) break;
    ++g[k];
    Rational expected = 1;
    for (std::size_t i = 0; i < n; ++i) {
      expected *= Rational(factorial(static_cast<unsigned long>(g[i])));
      for (long e = 0; e < g[i]; ++e) expected *= c[i];
    }
    for (const auto& x : engine.reduced_monomials_of_degree(g)) {
      Element z = Element::monomial(engine.one(), x);
      for (std::size_t i = n; i-- > 0;)
        for (long e = 0; e < g[i]; ++e) z = ad(engine, minus_y[i], z);
      ++checked;
      if (!(z == Element::scalar(Poly::constant(engine.variable_count(), expected))))
        return Verdict::unknown({"bracket verification failed for " + to_string(x) + ": got " + to_string(z, names)});
    }
  }
  nlohmann::json cert;
  std::vector<std::string> cs;
  for (const auto& v : c) cs.push_back(to_string(v));
  cert["c"] = cs;
  cert["max_degree"] = max_degree;
  cert["words_checked"] = checked;
  return Verdict::yes("mu = 1 and sigma_i(t_i) - t_i are nonzero constants; brackets verified", cert);
}

SimplicityReport a1n_simplicity(const Engine& engine, SimplicityOptions opts) {
  const TGWDatum& d = engine.datum();
  CartanProfile profile = finitistic_profile(d);
  if (!profile.all_known()) throw FamilyMismatch("finitistic profile is not fully known");
  if (!lie_type_is_A1n(profile)) throw FamilyMismatch("datum is not of Lie type (A_1)^n");
  std::map<std::string, Verdict> cond;
  cond["ore_condition"] = ore_all_indices(d, opts.d_bound);
  cond["zn_simple"] = zn_simplicity(d);
  cond["center_in_R"] = center_contained_in_R(engine, kernel_of_sigma(d, opts.box_radius), opts.center);
  return assemble(std::move(cond), "type (A_1)^n criterion");
}

SimplicityReport orchestrate_simplicity(const Engine& engine, SimplicityOptions opts) {
  const TGWDatum& d = engine.datum();
  CartanProfile profile = finitistic_profile(d);
  std::map<std::string, Verdict> cond;
  cond["preconditions"] = preconditions(engine, profile);
  if (cond["preconditions"].is_no()) {
    SimplicityReport rep;
    rep.verdict = Verdict::unknown({"gate failure: " + cond["preconditions"].summary});
    rep.conditions = std::move(cond);
    rep.theorem_used = "general criterion";
    return rep;
  }

  const bool all_constant =
      std::all_of(d.t.begin(), d.t.end(), [](const Poly& t) { return t.is_constant() && !t.is_zero(); });
  if (all_constant) {
    cond["ore_condition"] = Verdict::yes("every t_i is a nonzero constant, so each X_i is invertible",
                                         {{"route", "invertible-generators"}});
  } else if (lie_type_is_A1n(profile)) {
    cond["ore_condition"] = ore_all_indices(d, opts.d_bound);
    cond["ore_condition"].data["route"] = "type-A1n";
  } else {
    Verdict w = weyl_pair_certificate(engine, opts.weyl_max_degree);
    if (w.is_yes()) {
      w.data["route"] = "weyl-pair";
      cond["ore_condition"] = w;
    } else {
      cond["ore_condition"] = Verdict::unknown({"no route decides AxA = A for this Lie type"});
    }
  }
  cond["zn_simple"] = zn_simplicity(d);
  cond["center_in_R"] = center_contained_in_R(engine, kernel_of_sigma(d, opts.box_radius), opts.center);
  return assemble(std::move(cond), "general criterion");
}

}  // namespace tgwa
