#include "tgwa/analysis.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>

#include "tgwa/errors.hpp"

namespace tgwa {

namespace {

bool is_zero_deg(const DegVec& g) {
  return std::all_of(g.begin(), g.end(), [](long v) { return v == 0; });
}

IntVector to_int_vector(const DegVec& g) {
  IntVector v;
  for (long x : g) v.emplace_back(x);
  return v;
}

DegVec to_deg(const IntVector& v) {
  DegVec g;
  for (const auto& x : v) g.push_back(x.get_si());
  return g;
}

nlohmann::json deg_json(const DegVec& g) { return nlohmann::json(g); }

// ---- small dense matrix helpers ----

RatMatrix identity_matrix(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a.at(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return c;
}

bool mat_eq(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a.at(i, j) != b.at(i, j)) return false;
  return true;
}

RatMatrix mat_pow(RatMatrix base, unsigned long k) {
  RatMatrix r = identity_matrix(base.rows());
  while (k > 0) {
    if (k & 1UL) r = mat_mul(r, base);
    k >>= 1UL;
    if (k > 0) base = mat_mul(base, base);
  }
  return r;
}

unsigned long euler_phi(unsigned long d) {
  unsigned long r = d;
  for (unsigned long p = 2; p * p <= d; ++p) {
    if (d % p) continue;
    while (d % p == 0) d /= p;
    r -= r / p;
  }
  if (d > 1) r -= r / d;
  return r;
}

// Finite order of M if it has one (rational matrices of size n can only have
// orders d with phi(d) <= n), else 0.
unsigned long matrix_order(const RatMatrix& m) {
  const unsigned long n = m.rows();
  unsigned long l = 1;
  for (unsigned long d = 1; d <= 2 * n * n + 2; ++d)
    if (euler_phi(d) <= n) l = std::lcm(l, d);
  const RatMatrix id = identity_matrix(n);
  if (!mat_eq(mat_pow(m, l), id)) return 0;
  for (unsigned long d = 1; d <= l; ++d)
    if (l % d == 0 && mat_eq(mat_pow(m, d), id)) return d;
  return l;
}

// Linear part of a homogeneous linear substitution: column j holds e(u_j).
std::optional<RatMatrix> linear_matrix(const Endo& e) {
  const std::size_t n = e.variable_count();
  RatMatrix m(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (const auto& [ex, c] : e.images()[j].terms()) {
      std::uint32_t deg = 0;
      std::size_t var = 0;
      for (std::size_t k = 0; k < n; ++k)
        if (ex[k]) {
          deg += ex[k];
          var = k;
        }
      if (deg != 1) return std::nullopt;
      m.at(var, j) = c;
    }
  return m;
}

RatMatrix restrict_to(const RatMatrix& m, const std::vector<std::size_t>& idx) {
  RatMatrix r(idx.size(), idx.size());
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = 0; b < idx.size(); ++b) r.at(a, b) = m.at(idx[a], idx[b]);
  return r;
}

// { g : sum_i rows[r][i] g_i = 0 mod moduli[r] } (modulus 0 means exact).
Lattice congruence_lattice(std::size_t n, const std::vector<std::vector<long>>& rows,
                           const std::vector<unsigned long>& moduli) {
  if (rows.empty()) return Lattice::full(n);
  const std::size_t r = rows.size();
  RatMatrix m(r, n + r);
  for (std::size_t k = 0; k < r; ++k) {
    for (std::size_t i = 0; i < n; ++i) m.at(k, i) = rows[k][i];
    m.at(k, n + k) = -static_cast<long>(moduli[k]);
  }
  std::vector<IntVector> gens;
  const Lattice kernel = integer_kernel(m);
  for (const auto& v : kernel.basis()) gens.emplace_back(v.begin(), v.begin() + static_cast<long>(n));
  return Lattice::from_generators(n, std::move(gens));
}

std::optional<Lattice> linear_block_kernel(const TGWDatum& d) {
  const std::size_t n = d.rank, nv = d.variable_count();
  std::vector<RatMatrix> mats;
  for (const auto& s : d.sigma) {
    auto m = linear_matrix(s);
    if (!m) return std::nullopt;
    mats.push_back(*m);
  }
  std::vector<std::size_t> parent(nv);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (const auto& m : mats)
    for (std::size_t a = 0; a < nv; ++a)
      for (std::size_t b = 0; b < nv; ++b)
        if (m.at(a, b) != 0) parent[find(a)] = find(b);
  std::map<std::size_t, std::vector<std::size_t>> blocks;
  for (std::size_t v = 0; v < nv; ++v) blocks[find(v)].push_back(v);

  std::vector<std::vector<long>> rows;
  std::vector<unsigned long> moduli;
  for (const auto& [root, idx] : blocks) {
    if (idx.size() > 6) return std::nullopt;
    const RatMatrix id = identity_matrix(idx.size());
    std::optional<RatMatrix> base;
    std::vector<long> exps(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      RatMatrix r = restrict_to(mats[i], idx);
      if (mat_eq(r, id)) continue;
      if (!base) base = r;
      if (mat_eq(r, *base)) exps[i] = 1;
      else if (mat_eq(mat_mul(r, *base), id)) exps[i] = -1;
      else return std::nullopt;
    }
    if (!base) continue;
    rows.push_back(exps);
    moduli.push_back(matrix_order(*base));
  }
  return congruence_lattice(n, rows, moduli);
}

bool fixes_everything(const TGWDatum& d, const IntVector& g) { return sigma_power(d, to_deg(g)).is_identity(); }

// ---- incremental span membership over Q ----

class SpanBuilder {
 public:
  /// Reduces p against the stored echelon basis.
  Poly reduce(Poly p) const {
    for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
      auto t = p.terms().find(it->first);
      if (t == p.terms().end()) continue;
      Rational f = t->second / it->second.leading_term().second;
      p -= it->second * f;
    }
    return p;
  }
  /// Adds p; returns false if p was already in the span.
  bool add(const Poly& p) {
    Poly r = reduce(p);
    if (r.is_zero()) return false;
    pivots_.emplace(r.leading_term().first, r);
    return true;
  }

 private:
  std::map<Exponents, Poly, GrlexLess> pivots_;
};

unsigned long binomial(unsigned long n, unsigned long k) {
  unsigned long r = 1;
  for (unsigned long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// ---- eigenvectors of the affine action ----

// Coefficients of the characteristic polynomial det(xI - B), ascending.
RatVector char_poly(const RatMatrix& b) {
  const std::size_t n = b.rows();
  RatVector c(n + 1);
  c[n] = 1;
  RatMatrix mk(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    RatMatrix next = mat_mul(b, mk);
    for (std::size_t i = 0; i < n; ++i) next.at(i, i) += c[n - k + 1];
    mk = next;
    RatMatrix bm = mat_mul(b, mk);
    Rational tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += bm.at(i, i);
    c[n - k] = -tr / static_cast<long>(k);
  }
  return c;
}

// Search for a common eigenvector of all maps (given on the subspace spanned by
// the columns in basis) with a nonzero entry outside coordinate 0.
std::optional<std::pair<RatVector, RatVector>> common_eigenvector(const std::vector<RatMatrix>& maps, std::size_t level,
                                                                  const std::vector<RatVector>& basis,
                                                                  RatVector eigenvalues) {
  if (basis.empty()) return std::nullopt;
  if (level == maps.size()) {
    for (const auto& v : basis)
      for (std::size_t k = 1; k < v.size(); ++k)
        if (v[k] != 0) return std::make_pair(v, eigenvalues);
    return std::nullopt;
  }
  const std::size_t dim = basis.size(), amb = basis.front().size();
  // Coordinates of maps[level] * basis_k in the basis.
  RatMatrix w(amb, dim);
  for (std::size_t k = 0; k < dim; ++k)
    for (std::size_t a = 0; a < amb; ++a) w.at(a, k) = basis[k][a];
  RatMatrix restricted(dim, dim);
  for (std::size_t k = 0; k < dim; ++k) {
    RatVector image = maps[level].apply(std::span<const Rational>(basis[k]));
    auto coords = solve(w, image);
    if (!coords) return std::nullopt;  // subspace not invariant; cannot happen for commuting maps
    for (std::size_t l = 0; l < dim; ++l) restricted.at(l, k) = (*coords)[l];
  }
  for (const auto& lambda : rational_roots(std::span<const Rational>(char_poly(restricted)))) {
    RatMatrix shifted = restricted;
    for (std::size_t i = 0; i < dim; ++i) shifted.at(i, i) -= lambda;
    std::vector<RatVector> sub;
    for (const auto& c : rational_nullspace(shifted)) {
      RatVector v(amb);
      for (std::size_t k = 0; k < dim; ++k)
        for (std::size_t a = 0; a < amb; ++a) v[a] += c[k] * basis[k][a];
      sub.push_back(v);
    }
    RatVector ev = eigenvalues;
    ev.push_back(lambda);
    if (auto found = common_eigenvector(maps, level + 1, sub, ev)) return found;
  }
  return std::nullopt;
}

Poly affine_form(const RatVector& coeffs, std::size_t nv) {
  Poly p = Poly::constant(nv, coeffs[0]);
  for (std::size_t j = 0; j < nv; ++j) p += Poly::variable(nv, j) * coeffs[j + 1];
  return p;
}

// ---- helpers for the center and centralizer ----

long l1(const DegVec& g) {
  long s = 0;
  for (long v : g) s += std::labs(v);
  return s;
}

std::vector<Exponents> monomials_up_to(std::size_t nv, long max_degree) {
  std::vector<Exponents> out;
  Exponents e(nv, 0);
  std::function<void(std::size_t, long)> rec = [&](std::size_t var, long left) {
    if (var == nv) {
      out.push_back(e);
      return;
    }
    for (long k = 0; k <= left; ++k) {
      e[var] = static_cast<std::uint32_t>(k);
      rec(var + 1, left - k);
    }
    e[var] = 0;
  };
  rec(0, max_degree);
  std::sort(out.begin(), out.end(), GrlexLess{});
  return out;
}

std::vector<Element> generators(const Engine& e) {
  std::vector<Element> out;
  for (std::uint32_t i = 0; i < e.rank(); ++i) out.push_back(e.generator(Letter::X(i)));
  for (std::uint32_t i = 0; i < e.rank(); ++i) out.push_back(e.generator(Letter::Y(i)));
  return out;
}

bool is_central(const Engine& e, const Element& a) {
  for (const auto& z : generators(e))
    if (!e.is_zero_in_A(e.commutator(a, z))) return false;
  return true;
}

DegVec negated(DegVec g) {
  for (auto& v : g) v = -v;
  return g;
}

// Coefficient rows: one row per ring monomial appearing in any of the polynomials.
void append_rows(RatMatrix& m, const std::vector<Poly>& values) {
  std::map<Exponents, RatVector, GrlexLess> rows;
  for (std::size_t u = 0; u < values.size(); ++u)
    for (const auto& [ex, c] : values[u].terms()) {
      auto [it, _] = rows.try_emplace(ex, RatVector(values.size()));
      it->second[u] = c;
    }
  for (const auto& [ex, row] : rows) m.append_row(row);
}

Verdict center_witness(const Engine& engine, const Element& z, const DegVec& g, const std::string& rule) {
  nlohmann::json w;
  w["rule"] = rule;
  w["degree"] = deg_json(g);
  w["element"] = to_string(z, engine.datum().display_names());
  w["verified_central"] = is_central(engine, z);
  w["verified_nonzero"] = !engine.is_zero_in_A(z);
  return Verdict::no("central element outside R: " + w["element"].get<std::string>() + " in degree " + to_string(g), w);
}

}  // namespace

std::string to_string(KernelMethod m) {
  switch (m) {
    case KernelMethod::Translation: return "translation";
    case KernelMethod::TriangularQ: return "triangular-q";
    case KernelMethod::BoundedBox: return "bounded-box";
  }
  return "bounded-box";
}

nlohmann::json KernelDescription::to_json() const {
  nlohmann::json j;
  nlohmann::json basis = nlohmann::json::array();
  for (const auto& v : lattice.basis()) basis.push_back(to_deg(v));
  j["basis"] = basis;
  j["rank"] = lattice.rank();
  j["certified"] = certified;
  j["method"] = to_string(method);
  if (method == KernelMethod::BoundedBox) j["box_radius"] = box_radius;
  return j;
}

KernelDescription kernel_of_sigma(const TGWDatum& d, long box_radius) {
  const std::size_t n = d.rank, nv = d.variable_count();
  auto verified = [&](const Lattice& l) {
    return std::all_of(l.basis().begin(), l.basis().end(), [&](const IntVector& g) { return fixes_everything(d, g); });
  };

  std::vector<RatVector> shifts;
  for (const auto& s : d.sigma)
    if (auto c = translation_vector(s)) shifts.push_back(*c);
  if (shifts.size() == n) {
    RatMatrix m(nv, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < nv; ++j) m.at(j, i) = shifts[i][j];
    Lattice l = integer_kernel(m);
    if (verified(l)) return KernelDescription{l, true, KernelMethod::Translation, 0};
  }
  if (d.family == FamilyTag::TriangularQ) {
    if (auto l = linear_block_kernel(d); l && verified(*l))
      return KernelDescription{*l, true, KernelMethod::TriangularQ, 0};
  }

  std::vector<IntVector> hits;
  DegVec g(n, -box_radius);
  if (n > 0) {
    for (;;) {
      if (!is_zero_deg(g) && sigma_power(d, g).is_identity()) hits.push_back(to_int_vector(g));
      std::size_t k = 0;
      while (k < n && g[k] == box_radius) g[k++] = -box_radius;
      if (k == n) break;
      ++g[k];
    }
  }
  return KernelDescription{Lattice::from_generators(n, std::move(hits)), false, KernelMethod::BoundedBox, box_radius};
}

bool CartanProfile::all_known() const {
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = 0; j < rank; ++j)
      if (i != j && !m[i][j]) return false;
  return true;
}

std::vector<std::vector<long>> CartanProfile::cartan() const {
  if (!all_known()) throw UnknownEntries("finitistic profile has unknown entries");
  std::vector<std::vector<long>> c(rank, std::vector<long>(rank, 2));
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = 0; j < rank; ++j)
      if (i != j) c[i][j] = 1 - *m[i][j];
  return c;
}

nlohmann::json CartanProfile::to_json() const {
  nlohmann::json j;
  nlohmann::json mj = nlohmann::json::array();
  for (std::size_t i = 0; i < rank; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t k = 0; k < rank; ++k) {
      if (i == k) row.push_back(nullptr);
      else if (m[i][k]) row.push_back(*m[i][k]);
      else row.push_back("unknown");
    }
    mj.push_back(row);
  }
  j["m"] = mj;
  j["all_known"] = all_known();
  if (all_known()) j["cartan"] = cartan();
  return j;
}

CartanProfile finitistic_profile(const TGWDatum& d, long bound) {
  const std::size_t n = d.rank, nv = d.variable_count();
  CartanProfile prof;
  prof.rank = n;
  prof.m.assign(n, std::vector<std::optional<long>>(n));
  prof.m_right = prof.m;
  prof.exact.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    const bool affine = affine_matrix(d.sigma[i]).has_value();
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const Poly& tj = d.t[j];
      long limit = bound;
      if (affine) {
        const long deg = std::max(tj.total_degree(), 0);
        limit = static_cast<long>(binomial(nv + static_cast<unsigned long>(deg), static_cast<unsigned long>(deg))) + 1;
      }
      std::vector<Poly> orbit{tj};
      auto orbit_at = [&](long a) -> const Poly& {
        while (static_cast<long>(orbit.size()) <= a) orbit.push_back(apply_endo(d.sigma[i], orbit.back()));
        return orbit[static_cast<std::size_t>(a)];
      };
      SpanBuilder left;
      left.add(orbit_at(0));
      for (long k = 1; k <= limit; ++k)
        if (!left.add(orbit_at(k))) {
          prof.m[i][j] = k;
          break;
        }
      SpanBuilder right;
      for (long k = 1; k <= limit; ++k) {
        right.add(orbit_at(k));
        if (right.reduce(orbit_at(0)).is_zero()) {
          prof.m_right[i][j] = k;
          break;
        }
      }
      if (prof.m[i][j] && prof.m_right[i][j] && *prof.m[i][j] != *prof.m_right[i][j])
        throw Error("left and right finitistic minima disagree at (" + std::to_string(i + 1) + "," +
                    std::to_string(j + 1) + ")");
      prof.exact[i][j] = affine;
    }
  }
  return prof;
}

bool lie_type_is_A1n(const CartanProfile& profile) {
  if (!profile.all_known()) throw UnknownEntries("finitistic profile has unknown entries");
  for (std::size_t i = 0; i < profile.rank; ++i)
    for (std::size_t j = 0; j < profile.rank; ++j)
      if (i != j && *profile.m[i][j] != 1) return false;
  return true;
}

Verdict zn_simplicity(const TGWDatum& d) {
  const std::size_t n = d.rank, nv = d.variable_count();
  const auto& names = d.display_names();
  if (nv == 0) return Verdict::yes("R is the ground field", {{"rule", "field"}});

  std::vector<RatVector> shifts;
  for (const auto& s : d.sigma)
    if (auto c = translation_vector(s)) shifts.push_back(*c);
  if (shifts.size() == n && n > 0 && rank(RatMatrix::from_rows(shifts, nv)) == nv) {
    nlohmann::json c;
    c["rule"] = "translation-span";
    c["rank"] = nv;
    return Verdict::yes("translation vectors span the variable space", c);
  }

  for (std::size_t v = 0; v < nv; ++v) {
    const Poly u = Poly::variable(nv, v);
    RatVector lambdas;
    for (const auto& s : d.sigma) {
      const Poly& img = s.images()[v];
      auto it = img.terms().find(u.leading_term().first);
      if (img.terms().size() != 1 || it == img.terms().end()) break;
      lambdas.push_back(it->second);
    }
    if (lambdas.size() == n) {
      nlohmann::json w;
      w["rule"] = "eigen-variable";
      w["generator"] = names[v];
      std::vector<std::string> ls;
      for (const auto& l : lambdas) ls.push_back(to_string(l));
      w["eigenvalues"] = ls;
      return Verdict::no("proper invariant ideal generated by " + names[v], w);
    }
  }

  std::vector<RatMatrix> maps;
  for (const auto& s : d.sigma) {
    auto m = affine_matrix(s);
    if (!m) return Verdict::unknown({"an automorphism is not affine; no invariant-ideal search available"});
    maps.push_back(*m);
  }
  std::vector<RatVector> full;
  for (std::size_t k = 0; k <= nv; ++k) {
    RatVector e(nv + 1);
    e[k] = 1;
    full.push_back(e);
  }
  if (auto found = common_eigenvector(maps, 0, full, {})) {
    Poly ell = affine_form(found->first, nv);
    nlohmann::json w;
    w["rule"] = "eigen-form";
    w["generator"] = to_string(ell, names);
    std::vector<std::string> ls;
    for (const auto& l : found->second) ls.push_back(to_string(l));
    w["eigenvalues"] = ls;
    return Verdict::no("proper invariant ideal generated by " + w["generator"].get<std::string>(), w);
  }
  return Verdict::unknown({"no invariant affine form exists, but no simplicity certificate applies"});
}

Word standard_word(const DegVec& g) {
  Word w;
  for (std::uint32_t i = 0; i < g.size(); ++i)
    for (long k = 0; k < std::labs(g[i]); ++k) w.push_back(g[i] > 0 ? Letter::X(i) : Letter::Y(i));
  return w;
}

Verdict center_contained_in_R(const Engine& engine, const KernelDescription& K, CenterOptions opts) {
  const TGWDatum& d = engine.datum();
  const std::size_t n = d.rank, nv = d.variable_count();
  if (!K.certified) return Verdict::unknown({"kernel of sigma is not certified"});
  if (K.lattice.is_zero())
    return Verdict::yes("K = 0, so the centralizer of R is R itself", {{"rule", "trivial-kernel"}});

  bool gwa = true;
  for (std::size_t i = 0; i < n && gwa; ++i)
    for (std::size_t j = 0; j < n && gwa; ++j)
      if (i != j && (d.mu[i][j] != 1 || !(apply_endo(d.sigma[i], d.t[j]) == d.t[j]))) gwa = false;
  if (gwa) {
    DegVec g = to_deg(K.lattice.basis().front());
    return center_witness(engine, engine.from_word(standard_word(g)), g, "gwa");
  }

  const bool quantum_torus =
      nv == 0 && std::all_of(d.t.begin(), d.t.end(), [](const Poly& t) { return t.is_constant() && !t.is_zero(); });
  if (quantum_torus) {
    const auto& basis = K.lattice.basis();
    std::vector<Element> words;
    for (const auto& b : basis) words.push_back(engine.from_word(standard_word(to_deg(b))));
    std::vector<RatVector> rows;
    for (std::uint32_t i = 0; i < n; ++i) {
      const Element xi = engine.generator(Letter::X(i));
      RatVector row;
      for (std::size_t k = 0; k < basis.size(); ++k) {
        DegVec h = to_deg(basis[k]);
        ++h[i];
        const Element left = engine.multiply(xi, words[k]);
        const Element right = engine.multiply(words[k], xi);
        std::optional<Rational> lambda;
        for (const auto& m : engine.reduced_monomials_of_degree(negated(h))) {
          const Element em = Element::monomial(engine.one(), m);
          Poly den = engine.gamma(right, em);
          if (den.is_zero()) continue;
          lambda = engine.gamma(left, em).constant_term() / den.constant_term();
          break;
        }
        if (!lambda) return Verdict::unknown({"a monomial of the quantum torus pairs to zero"});
        row.push_back(*lambda);
      }
      rows.push_back(row);
    }
    Lattice rel = rational_mult_relations(rows);
    nlohmann::json table = nlohmann::json::array();
    for (const auto& r : rows) {
      std::vector<std::string> s;
      for (const auto& v : r) s.push_back(to_string(v));
      table.push_back(s);
    }
    if (rel.is_zero()) {
      nlohmann::json c;
      c["rule"] = "quantum-torus";
      c["commutation_scalars"] = table;
      return Verdict::yes("commutation scalars admit no nontrivial multiplicative relation", c);
    }
    DegVec g(n, 0);
    const auto& coeffs = rel.basis().front();
    for (std::size_t k = 0; k < basis.size(); ++k)
      for (std::size_t i = 0; i < n; ++i) g[i] += coeffs[k].get_si() * basis[k][i].get_si();
    return center_witness(engine, engine.from_word(standard_word(g)), g, "quantum-torus");
  }

  // Bounded search over degrees in K.
  std::vector<DegVec> candidates;
  if (n > 0) {
    DegVec g(n, -opts.deg_cap);
    for (;;) {
      if (!is_zero_deg(g) && l1(g) <= opts.deg_cap && K.lattice.contains(to_int_vector(g))) candidates.push_back(g);
      std::size_t k = 0;
      while (k < n && g[k] == opts.deg_cap) g[k++] = -opts.deg_cap;
      if (k == n) break;
      ++g[k];
    }
  }
  std::sort(candidates.begin(), candidates.end(), [](const DegVec& a, const DegVec& b) {
    if (l1(a) != l1(b)) return l1(a) < l1(b);
    return a > b;
  });
  const std::vector<Exponents> monos = monomials_up_to(nv, opts.coeff_cap);
  const auto gens = generators(engine);
  for (const auto& g : candidates) {
    std::vector<Element> unknowns;
    for (const auto& w : engine.reduced_monomials_of_degree(g))
      for (const auto& e : monos) unknowns.push_back(Element::monomial(Poly::monomial(e, 1), w));
    const std::size_t u = unknowns.size();
    RatMatrix comm(0, u), zero(0, u);
    for (const auto& z : gens) {
      std::vector<Element> brackets;
      for (const auto& b : unknowns) brackets.push_back(engine.commutator(b, z));
      DegVec h = degree(z.terms().begin()->first, n);
      for (std::size_t i = 0; i < n; ++i) h[i] += g[i];
      for (const auto& m : engine.reduced_monomials_of_degree(negated(h))) {
        const Element em = Element::monomial(engine.one(), m);
        std::vector<Poly> vals;
        for (const auto& b : brackets) vals.push_back(engine.gamma(b, em));
        append_rows(comm, vals);
      }
    }
    for (const auto& m : engine.reduced_monomials_of_degree(negated(g))) {
      const Element em = Element::monomial(engine.one(), m);
      std::vector<Poly> vals;
      for (const auto& b : unknowns) vals.push_back(engine.gamma(b, em));
      append_rows(zero, vals);
    }
    const auto null_comm = rational_nullspace(comm);
    if (null_comm.size() <= u - rank(zero)) continue;
    for (const auto& v : null_comm) {
      RatVector nv_out = zero.apply(std::span<const Rational>(v));
      if (std::all_of(nv_out.begin(), nv_out.end(), [](const Rational& x) { return x == 0; })) continue;
      Rational scale;
      for (const auto& x : v)
        if (x != 0) {
          scale = x;
          break;
        }
      Element z(nv);
      for (std::size_t k = 0; k < u; ++k)
        if (v[k] != 0) z += Rational(v[k] / scale) * unknowns[k];
      return center_witness(engine, z, g, "bounded-search");
    }
  }
  return Verdict::unknown({"bounded search exhausted (deg_cap " + std::to_string(opts.deg_cap) + ", coeff_cap " +
                           std::to_string(opts.coeff_cap) + ")"});
}

Verdict centralizer_commutative(const Engine& engine, const KernelDescription& K, long m_cap) {
  if (!K.certified) return Verdict::unknown({"kernel of sigma is not certified"});
  const std::size_t n = engine.rank();
  if (K.lattice.rank() <= 1)
    return Verdict::yes("rank(K) <= 1, so the centralizer of R is commutative", {{"rule", "rank-at-most-one"}});
  struct Pair {
    long m, l;
  };
  std::vector<Pair> pairs;
  for (long m = -m_cap; m <= m_cap; ++m)
    for (long l = -m_cap; l <= m_cap; ++l)
      if (m != 0 && l != 0) pairs.push_back({m, l});
  std::sort(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
    auto key = [](const Pair& p) { return std::make_tuple(std::labs(p.m) + std::labs(p.l), (p.m > 0) == (p.l > 0), -p.m, p.l); };
    return key(a) < key(b);
  });
  const auto& basis = K.lattice.basis();
  long checked = 0;
  for (const auto& [m, l] : pairs)
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = i + 1; j < basis.size(); ++j) {
        DegVec gi = to_deg(basis[i]), gj = to_deg(basis[j]);
        for (std::size_t k = 0; k < n; ++k) {
          gi[k] *= m;
          gj[k] *= l;
        }
        for (const auto& w : engine.reduced_monomials_of_degree(gi))
          for (const auto& v : engine.reduced_monomials_of_degree(gj)) {
            const Element a = Element::monomial(engine.one(), w);
            const Element b = Element::monomial(engine.one(), v);
            ++checked;
            if (!engine.is_zero_in_A(engine.commutator(a, b))) {
              nlohmann::json wj;
              wj["bracket"] = "[" + to_string(w) + "," + to_string(v) + "]";
              wj["degrees"] = {gi, gj};
              wj["multiples"] = {m, l};
              return Verdict::no("nonzero bracket " + wj["bracket"].get<std::string>(), wj);
            }
          }
      }
  nlohmann::json c;
  c["rule"] = "bounded-brackets";
  c["m_cap"] = m_cap;
  c["brackets_checked"] = checked;
  return Verdict::yes("all brackets of K-degree monomials vanish up to multiple " + std::to_string(m_cap), c);
}

}  // namespace tgwa
