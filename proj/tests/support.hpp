#pragma once

// Shared helpers for the unit, property and acceptance suites.

#include <deque>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "tgwa/analysis.hpp"
#include "tgwa/cartan.hpp"
#include "tgwa/errors.hpp"
#include "tgwa/io.hpp"
#include "tgwa/poly_tools.hpp"
#include "tgwa/simplicity.hpp"
#include "tgwa/simplicity.hpp"

namespace tgwa::testing {

using Rng = std::mt19937_64;
constexpr std::uint64_t kSeed = 20240611;

inline TGWDatum fixture(const std::string& name) { return parse_datum(bundled_fixture(name)).datum; }

inline Poly P(const std::string& text, const std::vector<std::string>& names) { return parse_poly(text, names); }

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

/// Rank-n datum over Q[u1..un] with u_i -> u_i + c_i, t_i in Q[u_i] and mu_ij * mu_ji = 1.
/// Some c_i may be zero so that the kernel is nontrivial.
inline TGWDatum random_separable_datum(Rng& rng, std::size_t n, bool allow_fixed = true) {
  TGWDatum d;
  d.name = "random";
  d.rank = n;
  d.family = FamilyTag::Translation;
  for (std::size_t i = 0; i < n; ++i) d.variables.push_back("u" + std::to_string(i + 1));
  for (std::size_t i = 0; i < n; ++i) {
    long c = uniform(rng, allow_fixed ? -2 : 1, 2);
    if (c == 0 && !allow_fixed) c = 1;
    std::vector<Poly> img, inv;
    for (std::size_t v = 0; v < n; ++v) {
      Poly x = Poly::variable(n, v);
      img.push_back(v == i ? x + Poly::constant(n, c) : x);
      inv.push_back(v == i ? x - Poly::constant(n, c) : x);
    }
    d.sigma.emplace_back(img, inv);
    Poly u = Poly::variable(n, i);
    Poly t = Poly::constant(n, uniform(rng, 1, 3));
    const long deg = uniform(rng, 0, 2);
    for (long k = 0; k < deg; ++k) t *= u + Poly::constant(n, uniform(rng, -2, 2));
    d.t.push_back(t);
  }
  static const std::vector<Rational> scalars{Rational(1), Rational(2), Rational(1, 2), Rational(-1), Rational(3)};
  d.mu.assign(n, RatVector(n, Rational(1)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Rational m = scalars[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(scalars.size()) - 1))];
      d.mu[i][j] = m;
      d.mu[j][i] = 1 / m;
    }
  return d;
}

/// Bundled fixtures followed by a few random separable data, all consistent.
inline std::vector<TGWDatum> datum_pool(Rng& rng) {
  std::vector<TGWDatum> pool;
  for (const auto& name : bundled_fixture_names()) pool.push_back(fixture(name));
  for (std::size_t n = 1; n <= 3; ++n) pool.push_back(random_separable_datum(rng, n));
  pool.push_back(random_separable_datum(rng, 3));
  return pool;
}

inline DegVec word_degree(const Word& w, std::size_t n) {
  DegVec g(n, 0);
  for (const auto& l : w) g[l.index] += l.is_x ? 1 : -1;
  return g;
}

inline Word random_word(Rng& rng, std::size_t n, std::size_t max_len) {
  Word w;
  const auto len = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(max_len)));
  for (std::size_t k = 0; k < len; ++k) {
    auto idx = static_cast<std::uint32_t>(uniform(rng, 0, static_cast<long>(n) - 1));
    w.push_back(uniform(rng, 0, 1) ? Letter::X(idx) : Letter::Y(idx));
  }
  return w;
}

/// Random arrangement of X_i/Y_i pairs: total length <= max_len, degree zero.
inline Word random_degree_zero_word(Rng& rng, std::size_t n, std::size_t max_len) {
  Word w;
  const long pairs = uniform(rng, 1, static_cast<long>(max_len / 2));
  for (long k = 0; k < pairs; ++k) {
    auto idx = static_cast<std::uint32_t>(uniform(rng, 0, static_cast<long>(n) - 1));
    w.push_back(Letter::X(idx));
    w.push_back(Letter::Y(idx));
  }
  std::shuffle(w.begin(), w.end(), rng);
  return w;
}

inline Poly random_ring_element(Rng& rng, std::size_t nv, long max_degree = 1) {
  Poly p = Poly::constant(nv, uniform(rng, -2, 2));
  for (std::size_t v = 0; v < nv; ++v) {
    if (max_degree >= 1) p += Poly::variable(nv, v) * Rational(uniform(rng, -2, 2));
    if (max_degree >= 2 && uniform(rng, 0, 1)) p += Poly::variable(nv, v).pow(2) * Rational(uniform(rng, -1, 1));
  }
  if (p.is_zero()) p = Poly::constant(nv, 1);
  return p;
}

inline Element random_element(const Engine& e, Rng& rng, std::size_t terms = 2, std::size_t max_len = 3) {
  Element a(e.variable_count());
  for (std::size_t k = 0; k < terms; ++k)
    a += random_ring_element(rng, e.variable_count()) * e.from_word(random_word(rng, e.rank(), max_len));
  return a;
}

/// sigma_g(p) by repeated substitution with sigma_i or its declared inverse.
inline Poly twist_by_substitution(const TGWDatum& d, const DegVec& g, Poly p) {
  for (std::size_t i = d.rank; i-- > 0;) {
    const auto& maps = g[i] >= 0 ? d.sigma[i].images() : d.sigma[i].declared_inverse();
    for (long k = 0; k < std::labs(g[i]); ++k) p = substitute(maps, p);
  }
  return p;
}

/// Breadth-first application of the defining relations
///   X_a Y_a = sigma_a(t_a),  Y_a X_a = t_a,  X_a Y_b = mu_ab Y_b X_a,  Y_b X_a = mu_ab^{-1} X_a Y_b,
/// with every produced ring factor moved to the left through the prefix. Returns the
/// accumulated coefficient of the first path reaching the empty word.
inline Poly relation_oracle_value(const TGWDatum& d, const Word& w) {
  const std::size_t n = d.rank, nv = d.variable_count();
  std::deque<std::pair<Word, Poly>> queue{{w, Poly::constant(nv, 1)}};
  std::set<Word> seen{w};
  while (!queue.empty()) {
    auto [word, coeff] = queue.front();
    queue.pop_front();
    if (word.empty()) return coeff;
    for (std::size_t p = 0; p + 1 < word.size(); ++p) {
      const Letter l = word[p], r = word[p + 1];
      if (l.is_x == r.is_x) continue;
      const DegVec prefix = word_degree(Word(word.begin(), word.begin() + static_cast<long>(p)), n);
      Word next;
      Poly factor(nv);
      if (l.index == r.index) {
        const Poly& t = d.t[l.index];
        factor = l.is_x ? apply_endo(d.sigma[l.index], t) : t;
        factor = twist_by_substitution(d, prefix, factor);
        next = word;
        next.erase(next.begin() + static_cast<long>(p), next.begin() + static_cast<long>(p) + 2);
      } else {
        const Rational mu = l.is_x ? d.mu[l.index][r.index] : Rational(1 / d.mu[r.index][l.index]);
        factor = Poly::constant(nv, mu);
        next = word;
        std::swap(next[p], next[p + 1]);
      }
      if (seen.insert(next).second) queue.emplace_back(next, coeff * factor);
    }
  }
  throw Error("relation oracle: empty word unreachable");
}

inline Element E(const Engine& e, const std::string& text) { return parse_element(e, text); }

}  // namespace tgwa::testing
