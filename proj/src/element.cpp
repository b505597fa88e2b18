#include "tgwa/element.hpp"

#include <algorithm>
#include <cstdlib>

#include "tgwa/errors.hpp"

namespace tgwa {

Word RedWord::word() const {
  Word w;
  w.reserve(y.size() + x.size());
  for (auto i : y) w.push_back(Letter::Y(i));
  for (auto i : x) w.push_back(Letter::X(i));
  return w;
}

DegVec degree(const Word& w, std::size_t rank) {
  DegVec g(rank, 0);
  for (const auto& l : w) g.at(l.index) += l.is_x ? 1 : -1;
  return g;
}

DegVec degree(const RedWord& w, std::size_t rank) {
  DegVec g(rank, 0);
  for (auto i : w.y) --g.at(i);
  for (auto i : w.x) ++g.at(i);
  return g;
}

std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) s += '*';
    s += w[k].is_x ? 'X' : 'Y';
    s += std::to_string(w[k].index + 1);
  }
  return s;
}

std::string to_string(const RedWord& w) { return to_string(w.word()); }

Element Element::monomial(const Poly& coeff, RedWord w) {
  Element e(coeff.variable_count());
  e.add_term(w, coeff);
  return e;
}

void Element::add_term(const RedWord& w, const Poly& coeff) {
  if (coeff.variable_count() != nvars_) throw DimensionMismatch("Element: coefficient over wrong variables");
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly Element::coefficient(const RedWord& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Poly(nvars_) : it->second;
}

Element& Element::operator+=(const Element& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

Element Element::operator-() const {
  Element out(nvars_);
  for (const auto& [w, c] : terms_) out.terms_.emplace(w, -c);
  return out;
}

Element operator*(const Poly& r, const Element& a) {
  Element out(a.nvars_);
  for (const auto& [w, c] : a.terms_) out.add_term(w, r * c);
  return out;
}

Element operator*(const Rational& c, const Element& a) {
  return Poly::constant(a.nvars_, c) * a;
}

std::map<DegVec, Element> Element::homogeneous_components(std::size_t rank) const {
  std::map<DegVec, Element> out;
  for (const auto& [w, c] : terms_) {
    auto [it, _] = out.try_emplace(degree(w, rank), nvars_);
    it->second.add_term(w, c);
  }
  return out;
}

std::string to_string(const Element& a, const std::vector<std::string>& names) {
  if (a.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : a.terms()) {
    std::string term;
    if (w.empty()) {
      term = to_string(c, names);
    } else if (c.is_constant()) {
      Rational v = c.constant_term();
      if (v == 1) term = to_string(w);
      else if (v == -1) term = "-" + to_string(w);
      else term = v.get_str() + "*" + to_string(w);
    } else {
      term = "(" + to_string(c, names) + ")*" + to_string(w);
    }
    if (first) {
      out = term;
    } else if (term.front() == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
    first = false;
  }
  return out;
}

Engine::Engine(TGWDatum d, EngineOptions opts) : d_(std::move(d)), opts_(opts) {}

const Endo& Engine::sigma_cached(const DegVec& g) const {
  {
    std::lock_guard lock(mutex_);
    auto it = sigma_cache_.find(g);
    if (it != sigma_cache_.end()) return it->second;
  }
  Endo e = sigma_power(d_, g);
  std::lock_guard lock(mutex_);
  return sigma_cache_.try_emplace(g, std::move(e)).first->second;
}

Poly Engine::twist(const DegVec& g, const Poly& p) const {
  if (p.is_constant()) return p;
  if (std::all_of(g.begin(), g.end(), [](long v) { return v == 0; })) return p;
  return apply_endo(sigma_cached(g), p);
}

Engine::Reduced Engine::reduce_monic(const Word& w) const {
  {
    std::lock_guard lock(mutex_);
    auto it = reduce_cache_.find(w);
    if (it != reduce_cache_.end()) return it->second;
  }
  Reduced r = reduce_uncached(w);
  std::lock_guard lock(mutex_);
  reduce_cache_.try_emplace(w, r);
  return r;
}

Engine::Reduced Engine::reduce_uncached(const Word& w0) const {
  const std::size_t n = rank();
  for (const auto& l : w0)
    if (l.index >= n) throw DimensionMismatch("reduce: generator index out of range");
  Word w = w0;
  Poly c = one();
  auto prefix_degree = [&](std::size_t end) {
    DegVec g(n, 0);
    for (std::size_t k = 0; k < end; ++k) g[w[k].index] += w[k].is_x ? 1 : -1;
    return g;
  };
  // Replace w[pos], w[pos+1] by the ring element they multiply to, pushed to the left.
  auto cancel = [&](std::size_t pos) {
    const std::uint32_t a = w[pos].index;
    DegVec g = prefix_degree(pos);
    if (w[pos].is_x) ++g[a];  // X_a Y_a = sigma_a(t_a)
    c *= twist(g, d_.t[a]);
    w.erase(w.begin() + static_cast<long>(pos), w.begin() + static_cast<long>(pos) + 2);
  };

  for (;;) {
    bool rewrote = false;
    for (std::size_t p = 0; p + 1 < w.size(); ++p) {
      if (!w[p].is_x || w[p + 1].is_x) continue;
      const std::uint32_t a = w[p].index, b = w[p + 1].index;
      if (a == b) {
        cancel(p);
      } else {
        c *= d_.mu[a][b];
        std::swap(w[p], w[p + 1]);
      }
      rewrote = true;
      break;
    }
    if (rewrote) continue;

    const std::size_t ny = static_cast<std::size_t>(
        std::find_if(w.begin(), w.end(), [](const Letter& l) { return l.is_x; }) - w.begin());
    if (ny > 0 && ny < w.size() && w[ny - 1].index == w[ny].index) {
      cancel(ny - 1);
      continue;
    }

    std::size_t best_p = 0, best_q = 0;
    bool found = false;
    for (std::size_t p = 0; p < ny; ++p)
      for (std::size_t q = ny; q < w.size(); ++q)
        if (w[p].index == w[q].index && (!found || q - p < best_q - best_p)) {
          best_p = p;
          best_q = q;
          found = true;
        }
    if (!found) break;

    const std::uint32_t m = w[best_p].index;
    Word between_x(w.begin() + static_cast<long>(ny), w.begin() + static_cast<long>(best_q));
    Word between_y(w.begin() + static_cast<long>(best_p) + 1, w.begin() + static_cast<long>(ny));
    // Y_b X_c = mu_cb^{-1} X_c Y_b for every X_c crossing Y_m and the letters after it.
    for (const auto& xc : between_x) {
      c *= 1 / d_.mu[xc.index][m];
      for (const auto& yb : between_y) c *= 1 / d_.mu[xc.index][yb.index];
    }
    for (const auto& yb : between_y) c *= 1 / d_.mu[m][yb.index];
    Word next(w.begin(), w.begin() + static_cast<long>(best_p));
    next.insert(next.end(), between_x.begin(), between_x.end());
    const std::size_t meet = next.size();
    next.push_back(Letter::Y(m));
    next.push_back(Letter::X(m));
    next.insert(next.end(), between_y.begin(), between_y.end());
    next.insert(next.end(), w.begin() + static_cast<long>(best_q) + 1, w.end());
    w = std::move(next);
    cancel(meet);
  }

  RedWord out;
  for (const auto& l : w) (l.is_x ? out.x : out.y).push_back(l.index);
  if (!out.empty()) {
    DegVec g = degree(w0, n);
    if (std::all_of(g.begin(), g.end(), [](long v) { return v == 0; }))
      throw InternalReductionStuck("reduction of a degree-zero word ended at " + to_string(out));
  }
  return Reduced{std::move(c), std::move(out)};
}

Element Engine::reduce(const Poly& coeff, const Word& w) const {
  Reduced r = reduce_monic(w);
  return Element::monomial(coeff * r.coeff, r.word);
}

Element Engine::generator(Letter l) const { return reduce(one(), Word{l}); }

Element Engine::multiply(const Element& a, const Element& b) const {
  Element out(variable_count());
  for (const auto& [w, r] : a.terms()) {
    const DegVec g = degree(w, rank());
    const Word ww = w.word();
    for (const auto& [v, s] : b.terms()) {
      Word cat = ww;
      const Word vv = v.word();
      cat.insert(cat.end(), vv.begin(), vv.end());
      Reduced red = reduce_monic(cat);
      out.add_term(red.word, r * twist(g, s) * red.coeff);
    }
  }
  return out;
}

Element Engine::commutator(const Element& a, const Element& b) const {
  return multiply(a, b) - multiply(b, a);
}

Poly Engine::gamma(const Element& a, const Element& b) const {
  Poly out(variable_count());
  for (const auto& [w, r] : a.terms()) {
    const DegVec g = degree(w, rank());
    for (const auto& [v, s] : b.terms()) {
      DegVec h = degree(v, rank());
      bool opposite = true;
      for (std::size_t i = 0; i < h.size(); ++i) opposite = opposite && h[i] == -g[i];
      if (!opposite) continue;
      Word cat = w.word();
      const Word vv = v.word();
      cat.insert(cat.end(), vv.begin(), vv.end());
      Reduced red = reduce_monic(cat);
      out += r * twist(g, s) * red.coeff;
    }
  }
  return out;
}

std::vector<RedWord> Engine::reduced_monomials_of_degree(const DegVec& g) const {
  if (g.size() != rank()) throw DimensionMismatch("reduced_monomials_of_degree: wrong length");
  long total = 0;
  for (long v : g) total += std::labs(v);
  if (total > opts_.degree_cap)
    throw DegreeTooLarge("degree " + to_string(g) + " exceeds the enumeration cap " + std::to_string(opts_.degree_cap));
  std::vector<std::uint32_t> ys, xs;
  for (std::uint32_t i = 0; i < g.size(); ++i) {
    for (long k = 0; k < -g[i]; ++k) ys.push_back(i);
    for (long k = 0; k < g[i]; ++k) xs.push_back(i);
  }
  std::vector<std::vector<std::uint32_t>> yperms, xperms;
  do yperms.push_back(ys); while (std::next_permutation(ys.begin(), ys.end()));
  do xperms.push_back(xs); while (std::next_permutation(xs.begin(), xs.end()));
  std::vector<RedWord> out;
  out.reserve(yperms.size() * xperms.size());
  for (const auto& y : yperms)
    for (const auto& x : xperms) out.push_back(RedWord{y, x});
  return out;
}

bool Engine::is_zero_in_A(const Element& a) const {
  for (const auto& [g, component] : a.homogeneous_components(rank())) {
    DegVec minus_g(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) minus_g[i] = -g[i];
    for (const auto& m : reduced_monomials_of_degree(minus_g))
      if (!gamma(component, Element::monomial(one(), m)).is_zero()) return false;
  }
  return true;
}

}  // namespace tgwa
