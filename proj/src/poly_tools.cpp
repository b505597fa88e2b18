#include "tgwa/poly_tools.hpp"

#include <algorithm>

#include "tgwa/errors.hpp"

namespace tgwa {

namespace {

void trim(RatVector& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

// Remainder of a modulo b (b nonzero, trimmed).
RatVector poly_rem(RatVector a, const RatVector& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    Rational f = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    trim(a);
  }
  return a;
}

Poly derivative(const Poly& p, std::size_t var) {
  Poly out(p.variable_count());
  for (const auto& [e, c] : p.terms()) {
    if (e[var] == 0) continue;
    Exponents d = e;
    --d[var];
    out.add_term(d, c * static_cast<unsigned long>(e[var]));
  }
  return out;
}

Exponents lcm_exponents(const Exponents& a, const Exponents& b) {
  Exponents l(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) l[i] = std::max(a[i], b[i]);
  return l;
}

bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Exponents minus(const Exponents& a, const Exponents& b) {
  Exponents d(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
  return d;
}

Poly make_monic(Poly p) {
  if (p.is_zero()) return p;
  Rational lc = p.leading_term().second;
  return p * Rational(1 / lc);
}

// Taylor shift: coefficients of t(u + x0).
RatVector shifted(const RatVector& t, const Rational& x0) {
  RatVector out(t.size());
  // Horner in the polynomial ring: out = (((t_d)(u+x0) + t_{d-1})(u+x0) + ...)
  for (std::size_t k = t.size(); k-- > 0;) {
    RatVector next(out.size());
    for (std::size_t i = 0; i + 1 < out.size(); ++i) {
      next[i + 1] += out[i];
      next[i] += out[i] * x0;
    }
    next[0] += t[k];
    out = std::move(next);
  }
  return out;
}

}  // namespace

RatVector univariate_gcd(RatVector a, RatVector b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    RatVector r = poly_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Rational lc = a.back();
    for (auto& c : a) c /= lc;
  }
  return a;
}

Poly univariate_gcd(const Poly& a, const Poly& b, std::size_t var) {
  RatVector g = univariate_gcd(a.univariate_coefficients(var), b.univariate_coefficients(var));
  return Poly::from_univariate(a.variable_count(), var, g);
}

Rational sylvester_resultant(const RatVector& f_in, const RatVector& g_in) {
  RatVector f = f_in, g = g_in;
  trim(f);
  trim(g);
  if (f.empty() || g.empty()) return 0;
  const std::size_t m = f.size() - 1, n = g.size() - 1;
  const std::size_t size = m + n;
  if (size == 0) return 1;
  RatMatrix s(size, size);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k <= m; ++k) s.at(r, r + k) = f[m - k];
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t k = 0; k <= n; ++k) s.at(n + r, r + k) = g[n - k];
  return determinant(s);
}

Poly shift_resultant(const RatVector& t_in) {
  RatVector t = t_in;
  trim(t);
  if (t.empty()) throw ZeroPolynomial("shift_resultant: zero polynomial");
  const std::size_t d = t.size() - 1;
  const std::size_t nodes = d * d + 1;
  std::vector<Rational> xs, ys;
  for (std::size_t i = 0; i < nodes; ++i) {
    Rational x0(static_cast<long>(i));
    xs.push_back(x0);
    ys.push_back(sylvester_resultant(t, shifted(t, x0)));
  }
  // Newton divided differences, then expand to monomial coefficients.
  std::vector<Rational> dd = ys;
  for (std::size_t level = 1; level < nodes; ++level)
    for (std::size_t i = nodes - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
      if (i == level) break;
    }
  RatVector coeffs{dd[nodes - 1]};
  for (std::size_t k = nodes - 1; k-- > 0;) {
    // coeffs = coeffs * (x - xs[k]) + dd[k]
    RatVector next(coeffs.size() + 1);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      next[i + 1] += coeffs[i];
      next[i] -= coeffs[i] * xs[k];
    }
    next[0] += dd[k];
    coeffs = std::move(next);
  }
  trim(coeffs);
  return Poly::from_univariate(1, 0, coeffs);
}

std::vector<Rational> rational_roots(const Poly& p, std::size_t var) {
  RatVector c = p.univariate_coefficients(var);
  return rational_roots(std::span<const Rational>(c));
}

Poly normal_form(const Poly& p_in, const std::vector<Poly>& divisors) {
  Poly p = p_in;
  Poly rem(p.variable_count());
  while (!p.is_zero()) {
    const auto [lm, lc] = p.leading_term();
    bool divided = false;
    for (const auto& g : divisors) {
      if (g.is_zero()) continue;
      const auto& [gm, gc] = g.leading_term();
      if (!divides(gm, lm)) continue;
      Poly factor = Poly::monomial(minus(lm, gm), lc / gc);
      p -= factor * g;
      divided = true;
      break;
    }
    if (!divided) {
      rem.add_term(lm, lc);
      p.add_term(lm, -lc);
    }
  }
  return rem;
}

std::vector<Poly> groebner_basis(const std::vector<Poly>& generators) {
  std::vector<Poly> basis;
  for (const auto& g : generators)
    if (!g.is_zero()) basis.push_back(make_monic(g));
  if (basis.empty()) return basis;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) pairs.emplace_back(i, j);
  while (!pairs.empty()) {
    auto [i, j] = pairs.back();
    pairs.pop_back();
    const auto& [mi, ci] = basis[i].leading_term();
    const auto& [mj, cj] = basis[j].leading_term();
    Exponents l = lcm_exponents(mi, mj);
    Poly s = Poly::monomial(minus(l, mi), 1 / ci) * basis[i] - Poly::monomial(minus(l, mj), 1 / cj) * basis[j];
    Poly r = normal_form(s, basis);
    if (r.is_zero()) continue;
    basis.push_back(make_monic(r));
    if (basis.back().is_constant()) return {Poly::constant(basis.back().variable_count(), 1)};
    for (std::size_t k = 0; k + 1 < basis.size(); ++k) pairs.emplace_back(k, basis.size() - 1);
  }
  // Inter-reduce into the reduced basis.
  std::vector<Poly> reduced;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const auto& mi = basis[i].leading_term().first;
      const auto& mj = basis[j].leading_term().first;
      if (divides(mj, mi) && (mi != mj || j < i)) redundant = true;
    }
    if (!redundant) reduced.push_back(basis[i]);
  }
  for (std::size_t i = 0; i < reduced.size(); ++i) {
    std::vector<Poly> others;
    for (std::size_t j = 0; j < reduced.size(); ++j)
      if (j != i) others.push_back(reduced[j]);
    Poly lead = Poly::monomial(reduced[i].leading_term().first, 1);
    Poly tail = reduced[i] - lead;
    reduced[i] = make_monic(lead + normal_form(tail, others));
  }
  std::sort(reduced.begin(), reduced.end(), [](const Poly& a, const Poly& b) {
    return GrlexLess{}(a.leading_term().first, b.leading_term().first);
  });
  return reduced;
}

bool groebner_contains_one(const std::vector<Poly>& generators) {
  for (const auto& g : groebner_basis(generators))
    if (g.is_constant() && !g.is_zero()) return true;
  return false;
}

std::optional<LinearFormPresentation> as_polynomial_in_linear_form(const Poly& p) {
  const int d = p.total_degree();
  const std::size_t n = p.variable_count();
  if (d < 1) return std::nullopt;
  Poly top(n);
  for (const auto& [e, c] : p.terms()) {
    std::uint32_t deg = 0;
    for (auto x : e) deg += x;
    if (static_cast<int>(deg) == d) top.add_term(e, c);
  }
  Poly form(n);
  for (std::size_t k = 0; k < n && form.is_zero(); ++k) {
    Poly q = top;
    for (int i = 0; i < d - 1; ++i) q = derivative(q, k);
    if (q.total_degree() == 1 && q.constant_term() == 0) form = q;
  }
  if (form.is_zero()) return std::nullopt;
  // Normalise on the first variable that occurs.
  std::size_t lead = n;
  Rational lead_coeff;
  for (std::size_t k = 0; k < n && lead == n; ++k) {
    Exponents e(n, 0);
    e[k] = 1;
    auto it = form.terms().find(e);
    if (it != form.terms().end()) {
      lead = k;
      lead_coeff = it->second;
    }
  }
  form *= Rational(1 / lead_coeff);
  // Substitute u_lead -> u_lead - (form - u_lead); then form becomes u_lead.
  std::vector<Poly> images;
  for (std::size_t k = 0; k < n; ++k) images.push_back(Poly::variable(n, k));
  images[lead] = Poly::variable(n, lead) * Rational(2) - form;
  Poly q = substitute(images, p);
  for (const auto& [e, c] : q.terms())
    for (std::size_t k = 0; k < n; ++k)
      if (k != lead && e[k] != 0) return std::nullopt;
  return LinearFormPresentation{form, q.univariate_coefficients(lead)};
}

}  // namespace tgwa
