#include "tgwa/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "tgwa/errors.hpp"
#include "tgwa/expr_parser.hpp"

namespace tgwa {

namespace {

std::uint32_t degree_of(const Exponents& e) { return std::accumulate(e.begin(), e.end(), std::uint32_t{0}); }

void check_same(const Poly& a, const Poly& b, const char* where) {
  if (a.variable_count() != b.variable_count())
    throw DimensionMismatch(std::string(where) + ": polynomials over different variable counts");
}

struct PolyOps {
  using Value = Poly;
  const std::vector<std::string>& names;

  Value constant(const Rational& r) const { return Poly::constant(names.size(), r); }
  Value one() const { return Poly::constant(names.size(), 1); }
  Value identifier(std::string_view name, std::size_t position) const {
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) throw UnknownVariable(position, std::string(name));
    return Poly::variable(names.size(), static_cast<std::size_t>(it - names.begin()));
  }
  Value add(Value a, const Value& b) const { return a += b; }
  Value sub(Value a, const Value& b) const { return a -= b; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  Value neg(const Value& a) const { return -a; }
};

}  // namespace

bool GrlexLess::operator()(const Exponents& a, const Exponents& b) const {
  auto da = degree_of(a), db = degree_of(b);
  if (da != db) return da < db;
  return a < b;
}

Poly Poly::constant(std::size_t variable_count, const Rational& c) {
  Poly p(variable_count);
  p.add_term(Exponents(variable_count, 0), c);
  return p;
}

Poly Poly::variable(std::size_t variable_count, std::size_t index) {
  if (index >= variable_count) throw DimensionMismatch("Poly::variable: index out of range");
  Exponents e(variable_count, 0);
  e[index] = 1;
  return monomial(std::move(e), 1);
}

Poly Poly::monomial(Exponents e, const Rational& c) {
  Poly p(e.size());
  p.add_term(e, c);
  return p;
}

bool Poly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && degree_of(terms_.begin()->first) == 0);
}

Rational Poly::constant_term() const {
  auto it = terms_.find(Exponents(nvars_, 0));
  return it == terms_.end() ? Rational(0) : it->second;
}

int Poly::total_degree() const noexcept {
  if (terms_.empty()) return -1;
  return static_cast<int>(degree_of(terms_.rbegin()->first));
}

int Poly::degree_in(std::size_t var) const noexcept {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[var]));
  return d;
}

std::vector<std::size_t> Poly::support() const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < nvars_; ++v)
    if (std::any_of(terms_.begin(), terms_.end(), [v](const auto& t) { return t.first[v] > 0; })) out.push_back(v);
  return out;
}

void Poly::add_term(const Exponents& e, const Rational& c) {
  if (e.size() != nvars_) throw DimensionMismatch("Poly::add_term: exponent length");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  check_same(*this, o, "Poly::operator+");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  check_same(*this, o, "Poly::operator-");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  check_same(a, b, "Poly::operator*");
  Poly out(a.nvars_);
  Exponents e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& [e, v] : p.terms_) v = -v;
  return p;
}

Poly Poly::pow(unsigned k) const {
  Poly result = constant(nvars_, 1);
  Poly base = *this;
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k > 0) base *= base;
  }
  return result;
}

Rational Poly::evaluate(std::span<const Rational> point) const {
  if (point.size() != nvars_) throw DimensionMismatch("Poly::evaluate: point dimension");
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < nvars_; ++i)
      for (std::uint32_t k = 0; k < e[i]; ++k) t *= point[i];
    total += t;
  }
  return total;
}

RatVector Poly::univariate_coefficients(std::size_t var) const {
  RatVector out(static_cast<std::size_t>(std::max(0, degree_in(var)) + 1));
  if (terms_.empty()) return {};
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < nvars_; ++i)
      if (i != var && e[i] != 0) throw DimensionMismatch("Poly::univariate_coefficients: polynomial is not univariate");
    out[e[var]] = c;
  }
  return out;
}

Poly Poly::from_univariate(std::size_t variable_count, std::size_t var, std::span<const Rational> coeffs) {
  Poly p(variable_count);
  Exponents e(variable_count, 0);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    e[var] = static_cast<std::uint32_t>(k);
    p.add_term(e, coeffs[k]);
  }
  return p;
}

std::string to_string(const Poly& p, const std::vector<std::string>& names) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool has_vars = degree_of(e) > 0;
    bool wrote = false;
    if (mag != 1 || !has_vars) {
      os << mag.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (wrote) os << '*';
      os << (i < names.size() ? names[i] : "x" + std::to_string(i + 1));
      if (e[i] > 1) os << '^' << e[i];
      wrote = true;
    }
  }
  return os.str();
}

Poly parse_poly(std::string_view text, const std::vector<std::string>& names) {
  PolyOps ops{names};
  ExpressionParser<PolyOps> parser(text, ops);
  return parser.parse();
}

Endo::Endo(std::vector<Poly> images, std::vector<Poly> inverse)
    : images_(std::move(images)), inverse_(std::move(inverse)) {
  if (images_.size() != inverse_.size()) throw DimensionMismatch("Endo: images and inverse differ in length");
  for (const auto& p : images_)
    if (p.variable_count() != images_.size()) throw DimensionMismatch("Endo: image over wrong variable count");
  for (const auto& p : inverse_)
    if (p.variable_count() != images_.size()) throw DimensionMismatch("Endo: inverse over wrong variable count");
}

Endo Endo::identity(std::size_t variable_count) {
  std::vector<Poly> id;
  for (std::size_t j = 0; j < variable_count; ++j) id.push_back(Poly::variable(variable_count, j));
  return Endo(id, id);
}

bool Endo::is_identity() const {
  for (std::size_t j = 0; j < images_.size(); ++j)
    if (!(images_[j] == Poly::variable(images_.size(), j))) return false;
  return true;
}

Poly substitute(const std::vector<Poly>& images, const Poly& p) {
  if (images.size() != p.variable_count()) throw DimensionMismatch("substitute: variable count mismatch");
  const std::size_t n = images.size();
  if (p.is_constant()) return p;
  const std::size_t target_vars = n == 0 ? 0 : images.front().variable_count();
  // powers[j][k] = images[j]^k, built lazily
  std::vector<std::vector<Poly>> powers(n);
  auto power_of = [&](std::size_t j, std::uint32_t k) -> const Poly& {
    auto& pw = powers[j];
    if (pw.empty()) pw.push_back(Poly::constant(target_vars, 1));
    while (pw.size() <= k) pw.push_back(pw.back() * images[j]);
    return pw[k];
  };
  Poly out(target_vars);
  for (const auto& [e, c] : p.terms()) {
    Poly t = Poly::constant(target_vars, c);
    for (std::size_t j = 0; j < n; ++j)
      if (e[j] > 0) t *= power_of(j, e[j]);
    out += t;
  }
  return out;
}

Poly apply_endo(const Endo& e, const Poly& p) {
  if (e.variable_count() != p.variable_count()) throw DimensionMismatch("apply_endo: endomorphism and polynomial differ in variables");
  return substitute(e.images(), p);
}

Endo compose(const Endo& outer, const Endo& inner) {
  if (outer.variable_count() != inner.variable_count()) throw DimensionMismatch("compose: variable count mismatch");
  std::vector<Poly> images, inverse;
  for (const auto& q : inner.images()) images.push_back(apply_endo(outer, q));
  // (outer o inner)^-1 = inner^-1 o outer^-1
  for (const auto& q : outer.declared_inverse()) inverse.push_back(substitute(inner.declared_inverse(), q));
  return Endo(std::move(images), std::move(inverse));
}

Endo power(const Endo& e, long k) {
  Endo base = k < 0 ? e.inverse() : e;
  unsigned long n = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
  Endo result = Endo::identity(e.variable_count());
  while (n > 0) {
    if (n & 1UL) result = compose(result, base);
    n >>= 1UL;
    if (n > 0) base = compose(base, base);
  }
  return result;
}

bool is_automorphism_pair(const Endo& e) {
  const std::size_t n = e.variable_count();
  for (std::size_t j = 0; j < n; ++j) {
    const Poly u = Poly::variable(n, j);
    if (!(substitute(e.images(), e.declared_inverse()[j]) == u)) return false;
    if (!(substitute(e.declared_inverse(), e.images()[j]) == u)) return false;
  }
  return true;
}

bool endos_commute(const Endo& a, const Endo& b) {
  if (a.variable_count() != b.variable_count()) throw DimensionMismatch("endos_commute: variable count mismatch");
  for (std::size_t j = 0; j < a.variable_count(); ++j)
    if (!(apply_endo(a, b.images()[j]) == apply_endo(b, a.images()[j]))) return false;
  return true;
}

std::string to_string(FamilyTag f) {
  switch (f) {
    case FamilyTag::Translation: return "translation";
    case FamilyTag::TriangularQ: return "triangular-q";
    case FamilyTag::Generic: return "generic";
  }
  return "generic";
}

std::optional<FamilyTag> family_from_string(std::string_view s) {
  if (s == "translation") return FamilyTag::Translation;
  if (s == "triangular-q") return FamilyTag::TriangularQ;
  if (s == "generic") return FamilyTag::Generic;
  return std::nullopt;
}

std::optional<RatVector> translation_vector(const Endo& e) {
  const std::size_t n = e.variable_count();
  RatVector c(n);
  for (std::size_t j = 0; j < n; ++j) {
    Poly diff = e.images()[j] - Poly::variable(n, j);
    if (!diff.is_constant()) return std::nullopt;
    c[j] = diff.constant_term();
  }
  return c;
}

bool is_lower_triangular_linear(const Endo& e) {
  const std::size_t n = e.variable_count();
  for (std::size_t j = 0; j < n; ++j) {
    for (const auto& [ex, c] : e.images()[j].terms()) {
      if (degree_of(ex) != 1) return false;
      for (std::size_t k = j + 1; k < n; ++k)
        if (ex[k] != 0) return false;
    }
    Exponents diag(n, 0);
    diag[j] = 1;
    if (!e.images()[j].terms().contains(diag)) return false;
  }
  return true;
}

std::vector<Poly> triangular_inverse(const std::vector<Poly>& images) {
  const std::size_t n = images.size();
  std::vector<Poly> inv;
  inv.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    // images[j] = d*u_j + sum_{k<j} a_k u_k, so u_j = (y_j - sum a_k u_k)/d
    Exponents diag(n, 0);
    diag[j] = 1;
    auto it = images[j].terms().find(diag);
    if (it == images[j].terms().end()) throw DimensionMismatch("triangular_inverse: zero diagonal entry");
    const Rational d = it->second;
    Poly rest = images[j];
    rest.add_term(diag, -d);
    Poly lower = substitute([&] {
      std::vector<Poly> v = inv;
      for (std::size_t k = j; k < n; ++k) v.push_back(Poly(n));
      return v;
    }(), rest);
    Poly uj = (Poly::variable(n, j) - lower) * Rational(1 / d);
    inv.push_back(std::move(uj));
  }
  return inv;
}

std::optional<RatMatrix> affine_matrix(const Endo& e) {
  const std::size_t n = e.variable_count();
  RatMatrix m(n + 1, n + 1);
  m.at(0, 0) = 1;
  for (std::size_t j = 0; j < n; ++j) {
    const Poly& img = e.images()[j];
    if (!img.is_affine_linear()) return std::nullopt;
    for (const auto& [ex, c] : img.terms()) {
      std::size_t row = 0;
      for (std::size_t k = 0; k < n; ++k)
        if (ex[k] == 1) row = k + 1;
      m.at(row, j + 1) = c;
    }
  }
  return m;
}

}  // namespace tgwa
