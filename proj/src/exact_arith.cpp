#include "tgwa/exact_arith.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <utility>

#include "tgwa/errors.hpp"

namespace tgwa {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

// Integer rows obtained by clearing denominators; each row made primitive.
std::vector<IntVector> integer_rows(const RatMatrix& m) {
  std::vector<IntVector> out;
  out.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer lcm = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) lcm = ::lcm(lcm, Integer(m.at(r, c).get_den()));
    IntVector row(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) {
      Rational scaled = m.at(r, c) * Rational(lcm);
      row[c] = scaled.get_num();
    }
    out.push_back(std::move(row));
  }
  return out;
}

void make_primitive(IntVector& row) {
  Integer g = 0;
  for (const auto& x : row) g = gcd(g, x);
  if (g > 1)
    for (auto& x : row) x /= g;
}

struct Echelon {
  std::vector<IntVector> rows;        // reduced rows, one per pivot
  std::vector<std::size_t> pivots;    // pivot column of each row
};

// Fraction-free reduced row echelon form over Z: rows[i][pivots[i]] != 0 and
// every other row vanishes in that column.
Echelon integer_rref(std::vector<IntVector> rows, std::size_t cols) {
  Echelon e;
  std::size_t next = 0;
  for (std::size_t c = 0; c < cols && next < rows.size(); ++c) {
    std::size_t p = next;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[next]);
    const IntVector& piv = rows[next];
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == next || rows[r][c] == 0) continue;
      Integer g = gcd(piv[c], rows[r][c]);
      Integer a = piv[c] / g;
      Integer b = rows[r][c] / g;
      for (std::size_t k = 0; k < cols; ++k) rows[r][k] = a * rows[r][k] - b * piv[k];
      make_primitive(rows[r]);
    }
    e.pivots.push_back(c);
    ++next;
  }
  rows.resize(next);
  e.rows = std::move(rows);
  return e;
}

// Row Hermite normal form; zero rows removed.
std::vector<IntVector> hermite_rows(std::vector<IntVector> rows, std::size_t cols) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    // Euclid on column c among rows r.. until only one nonzero remains.
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        if (best == rows.size() || abs(rows[i][c]) < abs(rows[best][c])) best = i;
      }
      if (best == rows.size()) break;
      std::swap(rows[r], rows[best]);
      bool others = false;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[r][c].get_mpz_t());
        for (std::size_t k = c; k < cols; ++k) rows[i][k] -= q * rows[r][k];
        if (rows[i][c] != 0) others = true;
      }
      if (!others) break;
    }
    if (rows[r][c] == 0) continue;
    if (rows[r][c] < 0)
      for (auto& x : rows[r]) x = -x;
    for (std::size_t i = 0; i < r; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[r][c].get_mpz_t());
      if (q != 0)
        for (std::size_t k = c; k < cols; ++k) rows[i][k] -= q * rows[r][k];
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

// Pairwise coprime set B > 1 such that every input is a product of powers of B.
std::vector<Integer> coprime_base(std::vector<Integer> values) {
  std::vector<Integer> base;
  for (auto& v : values)
    if (v > 1) base.push_back(v);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < base.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < base.size() && !changed; ++j) {
        Integer g = gcd(base[i], base[j]);
        if (g == 1) continue;
        Integer a = base[i] / g;
        Integer b = base[j] / g;
        base.erase(base.begin() + static_cast<std::ptrdiff_t>(j));
        base.erase(base.begin() + static_cast<std::ptrdiff_t>(i));
        for (Integer* x : {&a, &b, &g})
          if (*x > 1) base.push_back(*x);
        changed = true;
      }
    }
  }
  std::sort(base.begin(), base.end());
  return base;
}

long valuation(Integer x, const Integer& p) {
  long e = 0;
  while (x != 0 && mpz_divisible_p(x.get_mpz_t(), p.get_mpz_t())) {
    x /= p;
    ++e;
  }
  return e;
}

Integer pollard_rho(const Integer& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    Integer x = 2, y = 2, d = 1;
    auto f = [&](const Integer& v) {
      Integer r = v * v + c;
      mpz_mod(r.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t());
      return r;
    };
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      d = gcd(abs(x - y), n);
    }
    if (d != n) return d;
  }
}

void factor_into(Integer n, std::map<Integer, unsigned>& out) {
  if (n <= 1) return;
  for (unsigned long p = 2; p < 1000 && Integer(p) * p <= n; ++p) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      n /= p;
      ++out[Integer(p)];
    }
  }
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
    ++out[n];
    return;
  }
  Integer d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

std::vector<Integer> positive_divisors(const Integer& n) {
  std::map<Integer, unsigned> f;
  factor_into(abs(n), f);
  std::vector<Integer> divs{1};
  for (const auto& [p, e] : f) {
    std::size_t count = divs.size();
    Integer pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < count; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c) != 0; }), s.end());
  std::string_view body = s;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) throw SyntaxError(0, "malformed rational '" + std::string(text) + "'");
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) throw SyntaxError(slash + 1, "zero denominator in '" + std::string(text) + "'");
  Rational r(negative ? Integer(-n) : n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) { return value.get_str(); }

std::string to_string(const IntVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].get_str();
  os << ')';
  return os.str();
}

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVector>& rows, std::size_t cols) {
  RatMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatch("RatMatrix::from_rows: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

RatVector RatMatrix::row(std::size_t r) const {
  return RatVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

void RatMatrix::append_row(const RatVector& row) {
  if (row.size() != cols_) throw DimensionMismatch("RatMatrix::append_row: wrong row length");
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

RatVector RatMatrix::apply(std::span<const Rational> v) const {
  if (v.size() != cols_) throw DimensionMismatch("RatMatrix::apply: wrong vector length");
  RatVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r] += at(r, c) * v[c];
  return out;
}

RatVector RatMatrix::apply(std::span<const Integer> v) const {
  RatVector q(v.begin(), v.end());
  return apply(std::span<const Rational>(q));
}

std::size_t rank(const RatMatrix& m) { return integer_rref(integer_rows(m), m.cols()).rows.size(); }

std::vector<RatVector> rational_nullspace(const RatMatrix& m) {
  Echelon e = integer_rref(integer_rows(m), m.cols());
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<RatVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RatVector v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < e.rows.size(); ++i) {
      const auto& row = e.rows[i];
      v[e.pivots[i]] = Rational(-row[f], row[e.pivots[i]]);
      v[e.pivots[i]].canonicalize();
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RatVector> solve(const RatMatrix& m, std::span<const Rational> rhs) {
  if (rhs.size() != m.rows()) throw DimensionMismatch("solve: rhs length");
  RatMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, m.cols()) = rhs[r];
  }
  Echelon e = integer_rref(integer_rows(aug), aug.cols());
  RatVector x(m.cols());
  for (std::size_t i = 0; i < e.rows.size(); ++i) {
    if (e.pivots[i] == m.cols()) return std::nullopt;
    x[e.pivots[i]] = Rational(e.rows[i][m.cols()], e.rows[i][e.pivots[i]]);
    x[e.pivots[i]].canonicalize();
  }
  return x;
}

Rational determinant(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("determinant: matrix not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  Rational scale = 1;
  std::vector<IntVector> a;
  for (std::size_t r = 0; r < n; ++r) {
    Integer lcm = 1;
    for (std::size_t c = 0; c < n; ++c) lcm = ::lcm(lcm, Integer(m.at(r, c).get_den()));
    IntVector row(n);
    for (std::size_t c = 0; c < n; ++c) row[c] = Rational(m.at(r, c) * Rational(lcm)).get_num();
    scale /= Rational(lcm);
    a.push_back(std::move(row));
  }
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = v;
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  Rational det(a[n - 1][n - 1] * sign);
  return det * scale;
}

Lattice Lattice::from_generators(std::size_t ambient_rank, std::vector<IntVector> generators) {
  for (const auto& g : generators)
    if (g.size() != ambient_rank) throw DimensionMismatch("Lattice: generator of wrong length");
  Lattice l(ambient_rank);
  l.basis_ = hermite_rows(std::move(generators), ambient_rank);
  return l;
}

Lattice Lattice::full(std::size_t ambient_rank) {
  std::vector<IntVector> gens;
  for (std::size_t i = 0; i < ambient_rank; ++i) {
    IntVector e(ambient_rank);
    e[i] = 1;
    gens.push_back(std::move(e));
  }
  return from_generators(ambient_rank, std::move(gens));
}

std::optional<IntVector> Lattice::coordinates(const IntVector& v) const {
  if (v.size() != ambient_rank_) throw DimensionMismatch("Lattice::coordinates: wrong length");
  IntVector rest = v;
  IntVector coords(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const auto& b = basis_[i];
    std::size_t p = 0;
    while (b[p] == 0) ++p;
    for (std::size_t k = 0; k < p; ++k)
      if (rest[k] != 0) return std::nullopt;
    if (!mpz_divisible_p(rest[p].get_mpz_t(), b[p].get_mpz_t())) return std::nullopt;
    Integer c = rest[p] / b[p];
    for (std::size_t k = 0; k < ambient_rank_; ++k) rest[k] -= c * b[k];
    coords[i] = c;
  }
  for (const auto& x : rest)
    if (x != 0) return std::nullopt;
  return coords;
}

bool Lattice::contains(const IntVector& v) const { return coordinates(v).has_value(); }

std::string Lattice::to_string() const {
  if (basis_.empty()) return "{}";
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < basis_.size(); ++i) os << (i ? ", " : "") << tgwa::to_string(basis_[i]);
  os << '}';
  return os.str();
}

Lattice integer_kernel(const RatMatrix& m) {
  const std::size_t n = m.cols();
  std::vector<IntVector> a = integer_rows(m);
  // Unimodular column operations: a * u stays in column echelon form.
  std::vector<IntVector> u(n, IntVector(n));
  for (std::size_t i = 0; i < n; ++i) u[i][i] = 1;
  auto col_axpy = [&](std::size_t dst, std::size_t src, const Integer& q) {
    for (auto& row : a) row[dst] -= q * row[src];
    for (auto& row : u) row[dst] -= q * row[src];
  };
  auto col_swap = [&](std::size_t x, std::size_t y) {
    for (auto& row : a) std::swap(row[x], row[y]);
    for (auto& row : u) std::swap(row[x], row[y]);
  };
  std::size_t k = 0;
  for (std::size_t r = 0; r < a.size() && k < n; ++r) {
    for (;;) {
      std::size_t best = n;
      for (std::size_t c = k; c < n; ++c) {
        if (a[r][c] == 0) continue;
        if (best == n || abs(a[r][c]) < abs(a[r][best])) best = c;
      }
      if (best == n) break;
      col_swap(k, best);
      bool others = false;
      for (std::size_t c = k + 1; c < n; ++c) {
        if (a[r][c] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a[r][c].get_mpz_t(), a[r][k].get_mpz_t());
        col_axpy(c, k, q);
        if (a[r][c] != 0) others = true;
      }
      if (!others) break;
    }
    if (a[r][k] != 0) ++k;
  }
  std::vector<IntVector> kernel;
  for (std::size_t c = k; c < n; ++c) {
    IntVector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = u[i][c];
    kernel.push_back(std::move(v));
  }
  return Lattice::from_generators(n, std::move(kernel));
}

Lattice rational_mult_relations(std::span<const Rational> values) {
  return rational_mult_relations(std::vector<RatVector>{RatVector(values.begin(), values.end())});
}

Lattice rational_mult_relations(const std::vector<RatVector>& rows) {
  if (rows.empty()) return Lattice(0);
  const std::size_t m = rows.front().size();
  std::vector<Integer> pieces;
  for (const auto& row : rows) {
    if (row.size() != m) throw DimensionMismatch("rational_mult_relations: ragged rows");
    for (const auto& v : row) {
      if (v == 0) throw ZeroValue("rational_mult_relations: zero value");
      pieces.push_back(abs(v.get_num()));
      pieces.push_back(v.get_den());
    }
  }
  const std::vector<Integer> base = coprime_base(pieces);
  // Unknowns: g (m entries) then one parity slack per row.
  const std::size_t cols = m + rows.size();
  RatMatrix sys(0, cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (const auto& p : base) {
      RatVector eq(cols);
      for (std::size_t j = 0; j < m; ++j)
        eq[j] = valuation(abs(rows[r][j].get_num()), p) - valuation(rows[r][j].get_den(), p);
      sys.append_row(eq);
    }
    RatVector parity(cols);
    for (std::size_t j = 0; j < m; ++j) parity[j] = rows[r][j] < 0 ? 1 : 0;
    parity[m + r] = -2;
    sys.append_row(parity);
  }
  Lattice full = integer_kernel(sys);
  // The slack is determined by g, so projection keeps the basis independent.
  std::vector<IntVector> projected;
  for (const auto& b : full.basis()) projected.emplace_back(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(m));
  return Lattice::from_generators(m, std::move(projected));
}

std::vector<Rational> rational_roots(std::span<const Rational> coeffs_ascending) {
  std::vector<Rational> c(coeffs_ascending.begin(), coeffs_ascending.end());
  while (!c.empty() && c.back() == 0) c.pop_back();
  if (c.empty()) throw ZeroPolynomial("rational_roots: zero polynomial");
  std::vector<Rational> roots;
  std::size_t low = 0;
  while (c[low] == 0) ++low;
  if (low > 0) {
    roots.push_back(0);
    c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(low));
  }
  if (c.size() > 1) {
    Integer lcm = 1;
    for (const auto& x : c) lcm = ::lcm(lcm, Integer(x.get_den()));
    IntVector ic;
    for (const auto& x : c) ic.push_back(Rational(x * Rational(lcm)).get_num());
    auto eval = [&](const Rational& x) {
      Rational acc = 0;
      for (std::size_t k = ic.size(); k-- > 0;) acc = acc * x + Rational(ic[k]);
      return acc;
    };
    const auto nums = positive_divisors(ic.front());
    const auto dens = positive_divisors(ic.back());
    for (const auto& p : nums) {
      for (const auto& q : dens) {
        for (int s : {1, -1}) {
          Rational cand(s * p, q);
          cand.canonicalize();
          if (eval(cand) == 0) roots.push_back(cand);
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace tgwa
