#include "tgwa/cartan.hpp"

#include <numeric>

#include "tgwa/errors.hpp"

namespace tgwa {

namespace {

Rational rational_pow(const Rational& q, long k) {
  Rational base = k < 0 ? Rational(1 / q) : q;
  Rational r = 1;
  for (long e = 0; e < std::labs(k); ++e) r *= base;
  return r;
}

std::string pair_label(std::size_t i, std::size_t j, long k) {
  return "H" + std::to_string(i + 1) + std::to_string(j + 1) + "^(" + std::to_string(k) + ")";
}

}  // namespace

void validate_gcm(const GCM& c) {
  const std::size_t n = c.size();
  for (const auto& row : c)
    if (row.size() != n) throw InvalidGCM("matrix is not square");
  for (std::size_t i = 0; i < n; ++i) {
    if (c[i][i] != 2) throw InvalidGCM("a_" + std::to_string(i + 1) + std::to_string(i + 1) + " must be 2");
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const std::string ij = std::to_string(i + 1) + "," + std::to_string(j + 1);
      if (c[i][j] > 0) throw InvalidGCM("a(" + ij + ") must be <= 0");
      if ((c[i][j] == 0) != (c[j][i] == 0)) throw InvalidGCM("a(" + ij + ") = 0 must match a(j,i) = 0");
      if (c[i][j] != c[j][i]) throw InvalidGCM("matrix is not symmetric at (" + ij + ")");
    }
  }
}

std::vector<std::vector<std::size_t>> coxeter_components(const GCM& c) {
  validate_gcm(c);
  const std::size_t n = c.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (c[i][j] < 0) {
        std::size_t a = find(i), b = find(j);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
  std::vector<std::vector<std::size_t>> out;
  std::vector<long> slot(n, -1);
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t r = find(v);
    if (slot[r] < 0) {
      slot[r] = static_cast<long>(out.size());
      out.emplace_back();
    }
    out[static_cast<std::size_t>(slot[r])].push_back(v);
  }
  return out;
}

Lattice kernel_basis_components(const GCM& c) {
  const std::size_t n = c.size();
  std::vector<IntVector> gens;
  for (const auto& comp : coxeter_components(c)) {
    IntVector g(n, 0);
    for (auto v : comp) g[v] = 1;
    gens.push_back(g);
  }
  return Lattice::from_generators(n, std::move(gens));
}

Rational quantum_int(long k, const Rational& q) {
  if (q == 0) throw ZeroQ("q must be nonzero");
  if (k < 0) return -quantum_int(-k, q);
  Rational s = 0;
  for (long e = -k + 1; e <= k - 1; e += 2) s += rational_pow(q, e);
  return s;
}

TGWDatum build_tq(const GCM& c, const Rational& q) {
  validate_gcm(c);
  if (q == 0) throw ZeroQ("q must be nonzero");
  const std::size_t n = c.size();
  TGWDatum d;
  d.name = "T_q(C)";
  d.rank = n;
  d.family = FamilyTag::TriangularQ;

  struct Block {
    std::size_t i, j, first;  // variables first .. first + size - 1, by increasing k
    long a;
  };
  std::vector<Block> blocks;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const long a = c[i][j];
      blocks.push_back({i, j, d.variables.size(), a});
      for (long k = a; k <= -a; k += 2) {
        d.variables.push_back("H" + std::to_string(i + 1) + "_" + std::to_string(j + 1) + "__" + std::to_string(k - a));
        d.labels.push_back(pair_label(i, j, k));
      }
    }
  const std::size_t nv = d.variables.size();

  std::vector<std::vector<Poly>> images(n);
  for (auto& im : images)
    for (std::size_t v = 0; v < nv; ++v) im.push_back(Poly::variable(nv, v));
  for (const auto& b : blocks) {
    // sigma_j(H^(k)) = q^k H^(k) + H^(k-2)
    std::size_t v = b.first;
    for (long k = b.a; k <= -b.a; k += 2, ++v) {
      Poly img = Poly::variable(nv, v) * rational_pow(q, k);
      if (k > b.a) img += Poly::variable(nv, v - 1);
      images[b.j][v] = img;
    }
  }
  for (std::size_t r = 0; r < n; ++r) d.sigma.emplace_back(images[r], triangular_inverse(images[r]));
  // sigma_i = sigma_j^{-1} on the variables of the pair (i, j).
  std::vector<std::vector<Poly>> full(n);
  for (std::size_t r = 0; r < n; ++r) full[r] = d.sigma[r].images();
  for (const auto& b : blocks) {
    const auto& inv = d.sigma[b.j].declared_inverse();
    for (std::size_t v = b.first; v < b.first + static_cast<std::size_t>(1 - b.a); ++v) full[b.i][v] = inv[v];
  }
  for (std::size_t r = 0; r < n; ++r) {
    std::vector<Poly> inv = triangular_inverse(full[r]);
    d.sigma[r] = Endo(full[r], inv);
  }

  // t_i = prod_j H_ij with H_ij = H_ij^(-a_ij) for i < j and H_ji = sigma_j^{-1}(H_ij).
  for (std::size_t i = 0; i < n; ++i) d.t.push_back(Poly::constant(nv, 1));
  for (const auto& b : blocks) {
    const Poly h = Poly::variable(nv, b.first + static_cast<std::size_t>(-b.a));
    d.t[b.i] *= h;
    d.t[b.j] *= apply_endo(d.sigma[b.j].inverse(), h);
  }
  d.mu.assign(n, RatVector(n, Rational(1)));
  return d;
}

bool verify_relation(const Engine& engine, const Element& lhs, const Element& rhs) {
  return engine.equal_in_A(lhs, rhs);
}

}  // namespace tgwa
