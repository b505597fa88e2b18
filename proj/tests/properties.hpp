#pragma once

// Randomized property checks with a fixed seed. Each returns the number of
// cases run and the first failure, if any.

#include <functional>
#include <memory>

#include "support.hpp"

namespace tgwa::testing {

struct PropertyResult {
  int cases = 0;
  int failures = 0;
  std::string first_failure;

  bool ok() const { return failures == 0 && cases > 0; }
  void fail(const std::string& why) {
    if (failures++ == 0) first_failure = why;
  }
};

class EnginePool {
 public:
  explicit EnginePool(Rng& rng) {
    for (auto& d : datum_pool(rng)) engines_.push_back(std::make_unique<Engine>(std::move(d)));
  }
  const Engine& pick(Rng& rng) const {
    return *engines_[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(engines_.size()) - 1))];
  }
  const std::vector<std::unique_ptr<Engine>>& all() const { return engines_; }

 private:
  std::vector<std::unique_ptr<Engine>> engines_;
};

inline PropertyResult prop_degree_preservation(int cases = 100) {
  Rng rng(kSeed);
  EnginePool pool(rng);
  PropertyResult r;
  for (int c = 0; c < cases; ++c, ++r.cases) {
    const Engine& e = pool.pick(rng);
    Word w = random_word(rng, e.rank(), 6);
    Element a = e.reduce(e.one(), w);
    const DegVec g = word_degree(w, e.rank());
    for (const auto& [rw, _] : a.terms())
      if (degree(rw, e.rank()) != g) r.fail(e.datum().name + ": degree changed for " + to_string(w));
  }
  return r;
}

inline PropertyResult prop_degree_zero_totality(int cases = 100) {
  Rng rng(kSeed + 1);
  EnginePool pool(rng);
  PropertyResult r;
  for (int c = 0; c < cases; ++c, ++r.cases) {
    const Engine& e = pool.pick(rng);
    Word w = random_degree_zero_word(rng, e.rank(), 10);
    try {
      Element a = e.reduce(e.one(), w);
      if (a.terms().size() != 1 || !a.terms().begin()->first.empty())
        r.fail(e.datum().name + ": " + to_string(w) + " did not reduce to a ring element");
    } catch (const InternalReductionStuck& ex) {
      r.fail(ex.what());
    }
  }
  return r;
}

inline PropertyResult prop_gamma_adjoint(int cases = 100) {
  Rng rng(kSeed + 2);
  EnginePool pool(rng);
  PropertyResult r;
  for (int c = 0; c < cases; ++c, ++r.cases) {
    const Engine& e = pool.pick(rng);
    Element a = random_element(e, rng), b = random_element(e, rng), x = random_element(e, rng);
    if (e.gamma(a, e.multiply(b, x)) != e.gamma(e.multiply(a, b), x))
      r.fail(e.datum().name + ": gamma(a, bc) != gamma(ab, c)");
  }
  return r;
}

inline PropertyResult prop_gamma_twist(int cases = 100) {
  Rng rng(kSeed + 3);
  EnginePool pool(rng);
  PropertyResult r;
  for (int c = 0; c < cases; ++c, ++r.cases) {
    const Engine& e = pool.pick(rng);
    Word w = random_word(rng, e.rank(), 4);
    const DegVec g = word_degree(w, e.rank());
    DegVec minus = g;
    for (auto& x : minus) x = -x;
    auto words = e.reduced_monomials_of_degree(minus);
    const auto& v = words[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(words.size()) - 1))];
    Element a = random_ring_element(rng, e.variable_count()) * e.from_word(w);
    Element b = Element::monomial(random_ring_element(rng, e.variable_count()), v);
    if (e.gamma(a, b) != twist_by_substitution(e.datum(), g, e.gamma(b, a)))
      r.fail(e.datum().name + ": twist identity fails for " + to_string(w));
  }
  return r;
}

inline PropertyResult prop_monomial_nonvanishing(int cases = 100) {
  Rng rng(kSeed + 4);
  EnginePool pool(rng);
  PropertyResult r;
  for (int c = 0; c < cases; ++c, ++r.cases) {
    const Engine& e = pool.pick(rng);
    Word w = random_word(rng, e.rank(), 6);
    Element m = e.from_word(w);
    Poly s = random_ring_element(rng, e.variable_count());
    if (e.is_zero_in_A(m)) r.fail(e.datum().name + ": monic word " + to_string(w) + " vanishes");
    if (!s.is_zero() && e.is_zero_in_A(s * m)) r.fail(e.datum().name + ": r*" + to_string(w) + " vanishes");
  }
  return r;
}

inline PropertyResult prop_kernel_centralizes(int cases = 100) {
  Rng rng(kSeed + 5);
  EnginePool pool(rng);
  struct Case {
    const Engine* engine;
    std::vector<RedWord> words;
  };
  std::vector<Case> usable;
  for (const auto& e : pool.all()) {
    KernelDescription k = kernel_of_sigma(e->datum());
    if (!k.certified || k.lattice.is_zero()) continue;
    Case cs{e.get(), {}};
    for (const auto& b : k.lattice.basis())
      for (long m : {1L, -1L, 2L}) {
        DegVec g;
        long l1 = 0;
        for (const auto& x : b) {
          g.push_back(m * x.get_si());
          l1 += std::labs(g.back());
        }
        if (l1 > 4) continue;
        for (auto& w : e->reduced_monomials_of_degree(g)) cs.words.push_back(w);
      }
    if (!cs.words.empty()) usable.push_back(std::move(cs));
  }
  PropertyResult r;
  if (usable.empty()) return r;
  for (int c = 0; c < cases; ++c, ++r.cases) {
    const Case& cs = usable[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(usable.size()) - 1))];
    const Engine& e = *cs.engine;
    const RedWord& w = cs.words[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(cs.words.size()) - 1))];
    Element a = Element::monomial(e.one(), w);
    Element s = Element::scalar(random_ring_element(rng, e.variable_count(), 2));
    if (!e.is_zero_in_A(e.commutator(a, s)))
      r.fail(e.datum().name + ": [" + to_string(w) + ", r] != 0 for a kernel-degree word");
  }
  return r;
}

inline PropertyResult prop_associativity(int cases = 100) {
  Rng rng(kSeed + 6);
  EnginePool pool(rng);
  PropertyResult r;
  for (int c = 0; c < cases; ++c, ++r.cases) {
    const Engine& e = pool.pick(rng);
    Element a = random_element(e, rng), b = random_element(e, rng), x = random_element(e, rng);
    if (!e.equal_in_A(e.multiply(e.multiply(a, b), x), e.multiply(a, e.multiply(b, x))))
      r.fail(e.datum().name + ": (ab)c != a(bc) in A");
  }
  return r;
}

/// reduce on random degree-zero words against the breadth-first relation oracle.
inline PropertyResult prop_oracle_equivalence(int cases = 100) {
  Rng rng(kSeed + 7);
  EnginePool pool(rng);
  PropertyResult r;
  for (int c = 0; c < cases; ++c, ++r.cases) {
    const Engine& e = pool.pick(rng);
    Word w = random_degree_zero_word(rng, e.rank(), 8);
    Element a = e.reduce(e.one(), w);
    Poly oracle = relation_oracle_value(e.datum(), w);
    if (a.coefficient(RedWord{}) != oracle || a.terms().size() > 1)
      r.fail(e.datum().name + ": " + to_string(w) + " reduces to " + to_string(a, e.datum().variables) +
             ", oracle gives " + to_string(oracle, e.datum().variables));
  }
  return r;
}

}  // namespace tgwa::testing
