#pragma once

// Words, reduced monomials, elements with left coefficients, and the
// reduction / multiplication / gradation-form engine.

#include <compare>
#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "tgwa/datum.hpp"

namespace tgwa {

struct Letter {
  bool is_x = true;
  std::uint32_t index = 0;  // 0-based generator index

  static Letter X(std::uint32_t i) { return {true, i}; }
  static Letter Y(std::uint32_t i) { return {false, i}; }
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

/// Y_{y[0]}...Y_{y[k-1]} X_{x[0]}...X_{x[l-1]} with disjoint index sets.
struct RedWord {
  std::vector<std::uint32_t> y;
  std::vector<std::uint32_t> x;

  bool empty() const noexcept { return y.empty() && x.empty(); }
  Word word() const;
  friend auto operator<=>(const RedWord&, const RedWord&) = default;
};

DegVec degree(const Word& w, std::size_t rank);
DegVec degree(const RedWord& w, std::size_t rank);

/// "X1*Y2", or "1" for the empty word (1-based indices).
std::string to_string(const Word& w);
std::string to_string(const RedWord& w);

class Element {
 public:
  using TermMap = std::map<RedWord, Poly>;

  explicit Element(std::size_t variable_count = 0) : nvars_(variable_count) {}
  static Element monomial(const Poly& coeff, RedWord w);
  static Element scalar(const Poly& coeff) { return monomial(coeff, RedWord{}); }

  std::size_t variable_count() const noexcept { return nvars_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add_term(const RedWord& w, const Poly& coeff);
  /// Coefficient of w (zero polynomial if absent).
  Poly coefficient(const RedWord& w) const;

  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  Element operator-() const;
  /// Left multiplication by a ring element.
  friend Element operator*(const Poly& r, const Element& a);
  friend Element operator*(const Rational& c, const Element& a);

  friend bool operator==(const Element&, const Element&) = default;

  /// Terms grouped by degree.
  std::map<DegVec, Element> homogeneous_components(std::size_t rank) const;

 private:
  std::size_t nvars_;
  TermMap terms_;
};

std::string to_string(const Element& a, const std::vector<std::string>& names);

struct EngineOptions {
  long degree_cap = 12;  // bound on sum |g_i| for reduced-monomial enumeration
};

/// Thread-safe: caches are guarded by a mutex and never observed half-built.
class Engine {
 public:
  explicit Engine(TGWDatum d, EngineOptions opts = {});

  const TGWDatum& datum() const noexcept { return d_; }
  std::size_t rank() const noexcept { return d_.rank; }
  std::size_t variable_count() const noexcept { return d_.variable_count(); }
  const EngineOptions& options() const noexcept { return opts_; }

  /// sigma_g(p).
  Poly twist(const DegVec& g, const Poly& p) const;

  Element reduce(const Poly& coeff, const Word& w) const;
  Element multiply(const Element& a, const Element& b) const;
  Element commutator(const Element& a, const Element& b) const;
  Element generator(Letter l) const;
  Element from_word(const Word& w) const { return reduce(one(), w); }
  Poly one() const { return Poly::constant(variable_count(), 1); }

  /// Degree-zero projection of ab.
  Poly gamma(const Element& a, const Element& b) const;

  /// Throws DegreeTooLarge above the configured cap.
  std::vector<RedWord> reduced_monomials_of_degree(const DegVec& g) const;

  bool is_zero_in_A(const Element& a) const;
  bool equal_in_A(const Element& a, const Element& b) const { return is_zero_in_A(a - b); }

 private:
  struct Reduced {
    Poly coeff;
    RedWord word;
  };
  Reduced reduce_monic(const Word& w) const;
  Reduced reduce_uncached(const Word& w) const;
  const Endo& sigma_cached(const DegVec& g) const;

  TGWDatum d_;
  EngineOptions opts_;
  mutable std::mutex mutex_;
  mutable std::map<DegVec, Endo> sigma_cache_;
  mutable std::map<Word, Reduced> reduce_cache_;
};

}  // namespace tgwa
