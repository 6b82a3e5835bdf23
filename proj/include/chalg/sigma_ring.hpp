#pragma once

// The commutative ring of sigma-generators: polynomials in symbols
// s_i(p) with p a Lyndon word, optionally carrying commutative bookkeeping
// parameters (t, u, v families).  normalize_sigma reduces s_i of an
// arbitrary word to this basis: rotate to the Lyndon root, rewrite powers
// through P_{i,j}, then truncate.

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "chalg/common.hpp"
#include "chalg/symfun.hpp"
#include "chalg/word.hpp"

namespace chalg {

struct SigmaGenerator {
  uint32_t index;  // >= 1
  Word word;       // nonempty Lyndon word

  friend bool operator==(const SigmaGenerator&, const SigmaGenerator&) = default;
  friend std::strong_ordering operator<=>(const SigmaGenerator& a, const SigmaGenerator& b) {
    if (a.index != b.index) return a.index <=> b.index;
    return a.word <=> b.word;
  }
};

// A commutative bookkeeping parameter such as t1, u2, v1.
struct Param {
  char family;
  uint32_t index;

  std::string name() const { return std::string(1, family) + std::to_string(index); }

  friend bool operator==(const Param&, const Param&) = default;
  friend std::strong_ordering operator<=>(const Param& a, const Param& b) {
    if (a.family != b.family) return a.family <=> b.family;
    return a.index <=> b.index;
  }
};

// Family reserved for internal slot bookkeeping; never user-visible.
inline constexpr char kInternalFamily = '#';

using ParamMonomial = std::vector<std::pair<Param, uint32_t>>;     // sorted, exp > 0
using SigmaMonomial = std::vector<std::pair<SigmaGenerator, uint32_t>>;  // sorted, exp > 0

namespace detail {
template <class K>
std::vector<std::pair<K, uint32_t>> merge_exponents(const std::vector<std::pair<K, uint32_t>>& a,
                                                    const std::vector<std::pair<K, uint32_t>>& b) {
  std::vector<std::pair<K, uint32_t>> r;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      r.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      r.push_back(b[j++]);
    } else {
      r.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i, ++j;
    }
  }
  return r;
}

template <class K>
std::vector<std::pair<K, uint32_t>> scale_exponents(std::vector<std::pair<K, uint32_t>> m,
                                                    uint32_t factor) {
  if (factor == 0) return {};
  for (auto& [k, e] : m) e *= factor;
  return m;
}
}  // namespace detail

struct SigmaTermKey {
  ParamMonomial params;
  SigmaMonomial gens;

  friend bool operator==(const SigmaTermKey&, const SigmaTermKey&) = default;
  friend std::strong_ordering operator<=>(const SigmaTermKey&, const SigmaTermKey&) = default;
};

// Total sigma-weight of a monomial: sum of index * word length * exponent.
inline Int sigma_weight(const SigmaMonomial& m) {
  Int w = 0;
  for (auto& [g, e] : m) w += Int(g.index) * g.word.size() * e;
  return w;
}

// Multidegree in the word variables: index * (occurrences in word) * exponent.
inline std::map<uint32_t, Int> sigma_multidegree(const SigmaMonomial& m) {
  std::map<uint32_t, Int> d;
  for (auto& [g, e] : m)
    for (auto& [v, c] : g.word.multidegree()) d[v] += Int(g.index) * c * e;
  return d;
}

class SigmaPoly {
public:
  SigmaPoly() = default;
  SigmaPoly(int c) { *this = constant(Rational(c)); }  // NOLINT: scalar literals

  static SigmaPoly constant(Rational c) {
    SigmaPoly p;
    if (c != 0) p.terms_[SigmaTermKey{}] = std::move(c);
    return p;
  }

  static SigmaPoly generator(uint32_t index, const Word& word) {
    if (index < 1) throw std::invalid_argument("sigma generator index must be >= 1");
    if (!is_lyndon(word))
      throw std::invalid_argument("sigma generator word must be a nonempty Lyndon word; got \"" +
                                  chalg::to_string(word) + "\"");
    SigmaPoly p;
    p.terms_[SigmaTermKey{{}, {{SigmaGenerator{index, word}, 1}}}] = 1;
    return p;
  }

  static SigmaPoly parameter(Param q, uint32_t exponent = 1) {
    SigmaPoly p;
    if (exponent == 0) return constant(1);
    p.terms_[SigmaTermKey{{{q, exponent}}, {}}] = 1;
    return p;
  }

  static SigmaPoly parameter_monomial(ParamMonomial m) {
    SigmaPoly p;
    p.terms_[SigmaTermKey{std::move(m), {}}] = 1;
    return p;
  }

  static SigmaPoly term(Rational coeff, SigmaTermKey key) {
    SigmaPoly p;
    if (coeff != 0) p.terms_[std::move(key)] = std::move(coeff);
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  const std::map<SigmaTermKey, Rational>& terms() const { return terms_; }

  // the value of a constant polynomial, if it is one
  std::optional<Rational> as_constant() const {
    if (terms_.empty()) return Rational(0);
    if (terms_.size() == 1 && terms_.begin()->first == SigmaTermKey{})
      return terms_.begin()->second;
    return std::nullopt;
  }

  bool has_sigma_content() const {
    for (auto& [k, c] : terms_)
      if (!k.gens.empty() || !k.params.empty()) return true;
    return false;
  }

  friend bool operator==(const SigmaPoly&, const SigmaPoly&) = default;

  SigmaPoly& operator+=(const SigmaPoly& o) {
    for (auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  SigmaPoly& operator-=(const SigmaPoly& o) {
    for (auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
  }
  friend SigmaPoly operator+(SigmaPoly a, const SigmaPoly& b) { return a += b; }
  friend SigmaPoly operator-(SigmaPoly a, const SigmaPoly& b) { return a -= b; }
  friend SigmaPoly operator-(const SigmaPoly& a) {
    SigmaPoly r;
    for (auto& [k, c] : a.terms_) r.terms_[k] = -c;
    return r;
  }

  friend SigmaPoly operator*(const SigmaPoly& a, const SigmaPoly& b) {
    SigmaPoly r;
    for (auto& [ka, ca] : a.terms_)
      for (auto& [kb, cb] : b.terms_)
        r.add_term(SigmaTermKey{detail::merge_exponents(ka.params, kb.params),
                                detail::merge_exponents(ka.gens, kb.gens)},
                   ca * cb);
    return r;
  }
  SigmaPoly& operator*=(const SigmaPoly& o) { return *this = *this * o; }

  SigmaPoly& operator*=(const Rational& c) {
    if (c == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, v] : terms_) v *= c;
    return *this;
  }
  friend SigmaPoly operator*(SigmaPoly a, const Rational& c) { return a *= c; }
  friend SigmaPoly operator*(const Rational& c, SigmaPoly a) { return a *= c; }

  SigmaPoly pow(uint32_t e) const {
    SigmaPoly r = constant(1);
    for (uint32_t k = 0; k < e; ++k) r *= *this;
    return r;
  }

  // Terms whose full parameter monomial equals `params`, with the
  // parameters stripped.
  SigmaPoly coefficient_extract(const ParamMonomial& params) const {
    SigmaPoly r;
    for (auto& [k, c] : terms_)
      if (k.params == params) r.add_term(SigmaTermKey{{}, k.gens}, c);
    return r;
  }

  // Split into (parameter monomial -> sigma-only polynomial).
  std::map<ParamMonomial, SigmaPoly> group_by_params() const {
    std::map<ParamMonomial, SigmaPoly> r;
    for (auto& [k, c] : terms_) r[k.params].add_term(SigmaTermKey{{}, k.gens}, c);
    return r;
  }

  // Common sigma-weight of all terms, or nullopt if mixed.  Constant and
  // parameter-only terms have weight 0.
  std::optional<Int> homogeneous_weight() const {
    std::optional<Int> w;
    for (auto& [k, c] : terms_) {
      Int tw = sigma_weight(k.gens);
      if (!w)
        w = tw;
      else if (*w != tw)
        return std::nullopt;
    }
    return w ? w : std::optional<Int>(Int(0));
  }

  std::optional<std::map<uint32_t, Int>> homogeneous_multidegree() const {
    std::optional<std::map<uint32_t, Int>> d;
    for (auto& [k, c] : terms_) {
      auto td = sigma_multidegree(k.gens);
      if (!d)
        d = td;
      else if (*d != td)
        return std::nullopt;
    }
    if (!d) d = std::map<uint32_t, Int>{};
    return d;
  }

  std::vector<uint32_t> variables() const {
    std::map<uint32_t, bool> seen;
    for (auto& [k, c] : terms_)
      for (auto& [g, e] : k.gens)
        for (uint32_t v : g.word.letters()) seen[v] = true;
    std::vector<uint32_t> r;
    for (auto& [v, b] : seen) r.push_back(v);
    return r;
  }

  std::vector<Param> parameters() const {
    std::map<Param, bool> seen;
    for (auto& [k, c] : terms_)
      for (auto& [q, e] : k.params) seen[q] = true;
    std::vector<Param> r;
    for (auto& [q, b] : seen) r.push_back(q);
    return r;
  }

  void add_term(const SigmaTermKey& k, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(k, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

private:
  std::map<SigmaTermKey, Rational> terms_;
};

struct Truncation {
  bool bounded = false;
  uint32_t n = 0;

  static Truncation unbounded() { return {}; }
  static Truncation level(uint32_t n) {
    if (n < 1) throw std::invalid_argument("truncation level must be >= 1");
    return {true, n};
  }
};

// e_k -> s_k(root) substitution used after a power rewrite.
inline SigmaPoly substitute_elementary(const EPoly& p, const Word& root) {
  SigmaPoly r;
  for (auto& [m, c] : p.terms()) {
    SigmaMonomial gens;
    for (auto& [k, e] : m) gens.emplace_back(SigmaGenerator{k, root}, e);
    r.add_term(SigmaTermKey{{}, std::move(gens)}, Rational(c));
  }
  return r;
}

// Reduce s_i(w) to the canonical generators.  The empty word stands for
// the multiplicative unit and only makes sense at a bounded level, where
// s_i(1) = binom(n, i).
inline SigmaPoly normalize_sigma(uint32_t i, const Word& w, Truncation trunc,
                                 const Limits& limits = Limits::defaults()) {
  if (i < 1) throw std::invalid_argument("normalize_sigma: index must be >= 1");
  if (w.empty()) {
    if (!trunc.bounded)
      throw std::invalid_argument(
          "normalize_sigma: sigma of the empty word requires a bounded truncation");
    return SigmaPoly::constant(Rational(binomial(trunc.n, i)));
  }
  CyclicNormalForm nf = cyclic_normalize(w);
  if (nf.exponent == 1) {
    if (trunc.bounded && i > trunc.n) return {};
    return SigmaPoly::generator(i, nf.root);
  }
  EPoly p = power_transform(i, nf.exponent, limits);
  if (trunc.bounded) p = truncate_epoly(p, trunc.n);
  return substitute_elementary(p, nf.root);
}

inline std::string to_string(const SigmaGenerator& g, bool unicode = false) {
  if (unicode) return "σ_" + std::to_string(g.index) + "(" + to_string(g.word) + ")";
  return "s" + std::to_string(g.index) + "[" + to_string(g.word) + "]";
}

inline std::string to_string(const Rational& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

inline std::string to_string(const SigmaPoly& p, bool unicode = false) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [k, c] : p.terms()) {
    Rational a = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    std::vector<std::string> pieces;
    if (a != 1 || (k.params.empty() && k.gens.empty())) pieces.push_back(to_string(a));
    for (auto& [q, e] : k.params)
      pieces.push_back(e == 1 ? q.name() : q.name() + "^" + std::to_string(e));
    for (auto& [g, e] : k.gens)
      pieces.push_back(e == 1 ? to_string(g, unicode)
                              : to_string(g, unicode) + "^" + std::to_string(e));
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      if (i > 0) os << " ";
      os << pieces[i];
    }
  }
  return os.str();
}

}  // namespace chalg
