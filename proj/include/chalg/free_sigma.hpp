#pragma once

// The free sigma-algebra layer.  amitsur_expand writes s_m of a linear
// combination of monomials as a signed sum over tuples of Lyndon words in
// the slot alphabet; everything else (polarization, s_i of a general
// noncommutative element, the formal Cayley-Hamilton polynomial,
// substitution endomorphisms, kernel relations) is built on top of it.

#include <cstdint>
#include <map>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "chalg/common.hpp"
#include "chalg/sigma_ring.hpp"
#include "chalg/word.hpp"

namespace chalg {

// One summand t * M of a linear combination.  params is the formal
// parameter monomial attached to each occurrence of the slot; the word may
// be empty (the unit) only under a bounded truncation.
struct Slot {
  ParamMonomial params;
  Word monomial;

  static Slot plain(char family, uint32_t index, Word w) {
    return Slot{{{Param{family, index}, 1}}, std::move(w)};
  }
};

namespace detail {

struct AmitsurEmitter {
  const std::span<const Slot> slots;
  const std::vector<Word>& lyndon;           // over the slot alphabet, degree-lex
  const std::vector<Word> slot_words;        // positional images
  const Truncation trunc;
  const Limits& limits;
  uint32_t m;
  std::vector<std::pair<std::size_t, uint32_t>> chosen;  // (lyndon index, exponent)
  SigmaPoly acc;

  void run() { descend(0, m); }

  void descend(std::size_t start, uint32_t remaining) {
    if (remaining == 0) {
      emit();
      return;
    }
    for (std::size_t idx = start; idx < lyndon.size(); ++idx) {
      uint32_t len = static_cast<uint32_t>(lyndon[idx].size());
      if (len > remaining) break;  // sorted by length first
      for (uint32_t j = 1; j * len <= remaining; ++j) {
        chosen.emplace_back(idx, j);
        descend(idx + 1, remaining - j * len);
        chosen.pop_back();
      }
    }
  }

  void emit() {
    uint32_t exp_sum = 0;
    for (auto& [idx, j] : chosen) exp_sum += j;
    SigmaPoly prod = SigmaPoly::constant(((m - exp_sum) % 2 == 0) ? 1 : -1);
    ParamMonomial params;
    for (auto& [idx, j] : chosen) {
      const Word& p = lyndon[idx];
      for (auto& [slot, count] : p.multidegree())
        params = merge_exponents(params,
                                 scale_exponents(slots[slot].params, j * count));
      prod *= normalize_sigma(j, substitute_word(p, slot_words), trunc, limits);
      if (prod.is_zero()) return;
    }
    acc += prod * SigmaPoly::parameter_monomial(std::move(params));
  }
};

}  // namespace detail

// s_m(sum of slots) as a polynomial in the canonical generators with the
// slots' formal parameters attached.
inline SigmaPoly amitsur_expand(uint32_t m, std::span<const Slot> slots, Truncation trunc,
                                const Limits& limits = Limits::defaults()) {
  if (m < 1) throw std::invalid_argument("amitsur_expand: degree must be >= 1");
  if (slots.empty()) throw std::invalid_argument("amitsur_expand: need at least one slot");
  if (m > limits.max_amitsur_degree)
    throw resource_limit_error("amitsur_expand: degree " + std::to_string(m) + " exceeds cap " +
                               std::to_string(limits.max_amitsur_degree));
  if (slots.size() > limits.max_slots)
    throw resource_limit_error("amitsur_expand: " + std::to_string(slots.size()) +
                               " slots exceed cap " + std::to_string(limits.max_slots));
  std::vector<Word> slot_words;
  slot_words.reserve(slots.size());
  for (const Slot& s : slots) {
    if (s.monomial.empty() && !trunc.bounded)
      throw std::invalid_argument(
          "amitsur_expand: a unit slot requires a bounded truncation level");
    slot_words.push_back(s.monomial);
  }
  auto lyndon = lyndon_words(static_cast<uint32_t>(slots.size()), m, limits.max_lyndon_words);
  detail::AmitsurEmitter emitter{slots, lyndon, std::move(slot_words), trunc, limits, m, {}, {}};
  emitter.run();
  return emitter.acc;
}

inline SigmaPoly amitsur_expand(uint32_t m, const std::vector<Slot>& slots, Truncation trunc,
                                const Limits& limits = Limits::defaults()) {
  return amitsur_expand(m, std::span<const Slot>(slots), trunc, limits);
}

// Coefficient of prod_i params_i^multi_index_i in the expansion: the
// polarized form s_{m; a_1, ..., a_k}.
inline SigmaPoly polarize(uint32_t m, std::span<const Slot> slots, Truncation trunc,
                          std::span<const uint32_t> multi_index,
                          const Limits& limits = Limits::defaults()) {
  if (multi_index.size() != slots.size())
    throw std::invalid_argument("polarize: multi-index size must match slot count");
  ParamMonomial target;
  for (std::size_t i = 0; i < slots.size(); ++i)
    target = detail::merge_exponents(
        target, detail::scale_exponents(slots[i].params, multi_index[i]));
  return amitsur_expand(m, slots, trunc, limits).coefficient_extract(target);
}

inline SigmaPoly polarize(uint32_t m, const std::vector<Slot>& slots, Truncation trunc,
                          const std::vector<uint32_t>& multi_index,
                          const Limits& limits = Limits::defaults()) {
  return polarize(m, std::span<const Slot>(slots), trunc,
                  std::span<const uint32_t>(multi_index), limits);
}

// Element of the free sigma-algebra: words with commuting SigmaPoly
// coefficients.
class NCPoly {
public:
  NCPoly() = default;

  static NCPoly one() { return monomial(Word{}); }
  static NCPoly variable(uint32_t v) { return monomial(Word{{v}}); }
  static NCPoly monomial(const Word& w, SigmaPoly coeff = SigmaPoly::constant(1)) {
    NCPoly p;
    if (!coeff.is_zero()) p.terms_.emplace(w, std::move(coeff));
    return p;
  }
  static NCPoly scalar(SigmaPoly coeff) { return monomial(Word{}, std::move(coeff)); }

  bool is_zero() const { return terms_.empty(); }
  const std::map<Word, SigmaPoly>& terms() const { return terms_; }

  friend bool operator==(const NCPoly&, const NCPoly&) = default;

  NCPoly& operator+=(const NCPoly& o) {
    for (auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
  }
  NCPoly& operator-=(const NCPoly& o) {
    for (auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
  }
  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  friend NCPoly operator-(const NCPoly& a) {
    NCPoly r;
    for (auto& [w, c] : a.terms_) r.terms_.emplace(w, -c);
    return r;
  }

  friend NCPoly operator*(const NCPoly& a, const NCPoly& b) {
    NCPoly r;
    for (auto& [wa, ca] : a.terms_)
      for (auto& [wb, cb] : b.terms_) r.add_term(wa + wb, ca * cb);
    return r;
  }
  NCPoly& operator*=(const NCPoly& o) { return *this = *this * o; }

  friend NCPoly operator*(const SigmaPoly& c, const NCPoly& a) {
    NCPoly r;
    for (auto& [w, v] : a.terms_) r.add_term(w, c * v);
    return r;
  }

  NCPoly pow(uint32_t e) const {
    NCPoly r = one();
    for (uint32_t k = 0; k < e; ++k) r *= *this;
    return r;
  }

  std::vector<uint32_t> variables() const {
    std::map<uint32_t, bool> seen;
    for (auto& [w, c] : terms_) {
      for (uint32_t v : w.letters()) seen[v] = true;
      for (uint32_t v : c.variables()) seen[v] = true;
    }
    std::vector<uint32_t> r;
    for (auto& [v, b] : seen) r.push_back(v);
    return r;
  }

  std::vector<Param> parameters() const {
    std::map<Param, bool> seen;
    for (auto& [w, c] : terms_)
      for (Param q : c.parameters()) seen[q] = true;
    std::vector<Param> r;
    for (auto& [q, b] : seen) r.push_back(q);
    return r;
  }

  void add_term(const Word& w, const SigmaPoly& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
      terms_.emplace(w, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

private:
  std::map<Word, SigmaPoly> terms_;
};

// s_i of a general element.  Each term becomes a slot tagged with an
// internal parameter; the expansion is an identity in those parameters, so
// substituting the actual coefficients (s_i is homogeneous of degree i
// over the sigma-ring) yields the reduced value.
inline SigmaPoly sigma_of(uint32_t i, const NCPoly& f, Truncation trunc,
                          const Limits& limits = Limits::defaults()) {
  if (i < 1) throw std::invalid_argument("sigma_of: index must be >= 1");
  if (f.is_zero()) return {};
  std::vector<Slot> slots;
  std::vector<SigmaPoly> coeffs;
  uint32_t idx = 0;
  for (auto& [w, c] : f.terms()) {
    slots.push_back(Slot::plain(kInternalFamily, idx++, w));
    coeffs.push_back(c);
  }
  SigmaPoly expansion = amitsur_expand(i, slots, trunc, limits);
  SigmaPoly result;
  for (auto& [key, q] : expansion.terms()) {
    ParamMonomial external;
    SigmaPoly factor = SigmaPoly::constant(1);
    for (auto& [param, exp] : key.params) {
      if (param.family == kInternalFamily)
        factor *= coeffs[param.index].pow(exp);
      else
        external.emplace_back(param, exp);
    }
    result += factor * SigmaPoly::term(q, SigmaTermKey{std::move(external), key.gens});
  }
  return result;
}

// CH_n(f) = f^n + sum_{i=1}^{n} (-1)^i s_i(f) f^{n-i}, at truncation n.
inline NCPoly ch_polynomial(uint32_t n, const NCPoly& f,
                            const Limits& limits = Limits::defaults()) {
  if (n < 1) throw std::invalid_argument("ch_polynomial: degree must be >= 1");
  Truncation trunc = Truncation::level(n);
  NCPoly acc = f.pow(n);
  for (uint32_t i = 1; i <= n; ++i) {
    SigmaPoly si = sigma_of(i, f, trunc, limits);
    if (i % 2 == 1) si = -si;
    acc += si * f.pow(n - i);
  }
  return acc;
}

namespace detail {

inline NCPoly image_of_word(const Word& w, const std::map<uint32_t, NCPoly>& images) {
  NCPoly r = NCPoly::one();
  for (uint32_t v : w.letters()) {
    auto it = images.find(v);
    r *= (it != images.end()) ? it->second : NCPoly::variable(v);
  }
  return r;
}

}  // namespace detail

// Substitution endomorphism: each variable maps to an element without
// constant term; generators inside coefficients are rewritten through
// sigma_of.  Variables not listed map to themselves.
inline NCPoly t_substitute(const NCPoly& f, const std::map<uint32_t, NCPoly>& images,
                           Truncation trunc, const Limits& limits = Limits::defaults()) {
  for (auto& [v, img] : images)
    if (img.terms().contains(Word{}))
      throw std::invalid_argument("t_substitute: image of " + letter_name(v) +
                                  " has a constant term");
  NCPoly result;
  for (auto& [w, coeff] : f.terms()) {
    NCPoly base = detail::image_of_word(w, images);
    SigmaPoly new_coeff;
    for (auto& [key, q] : coeff.terms()) {
      SigmaPoly piece = SigmaPoly::term(q, SigmaTermKey{key.params, {}});
      for (auto& [gen, exp] : key.gens)
        piece *= sigma_of(gen.index, detail::image_of_word(gen.word, images), trunc, limits)
                     .pow(exp);
      new_coeff += piece;
    }
    result += new_coeff * base;
  }
  return result;
}

struct KernelRelation {
  std::vector<uint32_t> f_exponents;  // exponents of u_1 .. u_{|f|}
  std::vector<uint32_t> g_exponents;  // exponents of v_1 .. v_{|g|}
  SigmaPoly phi;
};

// Expand s_n(fg) - s_n(f) s_n(g) with f = sum u_i M_i, g = sum v_j N_j and
// collect the nonzero coefficients phi_{h,k} of each parameter monomial
// u^h v^k.  Every phi vanishes identically on n x n matrices.
inline std::vector<KernelRelation> kernel_relations(uint32_t n,
                                                    std::span<const Word> f_monomials,
                                                    std::span<const Word> g_monomials,
                                                    const Limits& limits = Limits::defaults()) {
  if (n < 1) throw std::invalid_argument("kernel_relations: n must be >= 1");
  if (f_monomials.empty() || g_monomials.empty())
    throw std::invalid_argument("kernel_relations: monomial lists must be nonempty");
  for (const Word& w : f_monomials)
    if (w.empty()) throw std::invalid_argument("kernel_relations: monomials must be nonempty");
  for (const Word& w : g_monomials)
    if (w.empty()) throw std::invalid_argument("kernel_relations: monomials must be nonempty");

  Truncation trunc = Truncation::level(n);
  std::vector<Slot> fg_slots, f_slots, g_slots;
  for (std::size_t i = 0; i < f_monomials.size(); ++i)
    f_slots.push_back(Slot::plain('u', static_cast<uint32_t>(i + 1), f_monomials[i]));
  for (std::size_t j = 0; j < g_monomials.size(); ++j)
    g_slots.push_back(Slot::plain('v', static_cast<uint32_t>(j + 1), g_monomials[j]));
  for (std::size_t i = 0; i < f_monomials.size(); ++i)
    for (std::size_t j = 0; j < g_monomials.size(); ++j) {
      ParamMonomial params = detail::merge_exponents(f_slots[i].params, g_slots[j].params);
      fg_slots.push_back(Slot{std::move(params), f_monomials[i] + g_monomials[j]});
    }

  SigmaPoly difference = amitsur_expand(n, fg_slots, trunc, limits) -
                         amitsur_expand(n, f_slots, trunc, limits) *
                             amitsur_expand(n, g_slots, trunc, limits);

  std::vector<KernelRelation> out;
  for (auto& [params, phi] : difference.group_by_params()) {
    if (phi.is_zero()) continue;
    KernelRelation rel;
    rel.f_exponents.assign(f_monomials.size(), 0);
    rel.g_exponents.assign(g_monomials.size(), 0);
    for (auto& [q, e] : params) {
      if (q.family == 'u')
        rel.f_exponents[q.index - 1] = e;
      else
        rel.g_exponents[q.index - 1] = e;
    }
    rel.phi = std::move(phi);
    out.push_back(std::move(rel));
  }
  return out;
}

inline std::vector<KernelRelation> kernel_relations(uint32_t n, const std::vector<Word>& f,
                                                    const std::vector<Word>& g,
                                                    const Limits& limits = Limits::defaults()) {
  return kernel_relations(n, std::span<const Word>(f), std::span<const Word>(g), limits);
}

inline std::string to_string(const NCPoly& p, bool unicode = false) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [w, c] : p.terms()) {
    if (!first) os << " + ";
    first = false;
    std::string word_part = w.empty() ? "1" : to_string(w);
    if (c.as_constant() && *c.as_constant() == 1) {
      os << word_part;
      continue;
    }
    std::string coeff = to_string(c, unicode);
    bool wrap = c.terms().size() > 1 || coeff.front() == '-';
    os << (wrap ? "(" + coeff + ")" : coeff) << " " << word_part;
  }
  return os.str();
}

}  // namespace chalg
