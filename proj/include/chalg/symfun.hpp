#pragma once

// Symmetric-function kernel.  The central routine computes the universal
// polynomial P_{i,j} with e_i(x_1^j, ..., x_N^j) = P_{i,j}(e_1, ..., e_{i*j}):
// expand e_i of j-th powers explicitly in N = i*j variables, then rewrite in
// the elementary basis by repeated subtraction of the lex-leading term.
// Everything is integer-exact.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "chalg/common.hpp"

namespace chalg {

// Monomial in e_1, e_2, ...: sorted (index, exponent) pairs, exponents > 0.
using EMonomial = std::vector<std::pair<uint32_t, uint32_t>>;

inline Int emonomial_weight(const EMonomial& m) {
  Int w = 0;
  for (auto& [k, e] : m) w += Int(k) * e;
  return w;
}

class EPoly {
public:
  EPoly() = default;

  static EPoly constant(Int c) {
    EPoly p;
    if (c != 0) p.terms_[{}] = std::move(c);
    return p;
  }

  static EPoly e(uint32_t k, uint32_t exponent = 1) {
    if (k < 1) throw std::invalid_argument("EPoly::e: index must be >= 1");
    EPoly p;
    if (exponent > 0)
      p.terms_[{{k, exponent}}] = 1;
    else
      p.terms_[{}] = 1;
    return p;
  }

  static EPoly term(Int coeff, EMonomial m) {
    EPoly p;
    if (coeff != 0) p.terms_[std::move(m)] = std::move(coeff);
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  const std::map<EMonomial, Int>& terms() const { return terms_; }

  friend bool operator==(const EPoly&, const EPoly&) = default;

  EPoly& operator+=(const EPoly& o) {
    for (auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  EPoly& operator-=(const EPoly& o) {
    for (auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend EPoly operator+(EPoly a, const EPoly& b) { return a += b; }
  friend EPoly operator-(EPoly a, const EPoly& b) { return a -= b; }
  friend EPoly operator-(const EPoly& a) {
    EPoly r;
    for (auto& [m, c] : a.terms_) r.terms_[m] = -c;
    return r;
  }

  friend EPoly operator*(const EPoly& a, const EPoly& b) {
    EPoly r;
    for (auto& [ma, ca] : a.terms_)
      for (auto& [mb, cb] : b.terms_) r.add_term(merge(ma, mb), ca * cb);
    return r;
  }

  EPoly& operator*=(const Int& c) {
    if (c == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
  }
  friend EPoly operator*(EPoly a, const Int& c) { return a *= c; }
  friend EPoly operator*(const Int& c, EPoly a) { return a *= c; }

  // weight shared by all terms, if any; constants have weight 0
  bool is_homogeneous_of_weight(const Int& w) const {
    for (auto& [m, c] : terms_)
      if (emonomial_weight(m) != w) return false;
    return true;
  }

  void add_term(const EMonomial& m, const Int& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  static EMonomial merge(const EMonomial& a, const EMonomial& b) {
    EMonomial r;
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

private:
  std::map<EMonomial, Int> terms_;
};

inline std::string to_string(const EPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [m, c] : p.terms()) {
    Int a = c < 0 ? Int(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (a != 1 || m.empty()) os << a.str();
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i > 0 || a != 1) os << " ";
      os << "e" << m[i].first;
      if (m[i].second > 1) os << "^" << m[i].second;
    }
  }
  return os.str();
}

namespace detail {

// Symmetric polynomials in a fixed number of variables, stored one orbit
// at a time: a partition (weakly decreasing exponent vector, no trailing
// zeros) stands for the monomial-symmetric sum of its orbit, and the
// stored value is the coefficient of each monomial in the orbit.  The
// vector order on partitions equals the lex order on their lex-leading
// monomials, so the lex-leading term of the polynomial is the largest key.
using Partition = std::vector<uint32_t>;
using OrbitPoly = std::map<Partition, Int>;

inline void orbit_add(OrbitPoly& p, const Partition& m, const Int& c) {
  if (c == 0) return;
  auto it = p.find(m);
  if (it == p.end()) {
    p.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) p.erase(it);
  }
}

// value -> group size for a partition padded with zeros to nvars
inline std::vector<std::pair<uint32_t, uint32_t>> value_groups(const Partition& lambda,
                                                               uint32_t nvars) {
  std::vector<std::pair<uint32_t, uint32_t>> groups;
  std::size_t i = 0;
  while (i < lambda.size()) {
    std::size_t j = i;
    while (j < lambda.size() && lambda[j] == lambda[i]) ++j;
    groups.emplace_back(lambda[i], static_cast<uint32_t>(j - i));
    i = j;
  }
  if (lambda.size() < nvars)
    groups.emplace_back(0, nvars - static_cast<uint32_t>(lambda.size()));
  return groups;
}

// Coefficient of the representative monomial of mu in m_lambda * e_k: the
// number of 0/1 vectors eps with |eps| = k and mu - eps a rearrangement of
// lambda.  The per-value bump counts q_w are forced, so the count is a
// product of binomials (or zero if the constraints cannot be met).
inline Int orbit_e_coefficient(const Partition& lambda, const Partition& mu, uint32_t k,
                               uint32_t nvars) {
  std::map<uint32_t, uint32_t> lcount, rcount;
  lcount[0] = nvars - static_cast<uint32_t>(lambda.size());
  for (uint32_t v : lambda) ++lcount[v];
  rcount[0] = nvars - static_cast<uint32_t>(mu.size());
  uint32_t top = 0;
  for (uint32_t w : mu) {
    ++rcount[w];
    top = std::max(top, w);
  }
  Int result = 1;
  uint32_t q = 0, total = 0;  // q_w for the current value w
  for (uint32_t v = 0; v <= top; ++v) {
    uint32_t lv = lcount.count(v) ? lcount[v] : 0;
    uint32_t rv = rcount.count(v) ? rcount[v] : 0;
    // lv = (rv - q_v) + q_{v+1}
    int64_t next = int64_t(lv) - int64_t(rv) + int64_t(q);
    if (v == top) {
      if (next != 0) return 0;
      break;
    }
    if (next < 0) return 0;
    q = static_cast<uint32_t>(next);
    uint32_t rnext = rcount.count(v + 1) ? rcount[v + 1] : 0;
    if (q > rnext) return 0;
    result *= binomial(rnext, q);
    total += q;
  }
  return total == k ? result : 0;
}

// p * e_k, all terms restricted to at most nvars parts.
inline OrbitPoly orbit_mul_elementary(const OrbitPoly& p, uint32_t k, uint32_t nvars) {
  OrbitPoly out;
  for (auto& [lambda, c] : p) {
    auto groups = value_groups(lambda, nvars);
    // enumerate how many positions of each value group get bumped by one
    std::vector<uint32_t> bump(groups.size(), 0);
    std::set<Partition> seen;
    auto emit = [&]() {
      Partition mu;
      for (std::size_t g = 0; g < groups.size(); ++g) {
        auto [v, size] = groups[g];
        for (uint32_t t = 0; t < bump[g]; ++t) mu.push_back(v + 1);
        if (v > 0)
          for (uint32_t t = 0; t < size - bump[g]; ++t) mu.push_back(v);
      }
      std::sort(mu.begin(), mu.end(), std::greater<>());
      if (!seen.insert(mu).second) return;
      Int coeff = orbit_e_coefficient(lambda, mu, k, nvars);
      if (coeff != 0) orbit_add(out, mu, c * coeff);
    };
    auto descend = [&](auto&& self, std::size_t g, uint32_t remaining) -> void {
      if (g == groups.size()) {
        if (remaining == 0) emit();
        return;
      }
      for (uint32_t t = 0; t <= std::min(remaining, groups[g].second); ++t) {
        bump[g] = t;
        self(self, g + 1, remaining - t);
      }
      bump[g] = 0;
    };
    descend(descend, 0, k);
  }
  return out;
}

// Fundamental-theorem rewrite: express a symmetric polynomial in the
// elementary basis by peeling the lex-leading term.
inline EPoly symmetric_to_e_basis(OrbitPoly s, uint32_t nvars) {
  EPoly out;
  while (!s.empty()) {
    auto lead = std::prev(s.end());
    const Partition lambda = lead->first;
    const Int coeff = lead->second;
    EMonomial em;
    OrbitPoly prod{{Partition{}, 1}};
    for (uint32_t k = 1; k <= lambda.size(); ++k) {
      uint32_t mult = lambda[k - 1] - (k < lambda.size() ? lambda[k] : 0);
      if (mult == 0) continue;
      em.emplace_back(k, mult);
      for (uint32_t t = 0; t < mult; ++t) prod = orbit_mul_elementary(prod, k, nvars);
    }
    out.add_term(em, coeff);
    for (auto& [m, c] : prod) orbit_add(s, m, -coeff * c);
  }
  return out;
}

}  // namespace detail

// P_{i,j} derived in an explicit number of variables (>= i*j gives the
// stable answer).  Exposed so the stability property can be checked.
inline EPoly power_transform_in_vars(uint32_t i, uint32_t j, uint32_t nvars) {
  if (i < 1 || j < 1) throw std::invalid_argument("power_transform: indices must be >= 1");
  if (nvars < i) throw std::invalid_argument("power_transform: need at least i variables");
  // e_i of j-th powers is the monomial-symmetric function of (j, ..., j)
  detail::OrbitPoly s{{detail::Partition(i, j), 1}};
  return detail::symmetric_to_e_basis(std::move(s), nvars);
}

// Cached universal P_{i,j}, computed in exactly i*j variables.
inline EPoly power_transform(uint32_t i, uint32_t j,
                             const Limits& limits = Limits::defaults()) {
  if (i < 1 || j < 1) throw std::invalid_argument("power_transform: indices must be >= 1");
  if (static_cast<uint64_t>(i) * j > limits.max_power_weight)
    throw resource_limit_error("power_transform: i*j = " + std::to_string(uint64_t(i) * j) +
                               " exceeds cap " + std::to_string(limits.max_power_weight));
  static std::shared_mutex mutex;
  static std::map<std::pair<uint32_t, uint32_t>, EPoly> cache;
  {
    std::shared_lock lock(mutex);
    auto it = cache.find({i, j});
    if (it != cache.end()) return it->second;
  }
  EPoly p = power_transform_in_vars(i, j, i * j);
  std::unique_lock lock(mutex);
  return cache.emplace(std::make_pair(i, j), std::move(p)).first->second;
}

// Substitution e_k = 0 for k > n.
inline EPoly truncate_epoly(const EPoly& p, uint32_t n) {
  EPoly r;
  for (auto& [m, c] : p.terms()) {
    bool keep = true;
    for (auto& [k, e] : m)
      if (k > n) {
        keep = false;
        break;
      }
    if (keep) r.add_term(m, c);
  }
  return r;
}

// e_1 ... e_N of the given values, by convolution with (t - value).
inline std::vector<Rational> elementary_from_roots(const std::vector<Rational>& values) {
  std::vector<Rational> e(values.size() + 1, Rational(0));
  e[0] = 1;
  std::size_t used = 0;
  for (const Rational& v : values) {
    ++used;
    for (std::size_t k = used; k >= 1; --k) e[k] += v * e[k - 1];
  }
  return std::vector<Rational>(e.begin() + 1, e.end());
}

}  // namespace chalg
