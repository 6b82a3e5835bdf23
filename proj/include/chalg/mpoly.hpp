#pragma once

// Multivariate polynomials over the rationals in indexed commuting
// indeterminates.  Used as the scalar domain for generic-matrix
// evaluation; only ring operations are needed.

#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "chalg/common.hpp"

namespace chalg {

using PMonomial = std::vector<std::pair<uint32_t, uint32_t>>;  // sorted (var, exp), exp > 0

class MPoly {
public:
  MPoly() = default;
  MPoly(int c) : MPoly(Rational(c)) {}  // NOLINT: scalar literals
  explicit MPoly(Rational c) {
    if (c != 0) terms_[{}] = std::move(c);
  }

  static MPoly variable(uint32_t v) {
    MPoly p;
    p.terms_[{{v, 1}}] = 1;
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  const std::map<PMonomial, Rational>& terms() const { return terms_; }

  friend bool operator==(const MPoly&, const MPoly&) = default;

  MPoly& operator+=(const MPoly& o) {
    for (auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  MPoly& operator-=(const MPoly& o) {
    for (auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator-(const MPoly& a) {
    MPoly r;
    for (auto& [m, c] : a.terms_) r.terms_[m] = -c;
    return r;
  }

  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly r;
    for (auto& [ma, ca] : a.terms_)
      for (auto& [mb, cb] : b.terms_) r.add_term(merge(ma, mb), ca * cb);
    return r;
  }
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

  void add_term(const PMonomial& m, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  static PMonomial merge(const PMonomial& a, const PMonomial& b) {
    PMonomial r;
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
  std::map<PMonomial, Rational> terms_;
};

inline std::string to_string(const MPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [m, c] : p.terms()) {
    if (!first) os << " + ";
    first = false;
    os << c;
    for (auto& [v, e] : m) {
      os << " v" << v;
      if (e > 1) os << "^" << e;
    }
  }
  return os.str();
}

}  // namespace chalg
