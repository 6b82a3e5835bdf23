#pragma once

// Shared helpers and independent oracles for the test suites.  Oracles
// here deliberately avoid the library code paths they are used to check.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "chalg/common.hpp"
#include "chalg/matrix_eval.hpp"
#include "chalg/symfun.hpp"
#include "chalg/word.hpp"

namespace testsupport {

using chalg::ExactMatrix;
using chalg::Int;
using chalg::Rational;
using chalg::Word;

inline std::mt19937_64 rng_for(uint64_t seed, uint64_t stream = 0) {
  return std::mt19937_64(seed + 0x9e3779b97f4a7c15ULL * (stream + 1));
}

inline int64_t draw_int(std::mt19937_64& rng, int64_t bound) {
  return int64_t(rng() % uint64_t(2 * bound + 1)) - bound;
}

inline ExactMatrix<Rational> random_matrix(std::mt19937_64& rng, uint32_t n, int64_t bound = 10) {
  ExactMatrix<Rational> m(n);
  for (uint32_t i = 0; i < n; ++i)
    for (uint32_t j = 0; j < n; ++j) m.at(i, j) = draw_int(rng, bound);
  return m;
}

inline ExactMatrix<Rational> elementary_matrix(uint32_t n, uint32_t i, uint32_t j) {
  ExactMatrix<Rational> m(n);
  m.at(i, j) = 1;
  return m;
}

// Definition-level Lyndon check: nonempty and strictly smaller than every
// nontrivial rotation.
inline bool brute_force_lyndon(const Word& w) {
  if (w.empty()) return false;
  for (std::size_t k = 1; k < w.size(); ++k)
    if (!(w < w.rotated(k))) return false;
  return true;
}

inline int mobius(uint32_t n) {
  int result = 1;
  for (uint32_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      result = -result;
    }
  }
  if (n > 1) result = -result;
  return result;
}

// Witt / necklace formula: number of Lyndon words of length exactly d over
// q letters.
inline Int witt_count(uint32_t q, uint32_t d) {
  Int sum = 0;
  for (uint32_t e = 1; e <= d; ++e) {
    if (d % e != 0) continue;
    Int power = 1;
    for (uint32_t k = 0; k < d / e; ++k) power *= q;
    sum += mobius(e) * power;
  }
  return sum / d;
}

// Evaluate an EPoly at explicit values of e_1, e_2, ...
inline Rational eval_epoly(const chalg::EPoly& p, const std::vector<Rational>& evalues) {
  Rational total = 0;
  for (auto& [m, c] : p.terms()) {
    Rational term(c);
    for (auto& [k, e] : m)
      for (uint32_t t = 0; t < e; ++t) term *= evalues.at(k - 1);
    total += term;
  }
  return total;
}

// Gauss-Jordan inverse over the rationals.
inline std::optional<ExactMatrix<Rational>> try_inverse(ExactMatrix<Rational> a) {
  const uint32_t n = a.size();
  ExactMatrix<Rational> inv = ExactMatrix<Rational>::identity(n);
  for (uint32_t col = 0; col < n; ++col) {
    uint32_t pivot = col;
    while (pivot < n && a.at(pivot, col) == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != col)
      for (uint32_t j = 0; j < n; ++j) {
        std::swap(a.at(pivot, j), a.at(col, j));
        std::swap(inv.at(pivot, j), inv.at(col, j));
      }
    Rational d = a.at(col, col);
    for (uint32_t j = 0; j < n; ++j) {
      a.at(col, j) /= d;
      inv.at(col, j) /= d;
    }
    for (uint32_t row = 0; row < n; ++row) {
      if (row == col || a.at(row, col) == 0) continue;
      Rational f = a.at(row, col);
      for (uint32_t j = 0; j < n; ++j) {
        a.at(row, j) -= f * a.at(col, j);
        inv.at(row, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

// P N P^{-1} with N the single nilpotent Jordan block: all characteristic
// coefficients vanish by construction.
inline ExactMatrix<Rational> random_nilpotent(std::mt19937_64& rng, uint32_t n) {
  ExactMatrix<Rational> jordan(n);
  for (uint32_t i = 0; i + 1 < n; ++i) jordan.at(i, i + 1) = 1;
  while (true) {
    ExactMatrix<Rational> p = random_matrix(rng, n, 5);
    if (auto pinv = try_inverse(p)) return p * jordan * *pinv;
  }
}

}  // namespace testsupport
