#pragma once

// Split semisimple algebras: block-diagonal sums of matrix algebras with
// the norm N(r_1,...,r_k) = prod det(r_i)^{a_i}, their characteristic
// polynomials and the blockwise Cayley-Hamilton check.

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "chalg/common.hpp"
#include "chalg/matrix_eval.hpp"

namespace chalg {

struct BlockShape {
  // (block size m_i, multiplicity a_i); degree n = sum a_i * m_i
  std::vector<std::pair<uint32_t, uint32_t>> blocks;

  explicit BlockShape(std::vector<std::pair<uint32_t, uint32_t>> b) : blocks(std::move(b)) {
    if (blocks.empty()) throw std::invalid_argument("BlockShape: need at least one block");
    for (auto& [m, a] : blocks)
      if (m < 1 || a < 1)
        throw std::invalid_argument("BlockShape: sizes and multiplicities must be >= 1");
  }

  uint32_t degree() const {
    uint32_t n = 0;
    for (auto& [m, a] : blocks) n += m * a;
    return n;
  }

  friend bool operator==(const BlockShape&, const BlockShape&) = default;
};

struct BlockElement {
  std::vector<ExactMatrix<Rational>> blocks;

  static BlockElement identity(const BlockShape& shape) {
    BlockElement r;
    for (auto& [m, a] : shape.blocks) r.blocks.push_back(ExactMatrix<Rational>::identity(m));
    return r;
  }

  static BlockElement zero(const BlockShape& shape) {
    BlockElement r;
    for (auto& [m, a] : shape.blocks) r.blocks.emplace_back(m);
    return r;
  }
};

inline void check_shape(const BlockShape& shape, const BlockElement& r) {
  if (r.blocks.size() != shape.blocks.size())
    throw std::invalid_argument("block element does not match shape: block count");
  for (std::size_t i = 0; i < shape.blocks.size(); ++i)
    if (r.blocks[i].size() != shape.blocks[i].first)
      throw std::invalid_argument("block element does not match shape: block size");
}

// blockwise ring operations
inline BlockElement multiply(const BlockShape& shape, const BlockElement& a,
                             const BlockElement& b) {
  check_shape(shape, a);
  check_shape(shape, b);
  BlockElement r;
  for (std::size_t i = 0; i < a.blocks.size(); ++i)
    r.blocks.push_back(a.blocks[i] * b.blocks[i]);
  return r;
}

inline BlockElement scale(const BlockShape& shape, const Rational& c, const BlockElement& a) {
  check_shape(shape, a);
  BlockElement r;
  for (auto& blk : a.blocks) r.blocks.push_back(c * blk);
  return r;
}

inline Rational norm(const BlockShape& shape, const BlockElement& r) {
  check_shape(shape, r);
  Rational out = 1;
  for (std::size_t i = 0; i < shape.blocks.size(); ++i) {
    Rational d = determinant(r.blocks[i]);
    for (uint32_t k = 0; k < shape.blocks[i].second; ++k) out *= d;
  }
  return out;
}

// Univariate polynomial over the rationals, coefficients ascending.
using UPoly = std::vector<Rational>;

inline UPoly upoly_mul(const UPoly& a, const UPoly& b) {
  UPoly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

// chi(t) = prod det(tI - r_i)^{a_i}, monic of degree n.
inline UPoly char_poly_block(const BlockShape& shape, const BlockElement& r) {
  check_shape(shape, r);
  UPoly chi{Rational(1)};
  for (std::size_t i = 0; i < shape.blocks.size(); ++i) {
    const uint32_t m = shape.blocks[i].first;
    std::vector<Rational> sig = char_coeffs(r.blocks[i]);
    UPoly block_chi(m + 1, Rational(0));
    block_chi[m] = 1;
    for (uint32_t k = 1; k <= m; ++k)
      block_chi[m - k] = (k % 2 == 1) ? Rational(-sig[k - 1]) : sig[k - 1];
    for (uint32_t a = 0; a < shape.blocks[i].second; ++a) chi = upoly_mul(chi, block_chi);
  }
  return chi;
}

// Horner evaluation of a polynomial at a square matrix.
inline ExactMatrix<Rational> upoly_at_matrix(const UPoly& p, const ExactMatrix<Rational>& M) {
  ExactMatrix<Rational> acc(M.size());
  for (std::size_t k = p.size(); k-- > 0;) {
    acc = acc * M;
    for (uint32_t i = 0; i < M.size(); ++i) acc.at(i, i) += p[k];
  }
  return acc;
}

inline bool satisfies_blockwise(const BlockShape& shape, const BlockElement& r,
                                const UPoly& chi) {
  check_shape(shape, r);
  for (auto& blk : r.blocks)
    if (!upoly_at_matrix(chi, blk).is_zero()) return false;
  return true;
}

// Every block of r killed by the degree-n characteristic polynomial.
inline bool ch_check(const BlockShape& shape, const BlockElement& r) {
  return satisfies_blockwise(shape, r, char_poly_block(shape, r));
}

// sigma_1 ... sigma_n read off chi(t) = t^n + sum (-1)^i sigma_i t^{n-i}.
inline std::vector<Rational> sigma_from_norm(const BlockShape& shape, const BlockElement& r) {
  UPoly chi = char_poly_block(shape, r);
  const std::size_t n = chi.size() - 1;
  std::vector<Rational> sig;
  sig.reserve(n);
  for (std::size_t i = 1; i <= n; ++i)
    sig.push_back(i % 2 == 1 ? Rational(-chi[n - i]) : chi[n - i]);
  return sig;
}

inline std::string to_string(const UPoly& p) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = p.size(); k-- > 0;) {
    if (p[k] == 0 && !(first && k == 0)) continue;
    if (!first) os << (p[k] < 0 ? " - " : " + ");
    else if (p[k] < 0) os << "-";
    first = false;
    Rational a = p[k] < 0 ? Rational(-p[k]) : p[k];
    if (a != 1 || k == 0) os << a;
    if (k >= 1) {
      os << "t";
      if (k > 1) os << "^" << k;
    }
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace chalg
