#pragma once

// Exact matrix evaluation: characteristic coefficients over any commutative
// scalar domain (Samuelson-Berkowitz, division-free), the evaluation
// homomorphism sending s_i(w) to the i-th characteristic coefficient of the
// word's matrix product, and the identity-verification harness.

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "chalg/common.hpp"
#include "chalg/free_sigma.hpp"
#include "chalg/mpoly.hpp"
#include "chalg/sigma_ring.hpp"
#include "chalg/word.hpp"

namespace chalg {

template <class S>
class ExactMatrix {
public:
  ExactMatrix() : n_(0) {}
  explicit ExactMatrix(uint32_t n) : n_(n), a_(std::size_t(n) * n, S(0)) {}

  static ExactMatrix identity(uint32_t n) {
    ExactMatrix m(n);
    for (uint32_t i = 0; i < n; ++i) m.at(i, i) = S(1);
    return m;
  }

  uint32_t size() const { return n_; }
  S& at(uint32_t i, uint32_t j) { return a_[std::size_t(i) * n_ + j]; }
  const S& at(uint32_t i, uint32_t j) const { return a_[std::size_t(i) * n_ + j]; }

  bool is_zero() const {
    for (const S& v : a_)
      if (!(v == S(0))) return false;
    return true;
  }

  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

  ExactMatrix& operator+=(const ExactMatrix& o) {
    check_size(o);
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
  }
  ExactMatrix& operator-=(const ExactMatrix& o) {
    check_size(o);
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
  }
  friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
  friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }

  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    a.check_size(b);
    ExactMatrix r(a.n_);
    for (uint32_t i = 0; i < a.n_; ++i)
      for (uint32_t k = 0; k < a.n_; ++k) {
        const S& aik = a.at(i, k);
        if (aik == S(0)) continue;
        for (uint32_t j = 0; j < a.n_; ++j) r.at(i, j) += aik * b.at(k, j);
      }
    return r;
  }

  friend ExactMatrix operator*(const S& c, ExactMatrix a) {
    for (S& v : a.a_) v = c * v;
    return a;
  }

  ExactMatrix pow(uint32_t e) const {
    ExactMatrix r = identity(n_);
    for (uint32_t k = 0; k < e; ++k) r = r * *this;
    return r;
  }

private:
  void check_size(const ExactMatrix& o) const {
    if (n_ != o.n_) throw std::invalid_argument("matrix size mismatch");
  }

  uint32_t n_;
  std::vector<S> a_;
};

namespace detail {

// Coefficients p_0 = 1, p_1, ..., p_n of det(tI - A) = sum p_k t^{n-k},
// by the Samuelson-Berkowitz Toeplitz recursion.  No divisions.
template <class S>
std::vector<S> charpoly_monic(const ExactMatrix<S>& A) {
  const uint32_t n = A.size();
  std::vector<S> p{S(1)};
  for (uint32_t j = n; j-- > 0;) {
    const uint32_t s = n - j - 1;  // size of the trailing submatrix
    std::vector<S> toeplitz(s + 2, S(0));
    toeplitz[0] = S(1);
    toeplitz[1] = S(0) - A.at(j, j);
    if (s > 0) {
      std::vector<S> v(s, S(0));
      for (uint32_t r = 0; r < s; ++r) v[r] = A.at(j + 1 + r, j);
      for (uint32_t m = 0; m + 2 < s + 2; ++m) {
        S dot = S(0);
        for (uint32_t r = 0; r < s; ++r) dot += A.at(j, j + 1 + r) * v[r];
        toeplitz[m + 2] = S(0) - dot;
        if (m + 1 < s) {
          std::vector<S> nv(s, S(0));
          for (uint32_t r = 0; r < s; ++r)
            for (uint32_t c = 0; c < s; ++c) nv[r] += A.at(j + 1 + r, j + 1 + c) * v[c];
          v = std::move(nv);
        }
      }
    }
    std::vector<S> np(s + 2, S(0));
    for (uint32_t k = 0; k < s + 2; ++k)
      for (uint32_t l = 0; l < p.size() && l <= k; ++l) np[k] += toeplitz[k - l] * p[l];
    p = std::move(np);
  }
  return p;
}

}  // namespace detail

// sigma_1 ... sigma_n with det(t - A) = t^n + sum (-1)^i sigma_i t^{n-i};
// sigma_i is the i-th elementary symmetric function of the eigenvalues.
template <class S>
std::vector<S> char_coeffs(const ExactMatrix<S>& A) {
  std::vector<S> p = detail::charpoly_monic(A);
  std::vector<S> sig;
  sig.reserve(A.size());
  for (uint32_t i = 1; i <= A.size(); ++i)
    sig.push_back(i % 2 == 1 ? S(0) - p[i] : p[i]);
  return sig;
}

template <class S>
S determinant(const ExactMatrix<S>& A) {
  if (A.size() == 0) return S(1);
  return char_coeffs(A).back();
}

template <class S>
struct Assignment {
  std::map<uint32_t, ExactMatrix<S>> vars;
  std::map<Param, S> params;

  uint32_t matrix_size() const {
    return vars.empty() ? 0 : vars.begin()->second.size();
  }

  const ExactMatrix<S>& matrix_for(uint32_t v) const {
    auto it = vars.find(v);
    if (it == vars.end())
      throw std::invalid_argument("no matrix assigned to variable " + letter_name(v));
    return it->second;
  }

  const S& param_value(const Param& q) const {
    auto it = params.find(q);
    if (it == params.end())
      throw std::invalid_argument("no value assigned to parameter " + q.name());
    return it->second;
  }
};

template <class S>
ExactMatrix<S> eval_word(const Word& w, const Assignment<S>& asg) {
  ExactMatrix<S> r = ExactMatrix<S>::identity(asg.matrix_size());
  for (uint32_t v : w.letters()) r = r * asg.matrix_for(v);
  return r;
}

template <class S>
S eval_sigma_poly(const SigmaPoly& p, const Assignment<S>& asg) {
  S total = S(0);
  for (auto& [key, coeff] : p.terms()) {
    S term = S(Rational(coeff));
    for (auto& [q, e] : key.params)
      for (uint32_t k = 0; k < e; ++k) term = term * asg.param_value(q);
    for (auto& [gen, e] : key.gens) {
      S value = char_coeffs(eval_word(gen.word, asg))[gen.index - 1];
      for (uint32_t k = 0; k < e; ++k) term = term * value;
    }
    total += term;
  }
  return total;
}

template <class S>
ExactMatrix<S> eval_nc_poly(const NCPoly& f, const Assignment<S>& asg) {
  ExactMatrix<S> total(asg.matrix_size());
  for (auto& [w, coeff] : f.terms()) total += eval_sigma_poly(coeff, asg) * eval_word(w, asg);
  return total;
}

// Matrices whose entries are fresh polynomial indeterminates.  Entry (h,k)
// of the i-th matrix is variable i*n*n + h*n + k.
inline std::vector<ExactMatrix<MPoly>> generic_matrices(uint32_t n, uint32_t count) {
  if (uint64_t(n) * n * count > 4096)
    throw resource_limit_error("generic_matrices: too many indeterminates");
  std::vector<ExactMatrix<MPoly>> out;
  out.reserve(count);
  for (uint32_t i = 0; i < count; ++i) {
    ExactMatrix<MPoly> m(n);
    for (uint32_t h = 0; h < n; ++h)
      for (uint32_t k = 0; k < n; ++k) m.at(h, k) = MPoly::variable(i * n * n + h * n + k);
    out.push_back(std::move(m));
  }
  return out;
}

enum class VerifyMode { exact_generic, random };

struct VerifyOptions {
  VerifyMode mode = VerifyMode::exact_generic;
  uint32_t trials = 100;
  uint64_t seed = 0;
  int64_t bound = 10;
};

struct RandomWitness {
  uint32_t trial;
  std::map<uint32_t, ExactMatrix<Rational>> vars;
  std::map<Param, Rational> params;
};

struct Verdict {
  enum class Status { holds_exact, holds_randomized, fails };
  Status status;
  uint32_t trials = 0;
  uint64_t seed = 0;
  std::optional<RandomWitness> witness;

  bool holds() const { return status != Status::fails; }
};

inline const char* to_string(Verdict::Status s) {
  switch (s) {
    case Verdict::Status::holds_exact: return "holds-exact";
    case Verdict::Status::holds_randomized: return "holds-randomized";
    default: return "fails";
  }
}

namespace detail {

// Per-trial generator derived only from (seed, trial), so trials are
// order-independent.
inline std::mt19937_64 trial_rng(uint64_t seed, uint32_t trial) {
  return std::mt19937_64(seed + 0x9e3779b97f4a7c15ULL * (uint64_t(trial) + 1));
}

// Engine-independent uniform draw, so seeded output is stable across
// standard libraries.
inline int64_t uniform_int(std::mt19937_64& rng, int64_t bound) {
  uint64_t span = uint64_t(2 * bound + 1);
  return int64_t(rng() % span) - bound;
}

inline Assignment<Rational> random_assignment(const std::vector<uint32_t>& vars,
                                              const std::vector<Param>& params, uint32_t n,
                                              uint64_t seed, uint32_t trial, int64_t bound) {
  auto rng = trial_rng(seed, trial);
  Assignment<Rational> asg;
  for (uint32_t v : vars) {
    ExactMatrix<Rational> m(n);
    for (uint32_t i = 0; i < n; ++i)
      for (uint32_t j = 0; j < n; ++j) m.at(i, j) = uniform_int(rng, bound);
    asg.vars.emplace(v, std::move(m));
  }
  for (const Param& q : params) asg.params.emplace(q, uniform_int(rng, bound));
  return asg;
}

inline Assignment<MPoly> generic_assignment(const std::vector<uint32_t>& vars,
                                            const std::vector<Param>& params, uint32_t n) {
  Assignment<MPoly> asg;
  uint32_t next = 0;
  for (uint32_t v : vars) {
    ExactMatrix<MPoly> m(n);
    for (uint32_t i = 0; i < n; ++i)
      for (uint32_t j = 0; j < n; ++j) m.at(i, j) = MPoly::variable(next++);
    asg.vars.emplace(v, std::move(m));
  }
  for (const Param& q : params) asg.params.emplace(q, MPoly::variable(next++));
  return asg;
}

template <class Expr, class Eval>
Verdict verify_impl(const Expr& expr, uint32_t n, const VerifyOptions& opts, Eval&& is_zero_on) {
  std::vector<uint32_t> vars = expr.variables();
  std::vector<Param> params = expr.parameters();
  if (opts.mode == VerifyMode::exact_generic) {
    Assignment<MPoly> asg = generic_assignment(vars, params, n);
    if (vars.empty()) {
      // allow scalar-only identities: fabricate an unused matrix slot
      asg.vars.emplace(0, ExactMatrix<MPoly>::identity(n));
    }
    bool zero = is_zero_on(asg);
    return Verdict{zero ? Verdict::Status::holds_exact : Verdict::Status::fails, 0, opts.seed,
                   std::nullopt};
  }
  for (uint32_t trial = 0; trial < opts.trials; ++trial) {
    Assignment<Rational> asg =
        random_assignment(vars, params, n, opts.seed, trial, opts.bound);
    if (vars.empty()) asg.vars.emplace(0, ExactMatrix<Rational>::identity(n));
    if (!is_zero_on(asg)) {
      RandomWitness w{trial, asg.vars, asg.params};
      return Verdict{Verdict::Status::fails, trial + 1, opts.seed, std::move(w)};
    }
  }
  return Verdict{Verdict::Status::holds_randomized, opts.trials, opts.seed, std::nullopt};
}

}  // namespace detail

inline Verdict verify_identity(const SigmaPoly& p, uint32_t n, const VerifyOptions& opts) {
  return detail::verify_impl(p, n, opts, [&](const auto& asg) {
    auto value = eval_sigma_poly(p, asg);
    return value == decltype(value)(0);
  });
}

inline Verdict verify_identity(const NCPoly& f, uint32_t n, const VerifyOptions& opts) {
  return detail::verify_impl(f, n, opts,
                             [&](const auto& asg) { return eval_nc_poly(f, asg).is_zero(); });
}

}  // namespace chalg
