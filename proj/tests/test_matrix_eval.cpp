#include <set>

#include <catch2/catch_amalgamated.hpp>

#include "chalg/matrix_eval.hpp"
#include "support.hpp"

using namespace chalg;
using testsupport::draw_int;
using testsupport::elementary_matrix;
using testsupport::random_matrix;
using testsupport::random_nilpotent;
using testsupport::rng_for;

namespace {

SigmaPoly s(uint32_t i, const char* w) { return SigmaPoly::generator(i, parse_word(w)); }

ExactMatrix<Rational> cycle_matrix(uint32_t n) {
  // e_{1,2} + e_{2,3} + ... + e_{n,1}
  ExactMatrix<Rational> c(n);
  for (uint32_t i = 0; i + 1 < n; ++i) c.at(i, i + 1) = 1;
  c.at(n - 1, 0) = 1;
  return c;
}

}  // namespace

TEST_CASE("char_coeffs examples") {
  CHECK(char_coeffs(ExactMatrix<Rational>::identity(2)) == std::vector<Rational>{2, 1});
  CHECK(char_coeffs(elementary_matrix(3, 0, 1)) == std::vector<Rational>{0, 0, 0});
  CHECK(char_coeffs(cycle_matrix(3)) == std::vector<Rational>{0, 0, 1});
}

TEST_CASE("char_coeffs of triangular matrices match elementary symmetric functions") {
  auto rng = rng_for(31);
  for (uint32_t n = 1; n <= 5; ++n)
    for (uint32_t trial = 0; trial < 10; ++trial) {
      ExactMatrix<Rational> m(n);
      std::vector<Rational> diag(n);
      for (uint32_t i = 0; i < n; ++i)
        for (uint32_t j = i; j < n; ++j) {
          m.at(i, j) = draw_int(rng, 10);
          if (i == j) diag[i] = m.at(i, j);
        }
      CHECK(char_coeffs(m) == elementary_from_roots(diag));
    }
}

TEST_CASE("sigma_i(AB) equals sigma_i(BA) on random matrices") {
  auto rng = rng_for(32);
  for (uint32_t n = 1; n <= 4; ++n)
    for (uint32_t trial = 0; trial < 10; ++trial) {
      auto a = random_matrix(rng, n), b = random_matrix(rng, n);
      CHECK(char_coeffs(a * b) == char_coeffs(b * a));
    }
}

TEST_CASE("sigma_i(cB) equals c^i sigma_i(B)") {
  auto rng = rng_for(33);
  for (uint32_t n = 1; n <= 4; ++n)
    for (uint32_t trial = 0; trial < 10; ++trial) {
      auto b = random_matrix(rng, n);
      Rational c = draw_int(rng, 10);
      auto lhs = char_coeffs(c * b);
      auto rhs = char_coeffs(b);
      Rational cpow = 1;
      for (uint32_t i = 1; i <= n; ++i) {
        cpow *= c;
        CHECK(lhs[i - 1] == cpow * rhs[i - 1]);
      }
    }
}

TEST_CASE("eval_sigma_poly") {
  auto rng = rng_for(34);
  Assignment<Rational> asg;
  asg.vars.emplace(0, random_matrix(rng, 2));
  asg.vars.emplace(1, random_matrix(rng, 2));

  CHECK(eval_sigma_poly(s(2, "ab") - s(2, "a") * s(2, "b"), asg) == 0);
  CHECK(eval_sigma_poly(SigmaPoly::constant(5), asg) == 5);

  Assignment<Rational> e11;
  e11.vars.emplace(0, elementary_matrix(2, 0, 0));
  CHECK(eval_sigma_poly(s(1, "a"), e11) == 1);

  CHECK_THROWS_AS(eval_sigma_poly(s(1, "c"), asg), std::invalid_argument);
  CHECK_THROWS_AS(eval_sigma_poly(SigmaPoly::parameter(Param{'t', 1}), asg),
                  std::invalid_argument);
}

TEST_CASE("eval_nc_poly") {
  auto rng = rng_for(35);
  auto a = random_matrix(rng, 2);
  Assignment<Rational> asg;
  asg.vars.emplace(0, a);

  CHECK(eval_nc_poly(NCPoly::variable(0), asg) == a);

  NCPoly ch = ch_polynomial(2, NCPoly::variable(0));
  CHECK(eval_nc_poly(ch, asg).is_zero());

  ExactMatrix<Rational> expected = (a.at(0, 0) + a.at(1, 1)) * ExactMatrix<Rational>::identity(2);
  CHECK(eval_nc_poly(NCPoly::scalar(s(1, "a")), asg) == expected);
}

TEST_CASE("generic_matrices produce distinct indeterminates") {
  auto ms = generic_matrices(2, 2);
  REQUIRE(ms.size() == 2);
  std::set<PMonomial> seen;
  for (auto& m : ms)
    for (uint32_t i = 0; i < 2; ++i)
      for (uint32_t j = 0; j < 2; ++j) {
        REQUIRE(m.at(i, j).terms().size() == 1);
        seen.insert(m.at(i, j).terms().begin()->first);
      }
  CHECK(seen.size() == 8);
  CHECK(generic_matrices(1, 3).size() == 3);
}

TEST_CASE("verify_identity exact and random modes") {
  VerifyOptions exact;
  exact.mode = VerifyMode::exact_generic;
  Verdict v1 = verify_identity(s(2, "ab") - s(2, "a") * s(2, "b"), 2, exact);
  CHECK(v1.status == Verdict::Status::holds_exact);

  VerifyOptions random;
  random.mode = VerifyMode::random;
  random.trials = 50;
  random.seed = 7;
  Verdict v2 = verify_identity(s(1, "ab") - s(1, "a") * s(1, "b"), 2, random);
  CHECK(v2.status == Verdict::Status::fails);
  REQUIRE(v2.witness.has_value());

  // the explicit witness: a = e_{1,2}, b = e_{2,1} gives value 1
  Assignment<Rational> asg;
  asg.vars.emplace(0, elementary_matrix(2, 0, 1));
  asg.vars.emplace(1, elementary_matrix(2, 1, 0));
  CHECK(eval_sigma_poly(s(1, "ab") - s(1, "a") * s(1, "b"), asg) == 1);

  VerifyOptions random100;
  random100.mode = VerifyMode::random;
  random100.trials = 100;
  random100.seed = 3;
  Verdict v3 = verify_identity(ch_polynomial(3, NCPoly::variable(0)), 3, random100);
  CHECK(v3.status == Verdict::Status::holds_randomized);
  CHECK(v3.trials == 100);
}

TEST_CASE("verification is deterministic in the seed") {
  VerifyOptions opts;
  opts.mode = VerifyMode::random;
  opts.trials = 20;
  opts.seed = 12345;
  SigmaPoly bad = s(1, "ab") - s(1, "a") * s(1, "b");
  Verdict a = verify_identity(bad, 2, opts);
  Verdict b = verify_identity(bad, 2, opts);
  REQUIRE(a.witness.has_value());
  REQUIRE(b.witness.has_value());
  CHECK(a.witness->trial == b.witness->trial);
  CHECK(a.witness->vars == b.witness->vars);
}

TEST_CASE("strictly triangular matrices have vanishing sigma and vice versa") {
  auto rng = rng_for(36);
  for (uint32_t n = 2; n <= 4; ++n) {
    for (uint32_t trial = 0; trial < 10; ++trial) {
      ExactMatrix<Rational> m(n);
      for (uint32_t i = 0; i < n; ++i)
        for (uint32_t j = i + 1; j < n; ++j) m.at(i, j) = draw_int(rng, 10);
      for (const Rational& sig : char_coeffs(m)) CHECK(sig == 0);
    }
    for (uint32_t trial = 0; trial < 5; ++trial) {
      ExactMatrix<Rational> m = random_nilpotent(rng, n);
      for (const Rational& sig : char_coeffs(m)) CHECK(sig == 0);
      CHECK(m.pow(n).is_zero());
    }
  }
}

TEST_CASE("elementary matrices and cycles") {
  for (uint32_t n = 2; n <= 6; ++n) {
    for (uint32_t i = 0; i < n; ++i)
      for (uint32_t j = 0; j < n; ++j) {
        auto sig = char_coeffs(elementary_matrix(n, i, j));
        if (i != j) {
          for (uint32_t h = 1; h <= n; ++h) CHECK(sig[h - 1] == 0);
        } else {
          CHECK(sig[0] == 1);
          for (uint32_t h = 2; h <= n; ++h) CHECK(sig[h - 1] == 0);
        }
      }
    Rational det = determinant(cycle_matrix(n));
    CHECK(det == (n % 2 == 1 ? 1 : -1));
  }
}

TEST_CASE("char_coeffs over polynomial entries") {
  auto xs = generic_matrices(2, 1);
  auto sig = char_coeffs(xs[0]);
  // trace and determinant of the generic 2x2 matrix
  MPoly x00 = MPoly::variable(0), x01 = MPoly::variable(1), x10 = MPoly::variable(2),
        x11 = MPoly::variable(3);
  CHECK(sig[0] == x00 + x11);
  CHECK(sig[1] == x00 * x11 - x01 * x10);
}
