#include <catch2/catch_amalgamated.hpp>

#include "chalg/json_io.hpp"
#include "chalg/matrix_eval.hpp"
#include "chalg/parser.hpp"
#include "support.hpp"

using namespace chalg;
using testsupport::rng_for;

namespace {

SigmaPoly s(uint32_t i, const char* w) { return SigmaPoly::generator(i, parse_word(w)); }

NCPoly eval(const std::string& text, Truncation trunc = Truncation::level(2)) {
  return ast::to_ncpoly(ast::parse(text), trunc);
}

}  // namespace

TEST_CASE("parse basic expressions") {
  ast::Expr e = ast::parse("s2(ab) - s2(a)s2(b)");
  REQUIRE(e.terms.size() == 2);
  CHECK_FALSE(e.terms[0].negative);
  CHECK(e.terms[1].negative);
  CHECK(e.terms[0].factors.size() == 1);
  CHECK(e.terms[1].factors.size() == 2);

  CHECK(eval("s2(ab) - s2(a)s2(b)") ==
        NCPoly::scalar(s(2, "ab") - s(2, "a") * s(2, "b")));
}

TEST_CASE("ch expands to the formal Cayley-Hamilton polynomial") {
  NCPoly via_parser = eval("ch2(a+b)");
  NCPoly direct = ch_polynomial(2, NCPoly::variable(0) + NCPoly::variable(1));
  CHECK(via_parser == direct);
}

TEST_CASE("rejected inputs") {
  CHECK_THROWS_AS(ast::parse("s0(a)"), parse_error);
  CHECK_THROWS_AS(ast::parse("ch0(a)"), parse_error);
  CHECK_THROWS_AS(ast::parse(""), parse_error);
  CHECK_THROWS_AS(ast::parse("a + "), parse_error);
  CHECK_THROWS_AS(ast::parse("s2(a"), parse_error);
  CHECK_THROWS_AS(ast::parse("a $ b"), parse_error);
  CHECK_THROWS_AS(ast::parse("()"), parse_error);
}

TEST_CASE("parse error carries a position") {
  try {
    ast::parse("s2(a) @");
    FAIL("expected parse_error");
  } catch (const parse_error& e) {
    CHECK(e.position() == 6);
  }
}

TEST_CASE("sigma of sigma follows the scalar law") {
  CHECK(eval("s2(s1(a)b)") == NCPoly::scalar(s(1, "a").pow(2) * s(2, "b")));
  CHECK(eval("s2(a+b)") ==
        NCPoly::scalar(s(2, "a") + s(2, "b") + s(1, "a") * s(1, "b") - s(1, "ab")));
  CHECK(eval("s1(2a)") == NCPoly::scalar(Rational(2) * s(1, "a")));
  CHECK_THROWS_AS(eval("s2(s1(a)b + c)"), std::invalid_argument);
}

TEST_CASE("variables, coefficients, juxtaposition") {
  CHECK(eval("2ab") == NCPoly::monomial(parse_word("ab"), SigmaPoly::constant(2)));
  CHECK(eval("x0x1") == NCPoly::monomial(parse_word("ab")));
  CHECK(eval("(a+b)(a+b)") == (NCPoly::variable(0) + NCPoly::variable(1)).pow(2));
  CHECK(eval("a - a").is_zero());
  CHECK(eval("-3") == NCPoly::scalar(SigmaPoly::constant(-3)));
  CHECK(eval("xy") == NCPoly::monomial(Word{{23, 24}}));
}

TEST_CASE("round-trip: render then reparse is the identity on a corpus") {
  std::vector<std::string> corpus{
      "s2(ab) - s2(a)s2(b)",
      "ch2(a+b)",
      "a",
      "-a + b",
      "2ab - 3ba",
      "s1(a)s1(b)s1(ab)",
      "(a+b)(a-b)",
      "s3(abc)",
      "ch1(x)",
      "s2(2a + 3b)",
      "a(b+c)a",
      "5",
      "-7",
      "2 3",
      "x0x1x2",
      "s2((a+b)(a+b))",
      "ch2(ab + ba)",
      "s1(a) + s1(b) + s1(c)",
      "a - (b - c)",
      "s2(s1(a)b)",
  };
  // pad the corpus to 50 with generated variations
  auto rng = rng_for(77);
  const char* vars = "abc";
  while (corpus.size() < 50) {
    std::string e;
    uint32_t terms = 1 + rng() % 3;
    for (uint32_t t = 0; t < terms; ++t) {
      if (t > 0) e += (rng() % 2) ? " + " : " - ";
      if (rng() % 3 == 0) e += std::to_string(1 + rng() % 9);
      uint32_t factors = 1 + rng() % 3;
      for (uint32_t f = 0; f < factors; ++f) {
        switch (rng() % 4) {
          case 0: e += vars[rng() % 3]; break;
          case 1: e += std::string("s") + std::to_string(1 + rng() % 3) + "(" +
                       vars[rng() % 3] + ")"; break;
          case 2: e += std::string("(") + vars[rng() % 3] + "+" + vars[rng() % 3] + ")"; break;
          default: e += std::string("ch") + std::to_string(1 + rng() % 2) + "(" +
                        vars[rng() % 3] + ")"; break;
        }
      }
    }
    corpus.push_back(e);
  }
  REQUIRE(corpus.size() == 50);
  for (const std::string& text : corpus) {
    ast::Expr first = ast::parse(text);
    std::string rendered = ast::render(first);
    ast::Expr second = ast::parse(rendered);
    INFO(text << "  ->  " << rendered);
    CHECK(first == second);
    CHECK(ast::render(second) == rendered);
  }
}

TEST_CASE("json output is deterministic for identical seeds") {
  SigmaPoly bad = s(1, "ab") - s(1, "a") * s(1, "b");
  VerifyOptions opts;
  opts.mode = VerifyMode::random;
  opts.trials = 20;
  opts.seed = 4242;
  std::string a = to_json(verify_identity(bad, 2, opts)).dump();
  std::string b = to_json(verify_identity(bad, 2, opts)).dump();
  CHECK(a == b);
  CHECK(a.find("witness") != std::string::npos);
}

TEST_CASE("json forms") {
  CHECK(to_json(s(2, "ab")).dump() ==
        R"([{"coeff":"1","tvars":[],"generators":[{"i":2,"word":"ab","exp":1}]}])");
  NCPoly f = NCPoly::monomial(parse_word("ab"), SigmaPoly::constant(2));
  CHECK(to_json(f).dump() ==
        R"([{"word":"ab","coeff":[{"coeff":"2","tvars":[],"generators":[]}]}])");
}
