#include <catch2/catch_amalgamated.hpp>

#include "chalg/symfun.hpp"
#include "support.hpp"

using namespace chalg;
using testsupport::draw_int;
using testsupport::eval_epoly;
using testsupport::rng_for;

TEST_CASE("elementary_from_roots") {
  CHECK(elementary_from_roots({1, 1}) == std::vector<Rational>{2, 1});
  CHECK(elementary_from_roots({2, 3}) == std::vector<Rational>{5, 6});
  CHECK(elementary_from_roots({}).empty());
}

TEST_CASE("power_transform small cases") {
  CHECK(power_transform(1, 1) == EPoly::e(1));

  EPoly p12 = EPoly::e(1, 2) - Int(2) * EPoly::e(2);
  CHECK(power_transform(1, 2) == p12);

  EPoly p22 = EPoly::e(2, 2) - Int(2) * (EPoly::e(1) * EPoly::e(3)) + Int(2) * EPoly::e(4);
  CHECK(power_transform(2, 2) == p22);
}

TEST_CASE("truncate_epoly") {
  EPoly p22 = power_transform(2, 2);
  CHECK(truncate_epoly(p22, 2) == EPoly::e(2, 2));
  CHECK(truncate_epoly(EPoly::e(1), 1) == EPoly::e(1));
  CHECK(truncate_epoly(EPoly::e(3), 2).is_zero());
}

TEST_CASE("P_{i,1} is e_i") {
  for (uint32_t i = 1; i <= 8; ++i) CHECK(power_transform(i, 1) == EPoly::e(i));
}

TEST_CASE("every P_{i,j} is homogeneous of weight i*j") {
  for (uint32_t i = 1; i <= 8; ++i)
    for (uint32_t j = 1; i * j <= 8; ++j)
      CHECK(power_transform(i, j).is_homogeneous_of_weight(Int(i) * j));
}

TEST_CASE("eigenvalue oracle for P_{i,j}") {
  for (uint32_t i = 1; i <= 8; ++i)
    for (uint32_t j = 1; i * j <= 8; ++j) {
      EPoly p = power_transform(i, j);
      auto rng = rng_for(42, i * 100 + j);
      for (uint32_t trial = 0; trial < 20; ++trial) {
        std::vector<Rational> roots(i * j), powers(i * j);
        for (uint32_t k = 0; k < i * j; ++k) {
          roots[k] = draw_int(rng, 5);
          Rational pw = 1;
          for (uint32_t t = 0; t < j; ++t) pw *= roots[k];
          powers[k] = pw;
        }
        std::vector<Rational> evalues = elementary_from_roots(roots);
        CHECK(eval_epoly(p, evalues) == elementary_from_roots(powers)[i - 1]);
      }
    }
}

TEST_CASE("P_{i,j} is stable in the number of variables") {
  for (uint32_t i = 1; i <= 8; ++i)
    for (uint32_t j = 1; i * j <= 8; ++j)
      CHECK(power_transform_in_vars(i, j, i * j) == power_transform_in_vars(i, j, i * j + 2));
}

TEST_CASE("power_transform cap") {
  CHECK_THROWS_AS(power_transform(5, 3), resource_limit_error);
  Limits tight;
  tight.max_power_weight = 3;
  CHECK_THROWS_AS(power_transform(2, 2, tight), resource_limit_error);
}

TEST_CASE("EPoly printing") {
  CHECK(to_string(power_transform(1, 2)) == "e1^2 - 2 e2");
  CHECK(to_string(EPoly{}) == "0");
}
