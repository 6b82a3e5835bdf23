#include <catch2/catch_amalgamated.hpp>

#include "chalg/word.hpp"
#include "support.hpp"

using namespace chalg;
using testsupport::brute_force_lyndon;
using testsupport::witt_count;

namespace {

// every word of length len over {0..alphabet-1}, by counting
std::vector<Word> all_words(uint32_t alphabet, uint32_t len) {
  std::vector<Word> out;
  std::vector<uint32_t> letters(len, 0);
  while (true) {
    out.emplace_back(letters);
    std::size_t i = len;
    while (i > 0 && letters[i - 1] == alphabet - 1) letters[--i] = 0;
    if (i == 0) break;
    ++letters[i - 1];
  }
  return out;
}

}  // namespace

TEST_CASE("is_lyndon on the basic examples") {
  CHECK(is_lyndon(parse_word("ab")));
  CHECK_FALSE(is_lyndon(parse_word("ba")));
  CHECK_FALSE(is_lyndon(parse_word("abab")));
  CHECK(is_lyndon(parse_word("a")));
  CHECK_FALSE(is_lyndon(Word{}));
  CHECK_FALSE(is_lyndon(parse_word("aa")));
}

TEST_CASE("is_lyndon agrees with the rotation definition up to length 10") {
  for (uint32_t len = 1; len <= 10; ++len)
    for (const Word& w : all_words(2, len)) CHECK(is_lyndon(w) == brute_force_lyndon(w));
}

TEST_CASE("lyndon_words examples") {
  CHECK(lyndon_words(2, 2) ==
        std::vector<Word>{parse_word("a"), parse_word("b"), parse_word("ab")});
  CHECK(lyndon_words(2, 3) == std::vector<Word>{parse_word("a"), parse_word("b"),
                                                parse_word("ab"), parse_word("aab"),
                                                parse_word("abb")});
  CHECK(lyndon_words(1, 5) == std::vector<Word>{parse_word("a")});
}

TEST_CASE("lyndon_words output is sorted degree-lex with no duplicates") {
  auto words = lyndon_words(3, 6);
  for (std::size_t i = 1; i < words.size(); ++i) CHECK(words[i - 1] < words[i]);
  for (const Word& w : words) CHECK(is_lyndon(w));
}

TEST_CASE("lyndon word counts match the necklace formula") {
  for (uint32_t q = 1; q <= 3; ++q) {
    auto words = lyndon_words(q, 8);
    std::map<std::size_t, Int> by_length;
    for (const Word& w : words) ++by_length[w.size()];
    for (uint32_t d = 1; d <= 8; ++d) CHECK(by_length[d] == witt_count(q, d));
  }
}

TEST_CASE("lyndon_words enforces its cap") {
  CHECK_THROWS_AS(lyndon_words(3, 8, 10), resource_limit_error);
}

TEST_CASE("cyclic_normalize examples") {
  CHECK(cyclic_normalize(parse_word("ba")) == CyclicNormalForm{parse_word("ab"), 1});
  CHECK(cyclic_normalize(parse_word("abab")) == CyclicNormalForm{parse_word("ab"), 2});
  CHECK(cyclic_normalize(parse_word("abba")) == CyclicNormalForm{parse_word("aabb"), 1});
  CHECK_THROWS_AS(cyclic_normalize(Word{}), std::invalid_argument);
}

TEST_CASE("cyclic_normalize is constant on rotation classes") {
  for (uint32_t len = 1; len <= 7; ++len)
    for (const Word& w : all_words(2, len)) {
      auto nf = cyclic_normalize(w);
      CHECK(is_lyndon(nf.root));
      CHECK(nf.root.size() * nf.exponent == w.size());
      CHECK(cyclic_normalize(nf.root.repeated(nf.exponent)) == nf);
      for (std::size_t k = 1; k < len; ++k) CHECK(cyclic_normalize(w.rotated(k)) == nf);
    }
}

TEST_CASE("cyclic_normalize recovers powers of Lyndon words") {
  for (const Word& root : lyndon_words(2, 4))
    for (uint32_t j = 1; j <= 3; ++j)
      CHECK(cyclic_normalize(root.repeated(j)) == CyclicNormalForm{root, j});
}

TEST_CASE("substitute_word") {
  std::map<uint32_t, Word> images{{0, parse_word("a")}, {1, parse_word("ba")}};
  CHECK(substitute_word(parse_word("ab"), images) == parse_word("aba"));
  CHECK(substitute_word(Word{{2}}, std::map<uint32_t, Word>{{2, Word{}}}) == Word{});
  CHECK(substitute_word(parse_word("aa"), std::map<uint32_t, Word>{{0, parse_word("ab")}}) ==
        parse_word("abab"));
  CHECK_THROWS_AS(substitute_word(parse_word("ab"), std::map<uint32_t, Word>{}),
                  std::invalid_argument);
}

TEST_CASE("word rendering and parsing") {
  CHECK(to_string(parse_word("ab")) == "ab");
  CHECK(to_string(Word{{0, 27}}) == "ax27");
  CHECK(parse_word("ax27") == Word{{0, 27}});
  CHECK(parse_word("x0x1") == parse_word("ab"));
  CHECK(parse_word("x") == Word{{23}});
  CHECK_THROWS_AS(parse_word("a-b"), std::invalid_argument);
  CHECK(parse_word("") == Word{});
}

TEST_CASE("multidegree counts occurrences") {
  auto d = parse_word("abab").multidegree();
  CHECK(d == std::map<uint32_t, uint32_t>{{0, 2}, {1, 2}});
  uint32_t total = 0;
  for (auto& [v, c] : d) total += c;
  CHECK(total == parse_word("abab").size());
}
