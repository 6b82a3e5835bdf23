#pragma once

// Combinatorics on words over an unbounded alphabet of variable indices.
// Words are immutable value types; the canonical order is degree-lex
// (shorter first, then lexicographic), which coincides with plain lex on
// words of equal length.

#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "chalg/common.hpp"

namespace chalg {

class Word {
public:
  Word() = default;
  explicit Word(std::vector<uint32_t> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<uint32_t> letters) : letters_(letters) {}

  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }
  uint32_t operator[](std::size_t i) const { return letters_[i]; }
  const std::vector<uint32_t>& letters() const { return letters_; }

  // occurrence count per variable; absent variables are omitted
  std::map<uint32_t, uint32_t> multidegree() const {
    std::map<uint32_t, uint32_t> d;
    for (uint32_t v : letters_) ++d[v];
    return d;
  }

  Word rotated(std::size_t start) const {
    std::vector<uint32_t> r;
    r.reserve(size());
    for (std::size_t i = 0; i < size(); ++i) r.push_back(letters_[(start + i) % size()]);
    return Word(std::move(r));
  }

  Word repeated(uint32_t times) const {
    std::vector<uint32_t> r;
    r.reserve(size() * times);
    for (uint32_t t = 0; t < times; ++t) r.insert(r.end(), letters_.begin(), letters_.end());
    return Word(std::move(r));
  }

  friend Word operator+(const Word& a, const Word& b) {
    std::vector<uint32_t> r = a.letters_;
    r.insert(r.end(), b.letters_.begin(), b.letters_.end());
    return Word(std::move(r));
  }

  friend bool operator==(const Word&, const Word&) = default;

  // degree-lex: length first, then lexicographic
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() <=> b.size();
    return a.letters_ <=> b.letters_;
  }

private:
  std::vector<uint32_t> letters_;
};

// Index 0..25 renders as a..z, larger indices as x<k>.
inline std::string letter_name(uint32_t v) {
  if (v < 26) return std::string(1, static_cast<char>('a' + v));
  return "x" + std::to_string(v);
}

inline std::string to_string(const Word& w) {
  std::string s;
  for (uint32_t v : w.letters()) s += letter_name(v);
  return s;
}

// Accepts the same syntax to_string emits: letters a-z, or x followed by
// a decimal index.  "x2" and "c" both denote variable 2.
inline Word parse_word(std::string_view text) {
  std::vector<uint32_t> letters;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == 'x' && i + 1 < text.size() && std::isdigit(static_cast<unsigned char>(text[i + 1]))) {
      std::size_t j = i + 1;
      uint64_t v = 0;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
        v = v * 10 + static_cast<uint64_t>(text[j] - '0');
        ++j;
      }
      letters.push_back(static_cast<uint32_t>(v));
      i = j;
    } else if (c >= 'a' && c <= 'z') {
      letters.push_back(static_cast<uint32_t>(c - 'a'));
      ++i;
    } else {
      throw std::invalid_argument("invalid letter '" + std::string(1, c) + "' in word \"" +
                                  std::string(text) + "\"");
    }
  }
  return Word(std::move(letters));
}

// Booth's least-rotation algorithm, O(n).
inline std::size_t least_rotation_index(const Word& w) {
  const auto& s = w.letters();
  const std::size_t n = s.size();
  if (n == 0) return 0;
  auto at = [&](std::size_t i) { return s[i % n]; };
  std::vector<std::ptrdiff_t> f(2 * n, -1);
  std::size_t k = 0;
  for (std::size_t j = 1; j < 2 * n; ++j) {
    uint32_t sj = at(j);
    std::ptrdiff_t i = f[j - k - 1];
    while (i != -1 && sj != at(k + static_cast<std::size_t>(i) + 1)) {
      if (sj < at(k + static_cast<std::size_t>(i) + 1)) k = j - static_cast<std::size_t>(i) - 1;
      i = f[static_cast<std::size_t>(i)];
    }
    if (sj != at(k + static_cast<std::size_t>(i) + 1)) {
      if (sj < at(k)) k = j;
      f[j - k] = -1;
    } else {
      f[j - k] = i + 1;
    }
  }
  return k;
}

// Smallest period via the KMP failure function.  The word is a proper
// power exactly when the period divides the length.
inline uint32_t smallest_period(const Word& w) {
  const auto& s = w.letters();
  const std::size_t n = s.size();
  if (n == 0) return 0;
  std::vector<std::size_t> pi(n, 0);
  for (std::size_t i = 1; i < n; ++i) {
    std::size_t j = pi[i - 1];
    while (j > 0 && s[i] != s[j]) j = pi[j - 1];
    if (s[i] == s[j]) ++j;
    pi[i] = j;
  }
  return static_cast<uint32_t>(n - pi[n - 1]);
}

inline bool is_primitive(const Word& w) {
  if (w.empty()) return false;
  uint32_t p = smallest_period(w);
  return p == w.size() || w.size() % p != 0;
}

// Nonempty, primitive, and strictly least among its rotations.
inline bool is_lyndon(const Word& w) {
  if (w.empty()) return false;
  return is_primitive(w) && least_rotation_index(w) == 0;
}

struct CyclicNormalForm {
  Word root;          // Lyndon
  uint32_t exponent;  // root^exponent is a rotation of the input

  friend bool operator==(const CyclicNormalForm&, const CyclicNormalForm&) = default;
};

inline CyclicNormalForm cyclic_normalize(const Word& w) {
  if (w.empty()) throw std::invalid_argument("cyclic_normalize: empty word");
  Word least = w.rotated(least_rotation_index(w));
  uint32_t p = smallest_period(least);
  if (least.size() % p != 0) return {least, 1};
  Word root(std::vector<uint32_t>(least.letters().begin(), least.letters().begin() + p));
  return {std::move(root), static_cast<uint32_t>(least.size() / p)};
}

// All Lyndon words of length <= max_length over {0..alphabet_size-1},
// sorted by length then lexicographically.  Generation is Duval's
// algorithm, which emits in plain lex order; a stable bucket by length
// gives the degree-lex order.
inline std::vector<Word> lyndon_words(uint32_t alphabet_size, uint32_t max_length,
                                      std::size_t cap = Limits::defaults().max_lyndon_words) {
  if (alphabet_size < 1 || max_length < 1)
    throw std::invalid_argument("lyndon_words: alphabet size and max length must be >= 1");
  std::vector<std::vector<Word>> by_length(max_length + 1);
  std::size_t count = 0;
  std::vector<uint32_t> t{0};
  while (!t.empty()) {
    if (++count > cap)
      throw resource_limit_error("lyndon_words: more than " + std::to_string(cap) + " words");
    by_length[t.size()].emplace_back(t);
    std::size_t len = t.size();
    t.resize(max_length);
    for (std::size_t i = len; i < max_length; ++i) t[i] = t[i % len];
    while (!t.empty() && t.back() == alphabet_size - 1) t.pop_back();
    if (!t.empty()) ++t.back();
  }
  std::vector<Word> out;
  out.reserve(count);
  for (auto& bucket : by_length)
    for (auto& w : bucket) out.push_back(std::move(w));
  return out;
}

// Concatenates the images of the letters of w, in order.
inline Word substitute_word(const Word& w, const std::map<uint32_t, Word>& images) {
  std::vector<uint32_t> r;
  for (uint32_t v : w.letters()) {
    auto it = images.find(v);
    if (it == images.end())
      throw std::invalid_argument("substitute_word: no image for variable " + letter_name(v));
    r.insert(r.end(), it->second.letters().begin(), it->second.letters().end());
  }
  return Word(std::move(r));
}

// Positional form used by the expansion code: letter k maps to images[k].
inline Word substitute_word(const Word& w, const std::vector<Word>& images) {
  std::vector<uint32_t> r;
  for (uint32_t v : w.letters()) {
    if (v >= images.size())
      throw std::invalid_argument("substitute_word: no image for variable " + letter_name(v));
    r.insert(r.end(), images[v].letters().begin(), images[v].letters().end());
  }
  return Word(std::move(r));
}

}  // namespace chalg
