#pragma once

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace chalg {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Thrown when a computation would exceed a configured cap (see Limits).
class resource_limit_error : public std::runtime_error {
public:
  explicit resource_limit_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown by the expression parser; position is a 0-based byte offset.
class parse_error : public std::runtime_error {
public:
  parse_error(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

// Caps that keep the combinatorial routines from running away.  The
// environment variables below override the built-in defaults once, at
// first use.
struct Limits {
  uint32_t max_amitsur_degree = 8;   // CHALG_MAX_DEGREE
  uint32_t max_slots = 6;            // CHALG_MAX_SLOTS
  std::size_t max_lyndon_words = 1000000;  // CHALG_MAX_LYNDON
  uint32_t max_power_weight = 12;    // CHALG_MAX_POWER_WEIGHT, cap on i*j

  static const Limits& defaults() {
    static const Limits instance = from_environment();
    return instance;
  }

  static Limits from_environment() {
    Limits l;
    if (const char* s = std::getenv("CHALG_MAX_DEGREE")) l.max_amitsur_degree = parse_env(s);
    if (const char* s = std::getenv("CHALG_MAX_SLOTS")) l.max_slots = parse_env(s);
    if (const char* s = std::getenv("CHALG_MAX_LYNDON")) l.max_lyndon_words = parse_env(s);
    if (const char* s = std::getenv("CHALG_MAX_POWER_WEIGHT")) l.max_power_weight = parse_env(s);
    return l;
  }

private:
  static uint32_t parse_env(const char* s) {
    unsigned long v = std::strtoul(s, nullptr, 10);
    if (v == 0) throw std::invalid_argument("resource cap must be a positive integer");
    return static_cast<uint32_t>(v);
  }
};

inline Int binomial(uint32_t n, uint32_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  Int r = 1;
  for (uint32_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

}  // namespace chalg
