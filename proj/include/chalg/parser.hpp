#pragma once

// Expression grammar for the command line:
//
//   expr    := term (("+"|"-") term)* ;
//   term    := sign? coeff? factor+ ;
//   factor  := VAR | "(" expr ")" | scalar ;
//   scalar  := "s" INT "(" expr ")" | "ch" INT "(" expr ")" | INT ;
//   VAR     := single letter a-z | "x" INT ;
//
// Juxtaposition is the noncommutative product; s- and ch-factors are
// central.  "s" of an expression whose coefficients already carry sigma
// content is accepted only when that expression is a single scalar
// multiple of a word.

#include <cctype>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "chalg/common.hpp"
#include "chalg/free_sigma.hpp"

namespace chalg::ast {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct VarRef {
  uint32_t index;
  friend bool operator==(const VarRef&, const VarRef&) = default;
};
struct IntLit {
  Int value;
  friend bool operator==(const IntLit&, const IntLit&) = default;
};
struct Paren {
  ExprPtr inner;
  friend bool operator==(const Paren& a, const Paren& b);
};
struct SigmaOf {
  uint32_t index;
  ExprPtr inner;
  friend bool operator==(const SigmaOf& a, const SigmaOf& b);
};
struct ChOf {
  uint32_t index;
  ExprPtr inner;
  friend bool operator==(const ChOf& a, const ChOf& b);
};

using Factor = std::variant<VarRef, IntLit, Paren, SigmaOf, ChOf>;

struct Term {
  bool negative = false;
  std::optional<Int> coeff;
  std::vector<Factor> factors;
  friend bool operator==(const Term&, const Term&) = default;
};

struct Expr {
  std::vector<Term> terms;
  friend bool operator==(const Expr&, const Expr&) = default;
};

inline bool operator==(const Paren& a, const Paren& b) { return *a.inner == *b.inner; }
inline bool operator==(const SigmaOf& a, const SigmaOf& b) {
  return a.index == b.index && *a.inner == *b.inner;
}
inline bool operator==(const ChOf& a, const ChOf& b) {
  return a.index == b.index && *a.inner == *b.inner;
}

namespace detail {

class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expr parse() {
    Expr e = parse_expr();
    skip_ws();
    if (pos_ < text_.size()) fail("unexpected trailing input");
    if (e.terms.empty()) fail("empty expression");
    return e;
  }

private:
  Expr parse_expr() {
    Expr e;
    e.terms.push_back(parse_term(false));
    while (true) {
      skip_ws();
      if (peek() == '+' || peek() == '-') {
        bool neg = text_[pos_] == '-';
        ++pos_;
        e.terms.push_back(parse_term(neg));
      } else {
        break;
      }
    }
    return e;
  }

  Term parse_term(bool separator_negative) {
    Term t;
    skip_ws();
    bool own_sign = false;
    if (peek() == '+' || peek() == '-') {
      own_sign = text_[pos_] == '-';
      ++pos_;
    }
    t.negative = separator_negative != own_sign;
    skip_ws();
    // an integer followed by more factors is the term coefficient
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      Int value = parse_int();
      skip_ws();
      if (starts_factor()) {
        t.coeff = value;
      } else {
        t.factors.push_back(IntLit{value});
        return t;
      }
    }
    if (!starts_factor()) fail("expected a factor");
    while (starts_factor()) t.factors.push_back(parse_factor());
    return t;
  }

  bool starts_factor() {
    skip_ws();
    char c = peek();
    return c == '(' || std::isdigit(static_cast<unsigned char>(c)) || (c >= 'a' && c <= 'z');
  }

  Factor parse_factor() {
    skip_ws();
    char c = peek();
    if (c == '(') {
      ++pos_;
      Expr inner = parse_expr();
      expect(')');
      return Paren{std::make_shared<Expr>(std::move(inner))};
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return IntLit{parse_int()};
    if (c == 's' && pos_ + 1 < text_.size() &&
        std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
      ++pos_;
      uint32_t index = parse_index("sigma");
      expect('(');
      Expr inner = parse_expr();
      expect(')');
      return SigmaOf{index, std::make_shared<Expr>(std::move(inner))};
    }
    if (c == 'c' && pos_ + 2 < text_.size() && text_[pos_ + 1] == 'h' &&
        std::isdigit(static_cast<unsigned char>(text_[pos_ + 2]))) {
      pos_ += 2;
      uint32_t index = parse_index("ch");
      expect('(');
      Expr inner = parse_expr();
      expect(')');
      return ChOf{index, std::make_shared<Expr>(std::move(inner))};
    }
    if (c == 'x' && pos_ + 1 < text_.size() &&
        std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
      ++pos_;
      Int v = parse_int();
      return VarRef{static_cast<uint32_t>(v)};
    }
    if (c >= 'a' && c <= 'z') {
      ++pos_;
      return VarRef{static_cast<uint32_t>(c - 'a')};
    }
    fail("expected a variable, integer, or parenthesized expression");
  }

  uint32_t parse_index(const std::string& what) {
    std::size_t at = pos_;
    Int v = parse_int();
    if (v < 1) throw parse_error(what + " index must be >= 1", at);
    return static_cast<uint32_t>(v);
  }

  Int parse_int() {
    skip_ws();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer");
    Int v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      ++pos_;
    }
    return v;
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const { throw parse_error(msg, pos_); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Expr parse(std::string_view text) { return detail::Parser(text).parse(); }

inline std::string render(const Expr& e);

inline std::string render(const Factor& f) {
  struct Visitor {
    std::string operator()(const VarRef& v) const { return letter_name(v.index); }
    std::string operator()(const IntLit& i) const { return i.value.str(); }
    std::string operator()(const Paren& p) const { return "(" + render(*p.inner) + ")"; }
    std::string operator()(const SigmaOf& s) const {
      return "s" + std::to_string(s.index) + "(" + render(*s.inner) + ")";
    }
    std::string operator()(const ChOf& c) const {
      return "ch" + std::to_string(c.index) + "(" + render(*c.inner) + ")";
    }
  };
  return std::visit(Visitor{}, f);
}

inline std::string render(const Expr& e) {
  std::string out;
  for (std::size_t i = 0; i < e.terms.size(); ++i) {
    const Term& t = e.terms[i];
    if (i == 0) {
      if (t.negative) out += "-";
    } else {
      out += t.negative ? " - " : " + ";
    }
    if (t.coeff) {
      out += t.coeff->str();
      if (!t.factors.empty() && std::holds_alternative<IntLit>(t.factors.front())) out += " ";
    }
    for (const Factor& f : t.factors) out += render(f);
  }
  return out;
}

// Evaluation into the free sigma-algebra.  Sigma factors reduce through
// sigma_of; ch factors expand the formal Cayley-Hamilton polynomial at
// their own level.
inline NCPoly to_ncpoly(const Expr& e, Truncation trunc,
                        const Limits& limits = Limits::defaults());

namespace detail {

inline NCPoly factor_to_ncpoly(const Factor& f, Truncation trunc, const Limits& limits) {
  struct Visitor {
    Truncation trunc;
    const Limits& limits;

    NCPoly operator()(const VarRef& v) const { return NCPoly::variable(v.index); }
    NCPoly operator()(const IntLit& i) const {
      return NCPoly::scalar(SigmaPoly::constant(Rational(i.value)));
    }
    NCPoly operator()(const Paren& p) const { return to_ncpoly(*p.inner, trunc, limits); }
    NCPoly operator()(const SigmaOf& s) const {
      NCPoly inner = to_ncpoly(*s.inner, trunc, limits);
      bool sigma_coeffs = false;
      for (auto& [w, c] : inner.terms())
        if (c.has_sigma_content()) sigma_coeffs = true;
      if (sigma_coeffs && inner.terms().size() > 1)
        throw std::invalid_argument(
            "sigma of a sum whose coefficients carry sigma content is not defined; the inner "
            "expression must reduce to a scalar times a single word");
      return NCPoly::scalar(sigma_of(s.index, inner, trunc, limits));
    }
    NCPoly operator()(const ChOf& c) const {
      NCPoly inner = to_ncpoly(*c.inner, Truncation::level(c.index), limits);
      return ch_polynomial(c.index, inner, limits);
    }
  };
  return std::visit(Visitor{trunc, limits}, f);
}

}  // namespace detail

inline NCPoly to_ncpoly(const Expr& e, Truncation trunc, const Limits& limits) {
  NCPoly total;
  for (const Term& t : e.terms) {
    NCPoly prod = NCPoly::one();
    for (const Factor& f : t.factors) prod *= detail::factor_to_ncpoly(f, trunc, limits);
    Rational c = t.coeff ? Rational(*t.coeff) : Rational(1);
    if (t.negative) c = -c;
    total += SigmaPoly::constant(c) * prod;
  }
  return total;
}

}  // namespace chalg::ast
