#pragma once

#include <cctype>
#include <string>
#include <utility>
#include <vector>

#include "primal/ideal.hpp"

namespace primal {

// Input language:
//
//   ring x, y, z;
//   ideal h = x^3 + x*y^3 + 2*x^2*z + 2*z^2;   # comment to end of line
//   ideal g = x^2 + y^3, z;
//
// Exactly one ring declaration, then ideal bindings.  Expressions use
// + - * ^ and parentheses, with integer and num/den rational coefficients.
// Multiplication is always written out; "2x" is a syntax error.
struct Session {
  RingPtr ring;
  std::vector<std::pair<std::string, Ideal>> ideals;

  const Ideal* find(const std::string& name) const {
    for (const auto& [n, i] : ideals)
      if (n == name) return &i;
    return nullptr;
  }
};

namespace detail {

struct Token {
  enum class Kind {
    Ident, Int, Plus, Minus, Star, Caret, Slash,
    LParen, RParen, Comma, Semi, Eq, KwRing, KwIdeal, End
  };
  Kind kind;
  std::string text;
  int line;
  int col;
};

inline std::vector<Token> lex(const std::string& src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto push = [&](Token::Kind k, std::string text, int l, int c) {
    out.push_back({k, std::move(text), l, c});
  };
  while (i < src.size()) {
    char ch = src[i];
    if (ch == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (ch == ' ' || ch == '\t' || ch == '\r') {
      ++col;
      ++i;
      continue;
    }
    if (ch == '#') {
      while (i < src.size() && src[i] != '\n') ++i;
      continue;
    }
    int l = line, c = col;
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::string word;
      while (i < src.size() && (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_')) {
        word += src[i++];
        ++col;
      }
      if (word == "ring")
        push(Token::Kind::KwRing, word, l, c);
      else if (word == "ideal")
        push(Token::Kind::KwIdeal, word, l, c);
      else
        push(Token::Kind::Ident, word, l, c);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::string digits;
      while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) {
        digits += src[i++];
        ++col;
      }
      push(Token::Kind::Int, digits, l, c);
      continue;
    }
    ++i;
    ++col;
    switch (ch) {
      case '+': push(Token::Kind::Plus, "+", l, c); break;
      case '-': push(Token::Kind::Minus, "-", l, c); break;
      case '*': push(Token::Kind::Star, "*", l, c); break;
      case '^': push(Token::Kind::Caret, "^", l, c); break;
      case '/': push(Token::Kind::Slash, "/", l, c); break;
      case '(': push(Token::Kind::LParen, "(", l, c); break;
      case ')': push(Token::Kind::RParen, ")", l, c); break;
      case ',': push(Token::Kind::Comma, ",", l, c); break;
      case ';': push(Token::Kind::Semi, ";", l, c); break;
      case '=': push(Token::Kind::Eq, "=", l, c); break;
      default:
        throw ParseError(l, c, std::string("unexpected character '") + ch + "'");
    }
  }
  out.push_back({Token::Kind::End, "", line, col});
  return out;
}

class SessionParser {
 public:
  explicit SessionParser(const std::string& src) : toks_(lex(src)) {}

  Session parse() {
    Session s;
    while (!at(Token::Kind::End)) {
      if (at(Token::Kind::KwRing)) {
        if (s.ring) fail("ring already declared");
        advance();
        std::vector<std::string> names;
        names.push_back(expect_ident("variable name"));
        while (at(Token::Kind::Comma)) {
          advance();
          names.push_back(expect_ident("variable name"));
        }
        expect(Token::Kind::Semi, "';'");
        for (std::size_t a = 0; a < names.size(); ++a)
          for (std::size_t b = a + 1; b < names.size(); ++b)
            if (names[a] == names[b]) fail("duplicate variable '" + names[a] + "'");
        s.ring = make_ring(std::move(names));
        continue;
      }
      if (at(Token::Kind::KwIdeal)) {
        if (!s.ring) fail("no ring declared yet");
        advance();
        std::string name = expect_ident("ideal name");
        if (s.ring->index_of(name)) fail("name '" + name + "' collides with a ring variable");
        if (s.find(name)) fail("ideal '" + name + "' already defined");
        expect(Token::Kind::Eq, "'='");
        std::vector<Polynomial> gens;
        gens.push_back(parse_expr(s.ring));
        while (at(Token::Kind::Comma)) {
          advance();
          gens.push_back(parse_expr(s.ring));
        }
        expect(Token::Kind::Semi, "';'");
        s.ideals.emplace_back(std::move(name), Ideal(s.ring, std::move(gens)));
        continue;
      }
      fail("expected 'ring' or 'ideal'");
    }
    if (!s.ring) fail("empty input: no ring declared");
    return s;
  }

  Polynomial parse_single(const RingPtr& ring) {
    Polynomial p = parse_expr(ring);
    if (!at(Token::Kind::End)) fail("trailing input after expression");
    return p;
  }

 private:
  const Token& cur() const { return toks_[pos_]; }
  bool at(Token::Kind k) const { return cur().kind == k; }
  void advance() { ++pos_; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(cur().line, cur().col, msg);
  }

  void expect(Token::Kind k, const std::string& what) {
    if (!at(k)) fail("expected " + what);
    advance();
  }

  std::string expect_ident(const std::string& what) {
    if (!at(Token::Kind::Ident)) fail("expected " + what);
    std::string t = cur().text;
    advance();
    return t;
  }

  Polynomial parse_expr(const RingPtr& ring) {
    bool neg = false;
    if (at(Token::Kind::Minus)) {
      neg = true;
      advance();
    } else if (at(Token::Kind::Plus)) {
      advance();
    }
    Polynomial acc = parse_term(ring);
    if (neg) acc = -acc;
    while (at(Token::Kind::Plus) || at(Token::Kind::Minus)) {
      bool minus = at(Token::Kind::Minus);
      advance();
      Polynomial t = parse_term(ring);
      if (minus)
        acc -= t;
      else
        acc += t;
    }
    return acc;
  }

  Polynomial parse_term(const RingPtr& ring) {
    Polynomial acc = parse_factor(ring);
    while (at(Token::Kind::Star)) {
      advance();
      acc *= parse_factor(ring);
    }
    return acc;
  }

  Polynomial parse_factor(const RingPtr& ring) {
    bool simple_base = at(Token::Kind::Ident);
    Polynomial base = parse_atom(ring);
    if (!at(Token::Kind::Caret)) return base;
    advance();
    if (!at(Token::Kind::Int)) fail("exponent must be a nonnegative integer");
    const std::string& digits = cur().text;
    if (digits.size() > 6) fail("exponent too large");
    long e = std::stol(digits);
    advance();
    // Powers of sums expand; keep them within reason.
    if (!simple_base && base.nterms() > 1 && e > 512) fail("exponent too large for a sum");
    if (simple_base) {
      // variable^e without repeated multiplication
      auto [m, c] = *base.terms().begin();
      std::vector<int> exps(ring->nvars(), 0);
      for (std::size_t j = 0; j < ring->nvars(); ++j)
        exps[j] = m[j] * static_cast<int>(e);
      return Polynomial::term(ring, Monomial(std::move(exps)), c);
    }
    return base.pow(static_cast<unsigned>(e));
  }

  Polynomial parse_atom(const RingPtr& ring) {
    if (at(Token::Kind::Int)) {
      std::string num = cur().text;
      advance();
      if (at(Token::Kind::Slash)) {
        advance();
        if (!at(Token::Kind::Int)) fail("expected denominator digits");
        std::string den = cur().text;
        if (Rational::from_string(den).is_zero()) fail("zero denominator");
        advance();
        return Polynomial::constant(ring, Rational::from_strings(num, den));
      }
      return Polynomial::constant(ring, Rational::from_string(num));
    }
    if (at(Token::Kind::Ident)) {
      auto idx = ring->index_of(cur().text);
      if (!idx) fail("unknown variable '" + cur().text + "'");
      advance();
      return Polynomial::variable(ring, *idx);
    }
    if (at(Token::Kind::LParen)) {
      advance();
      Polynomial inner = parse_expr(ring);
      expect(Token::Kind::RParen, "')'");
      return inner;
    }
    fail("expected a number, variable or '('");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Session parse_session(const std::string& text) {
  return detail::SessionParser(text).parse();
}

inline Polynomial parse_polynomial(const std::string& text, const RingPtr& ring) {
  return detail::SessionParser(text).parse_single(ring);
}

}  // namespace primal
