#pragma once

#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

#include "catalog.hpp"
#include "series.hpp"

namespace cayley {
namespace expr {

/// Parse failure with a 1-based character position.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, size_t position)
      : std::runtime_error(msg + " at position " + std::to_string(position)), position_(position) {}
  size_t position() const { return position_; }

 private:
  size_t position_;
};

namespace detail {

enum class Tok {
  atom,     // E, E+, Eeven, Eodd, X, 1, L, C, Cat, Fub
  e_index,  // E[k]
  plus,
  dot,
  conv,   // **
  odot,   // ordinal product keyword
  comp,   // o
  quote,  // postfix derivative
  ptg,    // postfix pointing keyword
  integ,  // int
  lparen,
  rparen,
  end,
};

struct Token {
  Tok kind;
  std::string text;
  size_t pos = 0;  // 1-based
  int value = 0;   // for E[k]
};

inline std::vector<Token> lex(const std::string& s) {
  std::vector<Token> out;
  size_t i = 0;
  auto err = [&](const std::string& m, size_t p) { throw ParseError(m, p + 1); };
  while (i < s.size()) {
    const char ch = s[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    const size_t start = i;
    if (std::isalpha(static_cast<unsigned char>(ch))) {
      size_t j = i;
      while (j < s.size() && std::isalnum(static_cast<unsigned char>(s[j]))) ++j;
      std::string word = s.substr(i, j - i);
      i = j;
      if (word == "E") {
        if (i < s.size() && s[i] == '+') {  // E+ (no space)
          ++i;
          out.push_back({Tok::atom, "E+", start + 1, 0});
          continue;
        }
        if (i < s.size() && s[i] == '[') {
          ++i;
          size_t k = i;
          while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
          if (k == i) err("expected index in E[...]", i);
          int v = std::stoi(s.substr(i, k - i));
          i = k;
          if (i >= s.size() || s[i] != ']') err("expected ']' after E[k]", i);
          ++i;
          out.push_back({Tok::e_index, "E[" + std::to_string(v) + "]", start + 1, v});
          continue;
        }
        out.push_back({Tok::atom, "E", start + 1, 0});
      } else if (word == "Eeven" || word == "Eodd" || word == "X" || word == "L" || word == "C" ||
                 word == "Cat" || word == "Fub") {
        out.push_back({Tok::atom, word, start + 1, 0});
      } else if (word == "o") {
        out.push_back({Tok::comp, word, start + 1, 0});
      } else if (word == "odot") {
        out.push_back({Tok::odot, word, start + 1, 0});
      } else if (word == "ptg") {
        out.push_back({Tok::ptg, word, start + 1, 0});
      } else if (word == "int") {
        out.push_back({Tok::integ, word, start + 1, 0});
      } else {
        err("unknown name '" + word + "'", start);
      }
      continue;
    }
    switch (ch) {
      case '1':
        out.push_back({Tok::atom, "1", start + 1, 0});
        ++i;
        break;
      case '+':
        out.push_back({Tok::plus, "+", start + 1, 0});
        ++i;
        break;
      case '.':
        out.push_back({Tok::dot, ".", start + 1, 0});
        ++i;
        break;
      case '*':
        if (i + 1 < s.size() && s[i + 1] == '*') {
          out.push_back({Tok::conv, "**", start + 1, 0});
          i += 2;
        } else {
          err("single '*' is not an operator (use '.', '**' or 'odot')", i);
        }
        break;
      case '\'':
        out.push_back({Tok::quote, "'", start + 1, 0});
        ++i;
        break;
      case '(':
        out.push_back({Tok::lparen, "(", start + 1, 0});
        ++i;
        break;
      case ')':
        out.push_back({Tok::rparen, ")", start + 1, 0});
        ++i;
        break;
      default:
        err(std::string("unexpected character '") + ch + "'", i);
    }
  }
  out.push_back({Tok::end, "", s.size() + 1, 0});
  return out;
}

class Parser {
 public:
  Parser(std::vector<Token> toks, int order) : toks_(std::move(toks)), order_(order) {}

  CountSeq parse() {
    CountSeq v = parse_sum();
    expect(Tok::end, "expected end of expression");
    return v;
  }

 private:
  const Token& cur() const { return toks_[idx_]; }
  void advance() { ++idx_; }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, cur().pos); }
  void expect(Tok k, const std::string& msg) {
    if (cur().kind != k) fail(msg);
    advance();
  }

  CountSeq parse_sum() {
    CountSeq v = parse_product();
    while (cur().kind == Tok::plus) {
      advance();
      v = series::add(v, parse_product());
    }
    return v;
  }

  // '.', '**' and 'odot' share one precedence level; mixing them without
  // parentheses is rejected rather than silently picking an association.
  CountSeq parse_product() {
    CountSeq v = parse_composition();
    Tok seen = Tok::end;
    while (cur().kind == Tok::dot || cur().kind == Tok::conv || cur().kind == Tok::odot) {
      Tok op = cur().kind;
      if (seen != Tok::end && op != seen)
        fail("mixed product operators need parentheses");
      seen = op;
      advance();
      CountSeq rhs = parse_composition();
      if (op == Tok::dot)
        v = series::species_product(v, rhs);
      else if (op == Tok::conv)
        v = series::convolution(v, rhs);
      else
        v = series::ordinal_product(v, rhs);
    }
    return v;
  }

  CountSeq parse_composition() {
    CountSeq v = parse_postfixed();
    while (cur().kind == Tok::comp) {
      advance();
      v = series::compose(v, parse_postfixed());
    }
    return v;
  }

  CountSeq parse_postfixed() {
    CountSeq v = parse_base();
    for (;;) {
      if (cur().kind == Tok::quote) {
        if (v.order() < 1) fail("derivative exhausted the truncation order");
        advance();
        v = series::derivative(v);
      } else if (cur().kind == Tok::ptg) {
        advance();
        v = series::pointing(v);
      } else {
        break;
      }
    }
    return v;
  }

  CountSeq parse_base() {
    switch (cur().kind) {
      case Tok::integ: {
        advance();
        expect(Tok::lparen, "expected '(' after int");
        CountSeq v = parse_sum();
        expect(Tok::rparen, "expected ')'");
        return series::integral(v);
      }
      case Tok::lparen: {
        advance();
        CountSeq v = parse_sum();
        expect(Tok::rparen, "expected ')'");
        return v;
      }
      case Tok::e_index: {
        int k = cur().value;
        advance();
        return series::make_E_exactly(k, order_);
      }
      case Tok::atom: {
        std::string name = cur().text;
        advance();
        return atom(name);
      }
      default:
        fail("expected an atom, 'int(...)' or '('");
    }
  }

  CountSeq atom(const std::string& name) {
    using namespace series;
    if (name == "E") return make_E(order_);
    if (name == "E+") return make_E_plus(order_);
    if (name == "Eeven") return make_E_even(order_);
    if (name == "Eodd") return make_E_odd(order_);
    if (name == "X") return make_X(order_);
    if (name == "1") return make_one(order_);
    if (name == "L") return make_L(order_);
    if (name == "C") return make_cyc(order_);
    if (name == "Cat") return catalan_seq(order_);
    if (name == "Fub") return fubini(order_);
    throw ParseError("unknown atom '" + name + "'", cur().pos);
  }

  std::vector<Token> toks_;
  size_t idx_ = 0;
  int order_;
};

}  // namespace detail

/// Evaluates a species expression to a counting sequence of the given order.
/// Atoms are built with enough slack that postfix derivatives still deliver
/// coefficients up to `order`.
inline CountSeq evaluate(const std::string& text, int order) {
  if (order < 0) throw std::invalid_argument("expression order must be >= 0");
  auto toks = detail::lex(text);
  int quotes = 0;
  for (const auto& t : toks)
    if (t.kind == detail::Tok::quote) ++quotes;
  detail::Parser parser(toks, order + quotes);
  CountSeq v = parser.parse();
  if (v.order() > order) v = series::truncate(v, order);
  if (v.order() < order)
    throw std::invalid_argument("expression cannot deliver the requested order");
  return v;
}

}  // namespace expr
}  // namespace cayley
