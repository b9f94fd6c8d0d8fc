#include "fptlab/parse.hpp"

#include <cctype>

#include "fptlab/errors.hpp"

namespace fptlab {

namespace {

enum class Tok { Int, Ident, Plus, Minus, Star, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (digit(c)) {
      while (i < s.size() && digit(s[i])) ++i;
      out.push_back({Tok::Int, std::string(s.substr(start, i - start)), start});
      continue;
    }
    if (ident_start(c)) {
      while (i < s.size() && ident_char(s[i])) ++i;
      out.push_back({Tok::Ident, std::string(s.substr(start, i - start)), start});
      continue;
    }
    Tok k;
    switch (c) {
      case '+': k = Tok::Plus; break;
      case '-': k = Tok::Minus; break;
      case '*': k = Tok::Star; break;
      case '^': k = Tok::Caret; break;
      case '(': k = Tok::LParen; break;
      case ')': k = Tok::RParen; break;
      default: throw ParseError(start, std::string("unexpected character '") + c + "'");
    }
    out.push_back({k, std::string(1, c), start});
    ++i;
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

class Parser {
 public:
  Parser(std::vector<Token> toks, RingPtr ring) : toks_(std::move(toks)), ring_(std::move(ring)) {}

  SparsePoly parse() {
    SparsePoly out = expr();
    if (peek().kind != Tok::End) throw ParseError(peek().pos, "unexpected '" + peek().text + "'");
    return out;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }

  SparsePoly expr() {
    bool negate = false;
    if (peek().kind == Tok::Plus || peek().kind == Tok::Minus) negate = next().kind == Tok::Minus;
    SparsePoly acc = term();
    if (negate) acc = -acc;
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const bool minus = next().kind == Tok::Minus;
      SparsePoly t = term();
      acc = minus ? acc - t : acc + t;
    }
    return acc;
  }

  bool starts_factor() const {
    Tok k = peek().kind;
    return k == Tok::Int || k == Tok::Ident || k == Tok::LParen;
  }

  SparsePoly term() {
    SparsePoly acc = factor();
    for (;;) {
      if (peek().kind == Tok::Star) {
        next();
        acc = acc * factor();
      } else if (starts_factor()) {
        acc = acc * factor();
      } else {
        return acc;
      }
    }
  }

  SparsePoly factor() {
    const Token& t = next();
    SparsePoly base(ring_);
    switch (t.kind) {
      case Tok::Int: {
        const Prime p = ring_->characteristic();
        std::uint64_t r = 0;
        for (char c : t.text) r = (r * 10 + static_cast<std::uint64_t>(c - '0')) % p;
        base = SparsePoly::constant(ring_, static_cast<std::int64_t>(r));
        break;
      }
      case Tok::Ident: {
        auto idx = ring_->index_of(t.text);
        if (!idx) raise(ErrorKind::UnknownVariable, "'" + t.text + "' at position " + std::to_string(t.pos));
        base = SparsePoly::variable(ring_, *idx);
        break;
      }
      case Tok::LParen: {
        base = expr();
        if (peek().kind != Tok::RParen) throw ParseError(peek().pos, "expected ')'");
        next();
        break;
      }
      default:
        throw ParseError(t.pos, t.kind == Tok::End ? "unexpected end of input" : "unexpected '" + t.text + "'");
    }
    if (peek().kind == Tok::Caret) {
      next();
      const Token& e = next();
      if (e.kind != Tok::Int) throw ParseError(e.pos, "expected an integer exponent");
      std::uint64_t v = 0;
      for (char c : e.text) {
        if (__builtin_mul_overflow(v, 10, &v) || __builtin_add_overflow(v, static_cast<std::uint64_t>(c - '0'), &v)) {
          throw ParseError(e.pos, "exponent too large");
        }
      }
      base = pow_exact(base, v);
    }
    return base;
  }

  std::vector<Token> toks_;
  RingPtr ring_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<std::string> collect_variables(std::string_view text) {
  std::vector<std::string> out;
  for (const auto& t : tokenize(text)) {
    if (t.kind != Tok::Ident) continue;
    bool seen = false;
    for (const auto& v : out) seen = seen || v == t.text;
    if (!seen) out.push_back(t.text);
  }
  return out;
}

SparsePoly parse_polynomial(std::string_view text, const RingPtr& ring) {
  return Parser(tokenize(text), ring).parse();
}

SparsePoly parse_polynomial(std::string_view text, Prime p, const std::optional<std::vector<std::string>>& vars) {
  std::vector<std::string> names = vars ? *vars : collect_variables(text);
  if (names.empty()) names.push_back("x");
  return parse_polynomial(text, PolyRing::make(p, std::move(names)));
}

}  // namespace fptlab
