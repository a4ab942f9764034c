#include "slicegb/parser.hpp"

#include <cctype>
#include <string>

namespace slicegb {

namespace {

enum class Tok { Int, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::size_t start;
  std::size_t end;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }
  Token take() {
    Token t = current_;
    advance();
    return t;
  }
  std::string_view lexeme(const Token& t) const { return text_.substr(t.start, t.end - t.start); }

 private:
  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const std::size_t start = pos_;
    if (pos_ >= text_.size()) {
      current_ = {Tok::End, start, start};
      return;
    }
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      current_ = {Tok::Int, start, pos_};
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      current_ = {Tok::Ident, start, pos_};
      return;
    }
    ++pos_;
    switch (c) {
      case '+': current_ = {Tok::Plus, start, pos_}; return;
      case '-': current_ = {Tok::Minus, start, pos_}; return;
      case '*': current_ = {Tok::Star, start, pos_}; return;
      case '/': current_ = {Tok::Slash, start, pos_}; return;
      case '^': current_ = {Tok::Caret, start, pos_}; return;
      case '(': current_ = {Tok::LParen, start, pos_}; return;
      case ')': current_ = {Tok::RParen, start, pos_}; return;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", {start, pos_});
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  Token current_{Tok::End, 0, 0};
};

class PolyParser {
 public:
  PolyParser(const Ring& ring, std::string_view text) : ring_(ring), lex_(text) {}

  Polynomial parse() {
    if (lex_.peek().kind == Tok::End) throw ParseError("empty polynomial", {0, 0});
    Polynomial p = poly();
    if (lex_.peek().kind != Tok::End) {
      const Token t = lex_.peek();
      const bool juxtaposed = t.kind == Tok::Ident || t.kind == Tok::Int || t.kind == Tok::LParen;
      throw ParseError(juxtaposed ? "implicit multiplication is not allowed; use '*'" : "unexpected token",
                       {t.start, t.end});
    }
    return p;
  }

 private:
  Polynomial poly() {
    Polynomial acc = term();
    for (;;) {
      const Tok k = lex_.peek().kind;
      if (k != Tok::Plus && k != Tok::Minus) break;
      lex_.take();
      Polynomial t = term();
      acc = (k == Tok::Plus) ? acc + t : acc - t;
    }
    return acc;
  }

  Polynomial term() {
    bool negate = false;
    if (lex_.peek().kind == Tok::Minus || lex_.peek().kind == Tok::Plus) negate = lex_.take().kind == Tok::Minus;
    Polynomial acc = factor();
    while (lex_.peek().kind == Tok::Star) {
      lex_.take();
      acc = acc * factor();
    }
    return negate ? -acc : acc;
  }

  Polynomial factor() {
    Polynomial b = base();
    if (lex_.peek().kind == Tok::Caret) {
      lex_.take();
      const Token e = lex_.take();
      if (e.kind != Tok::Int) throw ParseError("expected a natural exponent after '^'", {e.start, e.end});
      unsigned long exponent = 0;
      try {
        exponent = std::stoul(std::string(lex_.lexeme(e)));
      } catch (const std::exception&) {
        throw ParseError("exponent too large", {e.start, e.end});
      }
      if (exponent > 65535) throw ParseError("exponent too large", {e.start, e.end});
      if (exponent == 0) return Polynomial(ring_, Rational(1));
      return pow(b, static_cast<long long>(exponent));
    }
    return b;
  }

  Polynomial base() {
    const Token t = lex_.take();
    switch (t.kind) {
      case Tok::Int: {
        Integer num(std::string(lex_.lexeme(t)), 10);
        if (lex_.peek().kind == Tok::Slash) {
          lex_.take();
          const Token d = lex_.take();
          if (d.kind != Tok::Int)
            throw ParseError("division is only allowed between integer literals", {d.start, d.end});
          Integer den(std::string(lex_.lexeme(d)), 10);
          if (den == 0) throw ParseError("division by zero", {t.start, d.end});
          Rational q(num, den);
          q.canonicalize();
          return Polynomial(ring_, q);
        }
        return Polynomial(ring_, Rational(num));
      }
      case Tok::Ident: {
        const auto idx = ring_.index_of(lex_.lexeme(t));
        if (!idx) throw ParseError("unknown variable '" + std::string(lex_.lexeme(t)) + "'", {t.start, t.end});
        Polynomial v = variable(ring_, *idx);
        if (lex_.peek().kind == Tok::Slash) {
          const Token s = lex_.peek();
          throw ParseError("division by a non-constant is not allowed", {s.start, s.end});
        }
        return v;
      }
      case Tok::LParen: {
        Polynomial p = poly();
        const Token r = lex_.take();
        if (r.kind != Tok::RParen) throw ParseError("expected ')'", {r.start, r.end});
        if (lex_.peek().kind == Tok::Slash) {
          const Token s = lex_.peek();
          throw ParseError("division by a non-constant is not allowed", {s.start, s.end});
        }
        return p;
      }
      case Tok::End:
        throw ParseError("unexpected end of input", {t.start, t.end});
      default:
        throw ParseError("unexpected token '" + std::string(lex_.lexeme(t)) + "'", {t.start, t.end});
    }
  }

  const Ring& ring_;
  Lexer lex_;
};

}  // namespace

Ring parse_ring(std::string_view text) {
  std::size_t b = 0;
  std::size_t e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  const std::string_view s = text.substr(b, e - b);
  if (s.size() < 4 || s.substr(0, 3) != "QQ[" || s.back() != ']')
    throw ParseError("malformed ring header, expected QQ[v1,...,vn]", {b, e});
  std::vector<std::string> names;
  std::size_t pos = b + 3;
  const std::size_t close = e - 1;
  while (pos <= close) {
    std::size_t next = text.find(',', pos);
    if (next == std::string_view::npos || next > close) next = close;
    std::size_t nb = pos;
    std::size_t ne = next;
    while (nb < ne && std::isspace(static_cast<unsigned char>(text[nb]))) ++nb;
    while (ne > nb && std::isspace(static_cast<unsigned char>(text[ne - 1]))) --ne;
    if (nb == ne) {
      if (names.empty() && next == close) throw ParseError("empty variable list", {b, e});
      throw ParseError("empty variable name", {pos, next});
    }
    std::string name(text.substr(nb, ne - nb));
    for (const auto& n : names)
      if (n == name) throw ParseError("duplicate variable '" + name + "'", {nb, ne});
    names.push_back(std::move(name));
    pos = next + 1;
    if (next == close) break;
  }
  try {
    return Ring(std::move(names));
  } catch (const std::invalid_argument& err) {
    throw ParseError(err.what(), {b, e});
  }
}

Polynomial parse_polynomial(const Ring& ring, std::string_view text) {
  return PolyParser(ring, text).parse();
}

CoeffText coeff_text(const Rational& c) {
  CoeffText out;
  out.negative = sgn(c) < 0;
  const Rational m = abs(c);
  out.magnitude = to_string(m);
  out.is_one = (m == 1);
  return out;
}

std::string format_power_product(const Ring& ring, const PowerProduct& pp) {
  if (pp.is_one()) return "1";
  std::string out;
  for (std::size_t i = 0; i < pp.arity(); ++i) {
    if (pp[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += ring.name(i);
    if (pp[i] > 1) out += "^" + std::to_string(pp[i]);
  }
  return out;
}

}  // namespace slicegb
