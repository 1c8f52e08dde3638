#include "chowring/parser.hpp"

#include <cctype>

namespace chowring {

ParseError::ParseError(std::size_t position, const std::string& message)
    : std::runtime_error(message + " at column " + std::to_string(position + 1)),
      position_(position),
      detail_(message) {}

namespace {

constexpr std::uint32_t kMaxExponent = 4096;

enum class Tok { Number, Ident, Plus, Minus, Star, Caret, Slash, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string_view text;
  std::size_t pos;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) { advance(); }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])) &&
           static_cast<unsigned char>(src_[pos_]) < 0x80) {
      ++pos_;
    }
    if (pos_ >= src_.size()) {
      current_ = {Tok::End, {}, src_.size()};
      return;
    }
    const std::size_t start = pos_;
    const auto c = static_cast<unsigned char>(src_[pos_]);
    if (c >= 0x80) throw ParseError(start, "non-ASCII character");
    if (std::isdigit(c)) {
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      current_ = {Tok::Number, src_.substr(start, pos_ - start), start};
      return;
    }
    if (std::isalpha(c) || c == '_') {
      while (pos_ < src_.size()) {
        auto d = static_cast<unsigned char>(src_[pos_]);
        if (d >= 0x80 || !(std::isalnum(d) || d == '_')) break;
        ++pos_;
      }
      current_ = {Tok::Ident, src_.substr(start, pos_ - start), start};
      return;
    }
    ++pos_;
    Tok kind;
    switch (c) {
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      case '*': kind = Tok::Star; break;
      case '^': kind = Tok::Caret; break;
      case '/': kind = Tok::Slash; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      default:
        throw ParseError(start, std::string("unexpected character '") + static_cast<char>(c) + "'");
    }
    current_ = {kind, src_.substr(start, 1), start};
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  Token current_{Tok::End, {}, 0};
};

std::string describe(const Token& t) {
  if (t.kind == Tok::End) return "end of input";
  return "'" + std::string(t.text) + "'";
}

class Parser {
 public:
  Parser(std::string_view src, const GeneratorSetPtr& gens, const NamedClasses& named)
      : lex_(src), gens_(gens), named_(named) {}

  Polynomial parse() {
    Polynomial p = expr();
    if (lex_.peek().kind != Tok::End) {
      throw ParseError(lex_.peek().pos, "unexpected " + describe(lex_.peek()));
    }
    return p;
  }

 private:
  Polynomial expr() {
    bool negate = false;
    if (lex_.peek().kind == Tok::Plus || lex_.peek().kind == Tok::Minus) {
      negate = lex_.take().kind == Tok::Minus;
    }
    Polynomial acc = term();
    if (negate) acc = -acc;
    while (lex_.peek().kind == Tok::Plus || lex_.peek().kind == Tok::Minus) {
      const bool minus = lex_.take().kind == Tok::Minus;
      Polynomial rhs = term();
      if (minus) {
        acc -= rhs;
      } else {
        acc += rhs;
      }
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (lex_.peek().kind == Tok::Star) {
      lex_.take();
      acc *= factor();
    }
    return acc;
  }

  Polynomial factor() {
    Polynomial base = atom();
    if (lex_.peek().kind != Tok::Caret) return base;
    lex_.take();
    return base.pow(exponent());
  }

  std::uint32_t exponent() {
    const Token& t = lex_.peek();
    if (t.kind == Tok::Minus) throw ParseError(t.pos, "negative exponent");
    if (t.kind == Tok::LParen) {
      lex_.take();
      if (lex_.peek().kind == Tok::Minus) throw ParseError(lex_.peek().pos, "negative exponent");
      if (lex_.peek().kind == Tok::Plus) lex_.take();
      std::uint32_t e = integer_exponent();
      expect(Tok::RParen, "')'");
      return e;
    }
    return integer_exponent();
  }

  std::uint32_t integer_exponent() {
    const Token t = lex_.take();
    if (t.kind != Tok::Number) {
      throw ParseError(t.pos, "expected a non-negative integer exponent, found " + describe(t));
    }
    if (t.text.size() > 5 || std::stoul(std::string(t.text)) > kMaxExponent) {
      throw ParseError(t.pos, "exponent too large");
    }
    return static_cast<std::uint32_t>(std::stoul(std::string(t.text)));
  }

  Polynomial atom() {
    const Token t = lex_.take();
    switch (t.kind) {
      case Tok::Number: {
        std::string literal(t.text);
        if (lex_.peek().kind == Tok::Slash) {
          lex_.take();
          const Token den = lex_.take();
          if (den.kind != Tok::Number) {
            throw ParseError(den.pos, "expected a denominator, found " + describe(den));
          }
          if (den.text.find_first_not_of('0') == std::string_view::npos) {
            throw ParseError(den.pos, "zero denominator");
          }
          literal += "/" + std::string(den.text);
        }
        return Polynomial::constant(gens_, Rational::parse(literal));
      }
      case Tok::Ident: {
        if (auto idx = gens_->index_of(t.text)) return Polynomial::variable(gens_, *idx);
        if (auto it = named_.find(std::string(t.text)); it != named_.end()) return it->second;
        throw ParseError(t.pos, "unknown identifier '" + std::string(t.text) + "'");
      }
      case Tok::LParen: {
        Polynomial inner = expr();
        expect(Tok::RParen, "')'");
        return inner;
      }
      default:
        throw ParseError(t.pos, "unexpected " + describe(t));
    }
  }

  void expect(Tok kind, const char* what) {
    const Token t = lex_.take();
    if (t.kind != kind) throw ParseError(t.pos, std::string("expected ") + what + ", found " + describe(t));
  }

  Lexer lex_;
  const GeneratorSetPtr& gens_;
  const NamedClasses& named_;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const GeneratorSetPtr& gens,
                            const NamedClasses& named) {
  for (const auto& [name, value] : named) {
    if (!same_generators(value.generators(), gens)) throw GeneratorMismatch();
  }
  return Parser(text, gens, named).parse();
}

std::string render_monomial(const GeneratorSet& gens, const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += gens[i].name;
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string render(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const bool negative = c.sign() < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Rational magnitude = negative ? -c : c;
    if (m.is_one()) {
      out += magnitude.str();
      continue;
    }
    if (!magnitude.is_one()) {
      out += magnitude.is_integer() ? magnitude.str() : "(" + magnitude.str() + ")";
      out += '*';
    }
    out += render_monomial(*p.generators(), m);
  }
  return out;
}

}  // namespace chowring
