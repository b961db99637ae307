#include "famrank/qe/parser.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <string>
#include <vector>

#include "famrank/errors.hpp"

namespace famrank::qe {

namespace {

struct Token {
  enum class Kind { Ident, Number, Punct, End };
  Kind kind = Kind::End;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t line = 1;
  std::size_t column = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
  };
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    Token tok;
    tok.line = line;
    tok.column = column;
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isalnum(static_cast<unsigned char>(src[j]))) ++j;
      tok.kind = Token::Kind::Ident;
      tok.text = std::string(src.substr(i, j - i));
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      tok.kind = Token::Kind::Number;
      tok.text = std::string(src.substr(i, j - i));
      advance(j - i);
    } else {
      static constexpr std::string_view kPunct[] = {"<->", "->", ">=", "(", ")", ",", ".", "=", "!", "&", "|"};
      std::optional<std::string_view> hit;
      for (auto p : kPunct) {
        if (src.substr(i, p.size()) == p) {
          hit = p;
          break;
        }
      }
      if (!hit) throw ParseError(std::string("unexpected character '") + c + "'", line, column);
      tok.kind = Token::Kind::Punct;
      tok.text = std::string(*hit);
      advance(hit->size());
    }
    out.push_back(std::move(tok));
  }
  Token end;
  end.line = line;
  end.column = column;
  out.push_back(end);
  return out;
}

// Splits "P12" into ('P', 12); nullopt unless letter followed by digits only.
std::optional<std::uint32_t> indexed(const std::string& name, char letter, bool allow_bare) {
  if (name.empty() || name[0] != letter) return std::nullopt;
  if (name.size() == 1) return allow_bare ? std::optional<std::uint32_t>(1) : std::nullopt;
  std::uint32_t v = 0;
  auto [ptr, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), v);
  if (ec != std::errc() || ptr != name.data() + name.size()) return std::nullopt;
  return v;
}

bool is_keyword(const std::string& s) { return s == "forall" || s == "exists"; }

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

  Formula parse_sentence() {
    Formula f = parse_iff();
    if (peek().kind != Token::Kind::End) fail("unexpected '" + peek().text + "'");
    return f;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  Token next() {
    Token t = peek();
    if (pos_ < tokens_.size() - 1) ++pos_;
    return t;
  }
  bool at_punct(std::string_view p) const {
    return peek().kind == Token::Kind::Punct && peek().text == p;
  }
  bool accept(std::string_view p) {
    if (!at_punct(p)) return false;
    next();
    return true;
  }
  [[noreturn]] void fail(const std::string& msg, const Token* at = nullptr) const {
    const Token& t = at ? *at : peek();
    throw ParseError(msg, t.line, t.column);
  }
  void expect(std::string_view p) {
    if (!accept(p)) {
      const std::string got = peek().kind == Token::Kind::End ? "end of input" : "'" + peek().text + "'";
      fail("expected '" + std::string(p) + "' but found " + got);
    }
  }

  Formula parse_iff() {
    Formula left = parse_implies();
    while (accept("<->")) left = Formula::iff(std::move(left), parse_implies());
    return left;
  }

  Formula parse_implies() {
    Formula left = parse_or();
    if (accept("->")) return Formula::implies(std::move(left), parse_implies());
    return left;
  }

  Formula parse_or() {
    Formula left = parse_and();
    while (accept("|")) left = Formula::disj(std::move(left), parse_and());
    return left;
  }

  Formula parse_and() {
    Formula left = parse_unary();
    while (accept("&")) left = Formula::conj(std::move(left), parse_unary());
    return left;
  }

  Formula parse_unary() {
    if (accept("!")) return Formula::negate(parse_unary());
    if (accept("(")) {
      Formula inner = parse_iff();
      expect(")");
      return inner;
    }
    const Token& t = peek();
    if (t.kind == Token::Kind::Ident && is_keyword(t.text)) return parse_quantifier();
    if (t.kind == Token::Kind::Ident && std::isupper(static_cast<unsigned char>(t.text[0]))) return parse_atom();
    if (t.kind == Token::Kind::End) fail("unexpected end of input");
    Term lhs = parse_term();
    expect("=");
    Term rhs = parse_term();
    return Formula::equal(std::move(lhs), std::move(rhs));
  }

  Formula parse_quantifier() {
    const Token head = next();
    std::uint64_t threshold = 1;
    if (head.text == "exists" && accept(">=")) {
      const Token num = next();
      if (num.kind != Token::Kind::Number) fail("expected a threshold after '>='", &num);
      auto [ptr, ec] = std::from_chars(num.text.data(), num.text.data() + num.text.size(), threshold);
      if (ec != std::errc() || threshold == 0) fail("counting threshold must be a positive integer", &num);
    }
    const Token var = next();
    if (var.kind != Token::Kind::Ident || !std::islower(static_cast<unsigned char>(var.text[0])) ||
        is_keyword(var.text) || indexed(var.text, 'c', false)) {
      fail("expected a variable name after '" + head.text + "'", &var);
    }
    expect(".");
    scope_.push_back(var.text);
    Formula body = parse_iff();
    scope_.pop_back();
    if (head.text == "forall") return Formula::forall(var.text, std::move(body));
    return Formula::exists(var.text, std::move(body), threshold);
  }

  std::uint32_t positive_index(std::optional<std::uint32_t> idx, const Token& at) const {
    if (*idx == 0) fail("symbol indices start at 1: '" + at.text + "'", &at);
    return *idx;
  }

  Formula parse_atom() {
    const Token name = next();
    if (auto q = indexed(name.text, 'Q', false)) {
      if (at_punct("(")) fail("0-ary predicate '" + name.text + "' takes no arguments");
      return Formula::zeroary(positive_index(q, name));
    }
    if (auto p = indexed(name.text, 'P', false)) {
      const auto index = positive_index(p, name);
      if (!at_punct("(")) fail("unary predicate '" + name.text + "' needs one argument");
      next();
      Term t = parse_term();
      if (at_punct(",")) fail("unary predicate '" + name.text + "' takes exactly one argument");
      expect(")");
      return Formula::unary(index, std::move(t));
    }
    if (auto r = indexed(name.text, 'R', true)) {
      const auto index = positive_index(r, name);
      if (!at_punct("(")) fail("binary predicate '" + name.text + "' needs two arguments");
      next();
      Term a = parse_term();
      if (!at_punct(",")) fail("binary predicate '" + name.text + "' takes exactly two arguments");
      next();
      Term b = parse_term();
      if (!at_punct(")")) fail("binary predicate '" + name.text + "' takes exactly two arguments");
      next();
      return Formula::binary(index, std::move(a), std::move(b));
    }
    fail("unknown symbol '" + name.text + "'", &name);
  }

  Term parse_term() {
    const Token t = next();
    if (t.kind != Token::Kind::Ident || !std::islower(static_cast<unsigned char>(t.text[0])) || is_keyword(t.text)) {
      const std::string got = t.kind == Token::Kind::End ? "end of input" : "'" + t.text + "'";
      fail("expected a term but found " + got, &t);
    }
    if (auto c = indexed(t.text, 'c', false)) {
      if (at_punct("(")) fail("constant '" + t.text + "' takes no arguments");
      return Term::constant(positive_index(c, t));
    }
    if (at_punct("(")) {
      auto f = indexed(t.text, 'f', true);
      if (!f) fail("unknown function symbol '" + t.text + "'", &t);
      const auto index = positive_index(f, t);
      next();
      Term arg = parse_term();
      if (at_punct(",")) fail("function '" + t.text + "' takes exactly one argument");
      expect(")");
      return Term::apply(index, std::move(arg));
    }
    bool bound = false;
    for (const auto& v : scope_) bound = bound || v == t.text;
    if (!bound) fail("unbound variable '" + t.text + "'", &t);
    return Term::variable(t.text);
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::vector<std::string> scope_;
};

}  // namespace

Formula parse(std::string_view text) { return Parser(text).parse_sentence(); }

}  // namespace famrank::qe
