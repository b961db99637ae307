#include "famrank/qe/ast.hpp"

#include <algorithm>
#include <stdexcept>

namespace famrank::qe {

Term Term::variable(std::string name) {
  Term t;
  t.kind = Kind::Variable;
  t.name = std::move(name);
  return t;
}

Term Term::constant(std::uint32_t index) {
  Term t;
  t.kind = Kind::Constant;
  t.index = index;
  return t;
}

Term Term::apply(std::uint32_t function, Term arg) {
  Term t;
  t.kind = Kind::Apply;
  t.index = function;
  t.args.push_back(std::move(arg));
  return t;
}

namespace {

Formula make(Formula::Kind kind, std::vector<Formula> children) {
  Formula f;
  f.kind = kind;
  f.children = std::move(children);
  return f;
}

}  // namespace

Formula Formula::zeroary(std::uint32_t j) {
  Formula f;
  f.kind = Kind::Zeroary;
  f.symbol = j;
  return f;
}

Formula Formula::unary(std::uint32_t i, Term t) {
  Formula f;
  f.kind = Kind::Unary;
  f.symbol = i;
  f.terms.push_back(std::move(t));
  return f;
}

Formula Formula::binary(std::uint32_t i, Term a, Term b) {
  Formula f;
  f.kind = Kind::Binary;
  f.symbol = i;
  f.terms = {std::move(a), std::move(b)};
  return f;
}

Formula Formula::equal(Term a, Term b) {
  Formula f;
  f.kind = Kind::Equal;
  f.terms = {std::move(a), std::move(b)};
  return f;
}

Formula Formula::negate(Formula f) { return make(Kind::Not, {std::move(f)}); }
Formula Formula::conj(Formula a, Formula b) { return make(Kind::And, {std::move(a), std::move(b)}); }
Formula Formula::disj(Formula a, Formula b) { return make(Kind::Or, {std::move(a), std::move(b)}); }
Formula Formula::implies(Formula a, Formula b) { return make(Kind::Implies, {std::move(a), std::move(b)}); }
Formula Formula::iff(Formula a, Formula b) { return make(Kind::Iff, {std::move(a), std::move(b)}); }

Formula Formula::exists(std::string var, Formula body, std::uint64_t threshold) {
  Formula f = make(Kind::Exists, {std::move(body)});
  f.variable = std::move(var);
  f.threshold = threshold;
  return f;
}

Formula Formula::forall(std::string var, Formula body) {
  Formula f = make(Kind::Forall, {std::move(body)});
  f.variable = std::move(var);
  return f;
}

Formula Formula::conj_all(const std::vector<Formula>& parts) {
  if (parts.empty()) throw std::invalid_argument("empty conjunction");
  Formula out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out = conj(std::move(out), parts[i]);
  return out;
}

namespace {

void collect(const Term& t, SymbolUse& use) {
  if (t.kind == Term::Kind::Constant) use.constants = std::max(use.constants, t.index);
  if (t.kind == Term::Kind::Apply) use.functions = std::max(use.functions, t.index);
  for (const auto& a : t.args) collect(a, use);
}

void collect(const Formula& f, SymbolUse& use) {
  switch (f.kind) {
    case Formula::Kind::Zeroary:
      use.zeroary = std::max(use.zeroary, f.symbol);
      break;
    case Formula::Kind::Unary:
      use.unary = std::max(use.unary, f.symbol);
      break;
    case Formula::Kind::Binary:
      use.binary = std::max(use.binary, f.symbol);
      break;
    default:
      break;
  }
  for (const auto& t : f.terms) collect(t, use);
  for (const auto& c : f.children) collect(c, use);
}

// Binding strength; operands weaker than required are parenthesized.
int precedence(const Formula& f) {
  switch (f.kind) {
    case Formula::Kind::Exists:
    case Formula::Kind::Forall:
      return 0;
    case Formula::Kind::Iff:
      return 1;
    case Formula::Kind::Implies:
      return 2;
    case Formula::Kind::Or:
      return 3;
    case Formula::Kind::And:
      return 4;
    case Formula::Kind::Not:
      return 5;
    default:
      return 6;
  }
}

std::string symbol_name(char letter, std::uint32_t index, bool elide_one) {
  if (elide_one && index == 1) return std::string(1, letter);
  return std::string(1, letter) + std::to_string(index);
}

std::string print(const Formula& f, int min_prec);

std::string binary_op(const Formula& f, const char* op, int left_min, int right_min) {
  return print(f.children[0], left_min) + " " + op + " " + print(f.children[1], right_min);
}

std::string print_unwrapped(const Formula& f) {
  switch (f.kind) {
    case Formula::Kind::Zeroary:
      return symbol_name('Q', f.symbol, false);
    case Formula::Kind::Unary:
      return symbol_name('P', f.symbol, false) + "(" + to_text(f.terms[0]) + ")";
    case Formula::Kind::Binary:
      return symbol_name('R', f.symbol, true) + "(" + to_text(f.terms[0]) + ", " + to_text(f.terms[1]) + ")";
    case Formula::Kind::Equal:
      return to_text(f.terms[0]) + " = " + to_text(f.terms[1]);
    case Formula::Kind::Not: {
      const auto& c = f.children[0];
      if (c.kind == Formula::Kind::Equal) return "!(" + print_unwrapped(c) + ")";
      return "!" + print(c, 5);
    }
    case Formula::Kind::And:
      return binary_op(f, "&", 4, 5);
    case Formula::Kind::Or:
      return binary_op(f, "|", 3, 4);
    case Formula::Kind::Implies:
      return binary_op(f, "->", 3, 2);
    case Formula::Kind::Iff:
      return binary_op(f, "<->", 1, 2);
    case Formula::Kind::Exists: {
      std::string head = f.threshold == 1 ? "exists " : "exists>=" + std::to_string(f.threshold) + " ";
      return head + f.variable + ". " + print(f.children[0], 0);
    }
    case Formula::Kind::Forall:
      return "forall " + f.variable + ". " + print(f.children[0], 0);
  }
  return {};
}

std::string print(const Formula& f, int min_prec) {
  auto text = print_unwrapped(f);
  if (precedence(f) < min_prec) return "(" + text + ")";
  return text;
}

}  // namespace

SymbolUse symbols_used(const Formula& f) {
  SymbolUse use;
  collect(f, use);
  return use;
}

std::size_t quantifier_depth(const Formula& f) {
  std::size_t inner = 0;
  for (const auto& c : f.children) inner = std::max(inner, quantifier_depth(c));
  return inner + (f.is_quantifier() ? 1 : 0);
}

std::string to_text(const Term& t) {
  switch (t.kind) {
    case Term::Kind::Variable:
      return t.name;
    case Term::Kind::Constant:
      return "c" + std::to_string(t.index);
    case Term::Kind::Apply:
      return symbol_name('f', t.index, true) + "(" + to_text(t.args[0]) + ")";
  }
  return {};
}

std::string to_text(const Formula& f) { return print(f, 0); }

}  // namespace famrank::qe
