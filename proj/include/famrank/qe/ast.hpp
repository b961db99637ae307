#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace famrank::qe {

/// A variable, a constant c<i>, or an application f<i>(t) of a unary
/// function symbol. Function terms are accepted only by the evaluator.
struct Term {
  enum class Kind { Variable, Constant, Apply };

  Kind kind = Kind::Variable;
  std::string name;      // Variable
  std::uint32_t index = 0;  // Constant / Apply, 1-based
  std::vector<Term> args;   // Apply: exactly one argument

  static Term variable(std::string name);
  static Term constant(std::uint32_t index);
  static Term apply(std::uint32_t function, Term arg);

  bool operator==(const Term&) const = default;
};

/// Sentence syntax tree. Exists carries a counting threshold (plain
/// existential quantification is threshold 1).
struct Formula {
  enum class Kind {
    Zeroary,   // Q<j>
    Unary,     // P<i>(t)
    Binary,    // R<i>(t, t), evaluator only
    Equal,     // t = t
    Not,
    And,
    Or,
    Implies,
    Iff,
    Exists,
    Forall,
  };

  Kind kind = Kind::Zeroary;
  std::uint32_t symbol = 0;  // predicate index, 1-based
  std::vector<Term> terms;
  std::vector<Formula> children;
  std::string variable;
  std::uint64_t threshold = 1;

  static Formula zeroary(std::uint32_t j);
  static Formula unary(std::uint32_t i, Term t);
  static Formula binary(std::uint32_t i, Term a, Term b);
  static Formula equal(Term a, Term b);
  static Formula negate(Formula f);
  static Formula conj(Formula a, Formula b);
  static Formula disj(Formula a, Formula b);
  static Formula implies(Formula a, Formula b);
  static Formula iff(Formula a, Formula b);
  static Formula exists(std::string var, Formula body, std::uint64_t threshold = 1);
  static Formula forall(std::string var, Formula body);

  /// Left-nested conjunction; requires a nonempty list.
  static Formula conj_all(const std::vector<Formula>& parts);

  bool is_quantifier() const { return kind == Kind::Exists || kind == Kind::Forall; }

  bool operator==(const Formula&) const = default;
};

/// Largest symbol indices a formula mentions (0 when absent).
struct SymbolUse {
  std::uint32_t zeroary = 0;
  std::uint32_t unary = 0;
  std::uint32_t constants = 0;
  std::uint32_t binary = 0;
  std::uint32_t functions = 0;
};
SymbolUse symbols_used(const Formula& f);

/// Quantifier nesting depth.
std::size_t quantifier_depth(const Formula& f);

/// Minimal-parenthesis text that parse() maps back to an equal tree.
std::string to_text(const Formula& f);
std::string to_text(const Term& t);

}  // namespace famrank::qe
