#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "famrank/qe/ast.hpp"
#include "famrank/qe/structure.hpp"

namespace famrank {

/// The infinite-rank situations a 2-tree is generated for.
enum class WitnessCase {
  ZeroaryInfinite,         // infinitely many 0-ary predicates
  UnaryInfinite,           // infinitely many unary predicates
  ConstantsInfinite,       // infinitely many constants
  BinaryPredicate,         // one binary predicate
  UnaryFunction,           // one unary function
  ConstantsInfiniteSizeN,  // infinitely many constants, two-element models
};

std::string_view to_string(WitnessCase c);
std::optional<WitnessCase> parse_witness_case(std::string_view tag);
std::vector<WitnessCase> all_witness_cases();

/// Relational cases nest one quantifier or application per level.
inline constexpr std::size_t kMaxRelationalDepth = 8;

struct TwoTreeNode {
  std::vector<qe::Formula> literals;
  qe::Formula sentence;
};

/// A binary tree of sentences keyed by bit strings ("" is the root). Bit 1
/// adds the level's literal, bit 0 its negation; a node's sentence is the
/// premise (if any) conjoined with its literals.
struct TwoTree {
  WitnessCase kind = WitnessCase::ZeroaryInfinite;
  std::size_t depth = 0;
  std::optional<qe::Formula> premise;
  std::map<std::string, TwoTreeNode> nodes;

  std::vector<std::string> leaves() const;
};

/// Throws std::invalid_argument for depth 0 or a relational depth above
/// kMaxRelationalDepth.
TwoTree generate(WitnessCase kind, std::size_t depth);

/// The level-i literal (1-based) of a case.
qe::Formula level_literal(WitnessCase kind, std::size_t level);

/// An explicit model of the node whose key is `bits`.
qe::FiniteStructure model_for(WitnessCase kind, const std::string& bits);

struct CheckReport {
  bool passed = true;
  std::size_t nodes_checked = 0;
  std::size_t engine_checks = 0;
  std::size_t model_checks = 0;
  std::optional<std::string> failing_node;
  std::string reason;
};

/// Verifies the refinement structure, satisfiability of every node and
/// inconsistency of every sibling pair. Monadic cases go through the
/// engine when the signature has at most 4 unary predicates, and through
/// explicit models otherwise; relational cases use chain models.
CheckReport check(const TwoTree& tree);

nlohmann::json to_json(const TwoTree& tree);
nlohmann::json to_json(const CheckReport& report);

}  // namespace famrank
