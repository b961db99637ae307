#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "famrank/qe/ast.hpp"
#include "famrank/theory.hpp"

namespace famrank::qe {

/// An explicit finite structure. Element e lies in P_i iff bit (i-1) of
/// cell_of[e] is set. The optional relation and function interpret R1 and
/// f1 for the relational witness sentences.
struct FiniteStructure {
  std::size_t universe_size = 1;
  unsigned unary_count = 0;
  std::vector<bool> zeroary;
  std::vector<std::uint32_t> cell_of;
  std::vector<std::size_t> constants;  // constant i+1 -> element
  std::optional<std::set<std::pair<std::size_t, std::size_t>>> relation;
  std::optional<std::vector<std::size_t>> function;

  /// Throws std::invalid_argument on out-of-range elements or cells.
  void validate() const;
};

/// Truth of a sentence, by direct recursion over the universe. Throws
/// UnknownSymbol when the structure does not interpret a used symbol.
bool evaluate(const Formula& sentence, const FiniteStructure& s);

/// The finite structure whose complete theory is p: each constant block is
/// one element of its cell and the rest of every cell is anonymous. Throws
/// std::invalid_argument for an infinite cell, ResourceLimit past budget.
FiniteStructure materialize(const TheoryPoint& p, const MonadicSignature& sig, std::uint64_t size_budget);

/// The invariants of a monadic structure (the inverse of materialize up to
/// isomorphism).
TheoryPoint theory_of(const FiniteStructure& s, const MonadicSignature& sig);

}  // namespace famrank::qe
