#pragma once

#include <cstddef>

#include "famrank/qe/ast.hpp"
#include "famrank/theory.hpp"

namespace famrank::qe {

struct EliminationOptions {
  /// Abort with ResourceLimit when any intermediate region set grows past this.
  std::size_t max_regions = 100'000;
};

/// The family of complete theories of sig containing the sentence, as
/// regions over cell cardinalities (restriction None).
///
/// Works per discrete configuration, innermost quantifier first. An
/// assignment to the bound variables is described up to automorphism by
/// its type: each variable names a constant block or an anonymous element
/// of some cell, with equalities between anonymous elements recorded. A
/// formula becomes a region set per type; a counting quantifier sums the
/// witnesses among the blocks, the anonymous elements already in scope and
/// the remaining anonymous elements of each cell, which yields threshold
/// constraints on the cell cardinalities.
///
/// Throws UnsupportedFeature for binary atoms or function terms and
/// UnknownSymbol for symbols sig does not declare.
FamilySpec eliminate(const Formula& sentence, const MonadicSignature& sig, const EliminationOptions& options = {});

}  // namespace famrank::qe
