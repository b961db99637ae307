#pragma once

#include <cstdint>
#include <vector>

#include "famrank/ext_nat.hpp"
#include "famrank/rank_result.hpp"
#include "famrank/theory.hpp"

namespace famrank {

/// Caps for eager expansion of exact-size families.
inline constexpr std::size_t kMaxExpandedCells = 16;
inline constexpr std::uint64_t kMaxExpandedSize = 64;

/// The whole Stone space of sig (every complete theory with a nonempty
/// model), cut down by restriction: one region per discrete configuration.
FamilySpec full_family(const MonadicSignature& sig, Restriction restriction = NoRestriction{});

/// Number of regions full_family(sig) would have before normalization.
/// Throws std::overflow_error.
std::uint64_t full_family_region_count(const MonadicSignature& sig);

/// Pairwise-disjoint, coalesced, canonically ordered regions denoting the
/// same point set. Lower bounds are raised to the constant blocks of each
/// cell and the empty structure is removed. ExactSize families are
/// expanded to one region per point (throws ResourceLimit past the caps).
FamilySpec normalize(const FamilySpec& f);

bool is_empty(const FamilySpec& f);

/// Set operations on families with the same signature. The result keeps the
/// restriction of the left operand; both sides must share restriction kind.
FamilySpec intersect(const FamilySpec& f, const FamilySpec& g);
FamilySpec difference(const FamilySpec& f, const FamilySpec& g);
FamilySpec unite(const FamilySpec& f, const FamilySpec& g);
/// Same point set.
bool equivalent(const FamilySpec& f, const FamilySpec& g);

/// CB rank of p inside the family viewed as its own space. Throws
/// std::invalid_argument when p is not a member.
std::uint64_t point_rank(const TheoryPoint& p, const FamilySpec& f);

/// The points of `regions` having at least `floor` infinite cells.
/// Only unbounded cells can be infinite, so regions with fewer unbounded
/// cells than floor contribute nothing and are dropped.
struct DerivativeStage {
  std::vector<Region> regions;
  std::uint64_t floor = 0;

  bool empty() const { return regions.empty(); }
  /// Number of points; Infinity when some region has more unbounded cells
  /// than floor.
  ExtNat point_count() const;
};

/// Stage 0: the family itself, as a normalized region set with the floor
/// implied by the restriction (1 for InfiniteModels, else 0).
DerivativeStage initial_stage(const FamilySpec& f);

/// Removes the isolated points of the stage.
DerivativeStage derive(const DerivativeStage& stage);

/// Empty, or Finite(rank, degree) by iterating derive until empty.
RankResult rs_and_degree(const FamilySpec& f);

/// Points attaining the maximal rank, in canonical order.
std::vector<TheoryPoint> maximal_rank_points(const FamilySpec& f);

bool is_alpha_minimal(const FamilySpec& f, std::uint64_t alpha);
bool is_e_minimal_family(const FamilySpec& f);

/// Splits a nonempty family of rank a and degree d into d pairwise-disjoint
/// subfamilies of rank a and degree 1 covering it. Throws
/// std::invalid_argument for the empty family.
std::vector<FamilySpec> decompose_alpha_minimal(const FamilySpec& f);

/// Accumulation points of the family, as a stage. For a clopen family
/// these are the members of rank at least 1.
DerivativeStage accumulation_points(const FamilySpec& f);

/// Members with total size <= size_cap.
ExtNat count_points(const FamilySpec& f, ExtNat size_cap);

}  // namespace famrank
