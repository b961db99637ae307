#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "famrank/ext_nat.hpp"
#include "famrank/signature.hpp"

namespace famrank {

/// How the constants c1..cn are identified and where each class sits.
///
/// block_of is a restricted growth string: constant 0 is in block 0 and each
/// constant's block id is at most one more than the maximum id before it.
/// block_cell maps every block to the cell (sign pattern of the unary
/// predicates) containing the element it names.
struct ConstantConfig {
  std::vector<std::uint32_t> block_of;
  std::vector<std::uint32_t> block_cell;

  std::size_t block_count() const { return block_cell.size(); }
  std::vector<std::uint64_t> blocks_per_cell(std::size_t cells) const;

  auto operator<=>(const ConstantConfig&) const = default;
};

/// The non-cardinality part of a complete monadic theory.
struct DiscreteData {
  std::vector<bool> zeroary;
  ConstantConfig constants;

  /// Throws SignatureMismatch when sizes or indices disagree with sig.
  void validate(const MonadicSignature& sig) const;

  auto operator<=>(const DiscreteData&) const = default;
};

/// A complete theory of a finite monadic-with-constants signature, given by
/// its invariants. Cell cardinalities count the elements named by constants.
struct TheoryPoint {
  DiscreteData discrete;
  std::vector<ExtNat> cells;

  void validate(const MonadicSignature& sig) const;
  ExtNat total_size() const;
  std::size_t infinite_cell_count() const;

  auto operator<=>(const TheoryPoint&) const = default;
};

/// [lo, hi] in the naturals extended by Infinity; Infinity is a member iff
/// hi is Infinity.
struct Interval {
  std::uint64_t lo = 0;
  ExtNat hi = ExtNat::infinity();

  bool empty() const { return ExtNat(lo) > hi; }
  bool contains(const ExtNat& v) const { return ExtNat(lo) <= v && v <= hi; }
  bool unbounded() const { return hi.is_infinite(); }
  /// hi - lo + 1, Infinity when unbounded. Requires !empty().
  ExtNat size() const;

  auto operator<=>(const Interval&) const = default;
};

/// One interval per cell.
using Box = std::vector<Interval>;

std::optional<Box> intersect(const Box& a, const Box& b);
/// a \ b as pairwise-disjoint boxes.
std::vector<Box> subtract(const Box& a, const Box& b);
bool box_empty(const Box& b);
bool box_contains(const Box& b, const std::vector<ExtNat>& v);
std::size_t unbounded_count(const Box& b);

/// Operations on unions of pairwise-disjoint boxes.
using BoxSet = std::vector<Box>;
BoxSet intersect(const BoxSet& a, const BoxSet& b);
BoxSet subtract(const BoxSet& a, const BoxSet& b);
BoxSet unite(const BoxSet& a, const BoxSet& b);
/// Merges boxes that differ only in one adjacent interval; canonical order.
void coalesce(BoxSet& set);

/// A clopen set of theory points sharing one discrete configuration.
struct Region {
  DiscreteData discrete;
  Box cells;

  bool contains(const TheoryPoint& p) const;
  bool empty() const { return box_empty(cells); }

  auto operator<=>(const Region&) const = default;
};

struct NoRestriction {
  auto operator<=>(const NoRestriction&) const = default;
};
struct InfiniteModels {
  auto operator<=>(const InfiniteModels&) const = default;
};
struct ExactSize {
  std::uint64_t size = 0;
  auto operator<=>(const ExactSize&) const = default;
};
using Restriction = std::variant<NoRestriction, InfiniteModels, ExactSize>;

/// A definable family: the union of regions, cut down by the restriction.
struct FamilySpec {
  MonadicSignature signature;
  std::vector<Region> regions;
  Restriction restriction;

  bool operator==(const FamilySpec&) const = default;
};

/// True iff p lies in some region and satisfies the restriction.
bool contains(const FamilySpec& f, const TheoryPoint& p);

/// Throws SignatureMismatch when the shapes disagree.
bool point_in_region(const TheoryPoint& p, const Region& r);

}  // namespace famrank
