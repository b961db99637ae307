#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "famrank/ext_nat.hpp"

namespace famrank {

/// Symbol counts of a first-order language, by kind and arity.
///
/// Constants are their own field; nullary function symbols are not
/// modelled. Function symbols are recorded as given and classified through
/// their graph-predicate translation without materializing it.
struct Signature {
  ExtNat zeroary;
  ExtNat unary;
  ExtNat constants;
  std::map<unsigned, ExtNat> predicates;  // arity >= 2
  std::map<unsigned, ExtNat> functions;   // arity >= 1

  /// Throws std::invalid_argument on arity or zero-count violations.
  void validate() const;

  bool is_empty() const;
  /// Every count finite.
  bool is_finite() const;
  /// No predicates of arity >= 2 and no function symbols.
  bool is_monadic() const;
  /// Zeroary, unary and higher predicate counts all finite.
  bool has_finitely_many_predicates() const;

  bool operator==(const Signature&) const = default;
};

/// A finite signature of 0-ary predicates, unary predicates and constants.
struct MonadicSignature {
  unsigned zeroary = 0;
  unsigned unary = 0;
  unsigned constants = 0;

  /// 2^unary. Throws ResourceLimit for unary > 30.
  std::size_t cell_count() const;

  Signature to_signature() const;

  auto operator<=>(const MonadicSignature&) const = default;
};

/// Present iff sig is finite and monadic and every count fits an unsigned.
std::optional<MonadicSignature> as_finite_monadic(const Signature& sig);

std::string describe(const Signature& sig);

}  // namespace famrank
