#include "famrank/signature.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

#include "famrank/errors.hpp"

namespace famrank {

void Signature::validate() const {
  for (const auto& [arity, count] : predicates) {
    if (arity < 2) throw std::invalid_argument("predicate arity must be >= 2 (use zeroary/unary fields)");
    if (count == ExtNat(0)) throw std::invalid_argument("zero-count predicate entry");
  }
  for (const auto& [arity, count] : functions) {
    if (arity < 1) {
      throw std::invalid_argument("nullary function symbols are not supported; declare constants instead");
    }
    if (count == ExtNat(0)) throw std::invalid_argument("zero-count function entry");
  }
}

bool Signature::is_empty() const {
  return zeroary == ExtNat(0) && unary == ExtNat(0) && constants == ExtNat(0) && predicates.empty() &&
         functions.empty();
}

bool Signature::is_finite() const {
  if (zeroary.is_infinite() || unary.is_infinite() || constants.is_infinite()) return false;
  for (const auto& [_, c] : predicates) {
    if (c.is_infinite()) return false;
  }
  for (const auto& [_, c] : functions) {
    if (c.is_infinite()) return false;
  }
  return true;
}

bool Signature::is_monadic() const { return predicates.empty() && functions.empty(); }

bool Signature::has_finitely_many_predicates() const {
  if (zeroary.is_infinite() || unary.is_infinite()) return false;
  for (const auto& [_, c] : predicates) {
    if (c.is_infinite()) return false;
  }
  return true;
}

std::size_t MonadicSignature::cell_count() const {
  if (unary > 30) throw ResourceLimit("too many unary predicates: " + std::to_string(unary));
  return std::size_t{1} << unary;
}

Signature MonadicSignature::to_signature() const {
  Signature s;
  s.zeroary = zeroary;
  s.unary = unary;
  s.constants = constants;
  return s;
}

std::optional<MonadicSignature> as_finite_monadic(const Signature& sig) {
  if (!sig.is_monadic() || !sig.is_finite()) return std::nullopt;
  constexpr auto kMax = std::numeric_limits<unsigned>::max();
  if (sig.zeroary.value() > kMax || sig.unary.value() > kMax || sig.constants.value() > kMax) {
    return std::nullopt;
  }
  return MonadicSignature{static_cast<unsigned>(sig.zeroary.value()),
                          static_cast<unsigned>(sig.unary.value()),
                          static_cast<unsigned>(sig.constants.value())};
}

std::string describe(const Signature& sig) {
  std::ostringstream os;
  os << "zeroary=" << sig.zeroary << " unary=" << sig.unary << " constants=" << sig.constants;
  for (const auto& [arity, c] : sig.predicates) os << " pred" << arity << "=" << c;
  for (const auto& [arity, c] : sig.functions) os << " func" << arity << "=" << c;
  return os.str();
}

}  // namespace famrank
