#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

namespace famrank {

/// A natural number or the distinguished value Infinity (omega in the
/// one-point compactification of the naturals). Infinity absorbs addition.
class ExtNat {
 public:
  constexpr ExtNat() = default;
  constexpr ExtNat(std::uint64_t value) : value_(value) {}  // NOLINT: implicit by intent

  static constexpr ExtNat infinity() {
    ExtNat r;
    r.infinite_ = true;
    return r;
  }

  constexpr bool is_infinite() const { return infinite_; }
  constexpr bool is_finite() const { return !infinite_; }

  /// Throws std::logic_error when called on Infinity.
  std::uint64_t value() const;

  constexpr std::strong_ordering operator<=>(const ExtNat& other) const {
    if (infinite_ || other.infinite_) {
      return static_cast<int>(infinite_) <=> static_cast<int>(other.infinite_);
    }
    return value_ <=> other.value_;
  }
  constexpr bool operator==(const ExtNat& other) const {
    return infinite_ == other.infinite_ && (infinite_ || value_ == other.value_);
  }

  /// Checked: throws std::overflow_error when a finite sum does not fit.
  ExtNat operator+(const ExtNat& other) const;
  ExtNat& operator+=(const ExtNat& other) { return *this = *this + other; }

  /// Counting-measure product: 0 * Infinity = 0.
  ExtNat operator*(const ExtNat& other) const;

  /// Decimal text, or "inf".
  std::string to_string() const;

 private:
  std::uint64_t value_ = 0;
  bool infinite_ = false;
};

std::ostream& operator<<(std::ostream& os, const ExtNat& n);

/// Parses a non-negative decimal or the token "inf". Throws std::invalid_argument.
ExtNat parse_ext_nat(const std::string& text);

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);

}  // namespace famrank
