#include "famrank/ext_nat.hpp"

#include <charconv>
#include <limits>
#include <stdexcept>

namespace famrank {

std::uint64_t ExtNat::value() const {
  if (infinite_) throw std::logic_error("ExtNat::value() on Infinity");
  return value_;
}

ExtNat ExtNat::operator+(const ExtNat& other) const {
  if (infinite_ || other.infinite_) return infinity();
  return ExtNat(checked_add(value_, other.value_));
}

ExtNat ExtNat::operator*(const ExtNat& other) const {
  if ((is_finite() && value_ == 0) || (other.is_finite() && other.value_ == 0)) return ExtNat(0);
  if (infinite_ || other.infinite_) return infinity();
  return ExtNat(checked_mul(value_, other.value_));
}

std::string ExtNat::to_string() const {
  return infinite_ ? std::string("inf") : std::to_string(value_);
}

std::ostream& operator<<(std::ostream& os, const ExtNat& n) { return os << n.to_string(); }

ExtNat parse_ext_nat(const std::string& text) {
  if (text == "inf") return ExtNat::infinity();
  std::uint64_t v = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (text.empty() || ec != std::errc() || ptr != last) {
    throw std::invalid_argument("expected a non-negative integer or 'inf', got '" + text + "'");
  }
  return ExtNat(v);
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  if (a > std::numeric_limits<std::uint64_t>::max() - b) throw std::overflow_error("count overflow");
  return a + b;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    throw std::overflow_error("count overflow");
  }
  return a * b;
}

}  // namespace famrank
