#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>

namespace famrank {

/// RS rank and degree of a family: empty (rank -1), a finite rank with a
/// degree, or infinite. A finite result may carry no degree when the
/// family is known finite but its theories are not counted.
class RankResult {
 public:
  enum class Kind { Empty, Finite, Infinite };

  static RankResult empty() { return RankResult(Kind::Empty, 0, std::nullopt); }
  static RankResult infinite() { return RankResult(Kind::Infinite, 0, std::nullopt); }
  /// Throws std::invalid_argument for degree 0.
  static RankResult finite(std::uint64_t rank, std::uint64_t degree);
  static RankResult finite_uncounted(std::uint64_t rank) {
    return RankResult(Kind::Finite, rank, std::nullopt);
  }

  Kind kind() const { return kind_; }
  bool is_empty() const { return kind_ == Kind::Empty; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  bool is_infinite() const { return kind_ == Kind::Infinite; }

  /// Throws std::logic_error unless finite.
  std::uint64_t rank() const;
  /// nullopt for the uncounted sentinel; throws unless finite.
  std::optional<std::uint64_t> degree() const;

  bool operator==(const RankResult&) const = default;

 private:
  RankResult(Kind kind, std::uint64_t rank, std::optional<std::uint64_t> degree)
      : kind_(kind), rank_(rank), degree_(degree) {}

  Kind kind_;
  std::uint64_t rank_;
  std::optional<std::uint64_t> degree_;
};

/// Orders ranks only: Empty < Finite(r) by r < Infinite.
std::strong_ordering compare_rank(const RankResult& a, const RankResult& b);

std::ostream& operator<<(std::ostream& os, const RankResult& r);

}  // namespace famrank
