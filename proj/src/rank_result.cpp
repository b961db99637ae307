#include "famrank/rank_result.hpp"

#include <stdexcept>

namespace famrank {

RankResult RankResult::finite(std::uint64_t rank, std::uint64_t degree) {
  if (degree == 0) throw std::invalid_argument("degree of a nonempty family is positive");
  return RankResult(Kind::Finite, rank, degree);
}

std::uint64_t RankResult::rank() const {
  if (kind_ != Kind::Finite) throw std::logic_error("rank() of a non-finite RankResult");
  return rank_;
}

std::optional<std::uint64_t> RankResult::degree() const {
  if (kind_ != Kind::Finite) throw std::logic_error("degree() of a non-finite RankResult");
  return degree_;
}

std::strong_ordering compare_rank(const RankResult& a, const RankResult& b) {
  if (a.kind() != b.kind()) return static_cast<int>(a.kind()) <=> static_cast<int>(b.kind());
  if (a.is_finite()) return a.rank() <=> b.rank();
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const RankResult& r) {
  switch (r.kind()) {
    case RankResult::Kind::Empty:
      return os << "Empty";
    case RankResult::Kind::Infinite:
      return os << "Infinite";
    case RankResult::Kind::Finite:
      os << "Finite(" << r.rank() << ", ";
      if (auto d = r.degree()) {
        os << *d;
      } else {
        os << "uncounted";
      }
      return os << ")";
  }
  return os;
}

}  // namespace famrank
