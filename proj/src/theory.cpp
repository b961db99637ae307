#include "famrank/theory.hpp"

#include <algorithm>
#include <numeric>

#include "famrank/errors.hpp"

namespace famrank {

std::vector<std::uint64_t> ConstantConfig::blocks_per_cell(std::size_t cells) const {
  std::vector<std::uint64_t> out(cells, 0);
  for (auto cell : block_cell) {
    if (cell >= cells) throw SignatureMismatch("constant block assigned to a nonexistent cell");
    ++out[cell];
  }
  return out;
}

void DiscreteData::validate(const MonadicSignature& sig) const {
  if (zeroary.size() != sig.zeroary) throw SignatureMismatch("zeroary valuation has wrong length");
  if (constants.block_of.size() != sig.constants) throw SignatureMismatch("constant partition has wrong length");
  std::uint32_t next = 0;
  for (auto b : constants.block_of) {
    if (b > next) throw SignatureMismatch("constant partition is not in restricted growth form");
    if (b == next) ++next;
  }
  if (constants.block_cell.size() != next) throw SignatureMismatch("block-to-cell map has wrong length");
  const auto cells = sig.cell_count();
  for (auto c : constants.block_cell) {
    if (c >= cells) throw SignatureMismatch("constant block assigned to a nonexistent cell");
  }
}

void TheoryPoint::validate(const MonadicSignature& sig) const {
  discrete.validate(sig);
  if (cells.size() != sig.cell_count()) throw SignatureMismatch("cell vector has wrong length");
  const auto blocks = discrete.constants.blocks_per_cell(cells.size());
  for (std::size_t c = 0; c < cells.size(); ++c) {
    if (cells[c] < ExtNat(blocks[c])) throw SignatureMismatch("cell smaller than the constants it holds");
  }
  if (total_size() == ExtNat(0)) throw SignatureMismatch("structures are nonempty");
}

ExtNat TheoryPoint::total_size() const {
  return std::accumulate(cells.begin(), cells.end(), ExtNat(0));
}

std::size_t TheoryPoint::infinite_cell_count() const {
  return static_cast<std::size_t>(
      std::count_if(cells.begin(), cells.end(), [](const ExtNat& v) { return v.is_infinite(); }));
}

ExtNat Interval::size() const {
  if (hi.is_infinite()) return ExtNat::infinity();
  return ExtNat(hi.value() - lo + 1);
}

std::optional<Box> intersect(const Box& a, const Box& b) {
  Box out(a.size());
  for (std::size_t d = 0; d < a.size(); ++d) {
    out[d].lo = std::max(a[d].lo, b[d].lo);
    out[d].hi = std::min(a[d].hi, b[d].hi);
    if (out[d].empty()) return std::nullopt;
  }
  return out;
}

std::vector<Box> subtract(const Box& a, const Box& b) {
  if (!intersect(a, b)) return {a};
  std::vector<Box> out;
  Box rest = a;
  for (std::size_t d = 0; d < a.size(); ++d) {
    Interval& r = rest[d];
    const Interval& cut = b[d];
    if (r.lo < cut.lo) {
      Box piece = rest;
      piece[d] = Interval{r.lo, ExtNat(cut.lo - 1)};
      out.push_back(std::move(piece));
      r.lo = cut.lo;
    }
    if (cut.hi < r.hi) {
      Box piece = rest;
      piece[d] = Interval{cut.hi.value() + 1, r.hi};
      out.push_back(std::move(piece));
      r.hi = cut.hi;
    }
  }
  return out;
}

bool box_empty(const Box& b) {
  return std::any_of(b.begin(), b.end(), [](const Interval& i) { return i.empty(); });
}

bool box_contains(const Box& b, const std::vector<ExtNat>& v) {
  if (b.size() != v.size()) return false;
  for (std::size_t d = 0; d < b.size(); ++d) {
    if (!b[d].contains(v[d])) return false;
  }
  return true;
}

std::size_t unbounded_count(const Box& b) {
  return static_cast<std::size_t>(std::count_if(b.begin(), b.end(), [](const Interval& i) { return i.unbounded(); }));
}

BoxSet intersect(const BoxSet& a, const BoxSet& b) {
  BoxSet out;
  for (const auto& x : a) {
    for (const auto& y : b) {
      if (auto z = intersect(x, y)) out.push_back(std::move(*z));
    }
  }
  return out;
}

BoxSet subtract(const BoxSet& a, const BoxSet& b) {
  BoxSet out;
  for (const auto& x : a) {
    BoxSet pieces{x};
    for (const auto& y : b) {
      BoxSet next;
      for (const auto& p : pieces) {
        auto cut = subtract(p, y);
        next.insert(next.end(), std::make_move_iterator(cut.begin()), std::make_move_iterator(cut.end()));
      }
      pieces = std::move(next);
      if (pieces.empty()) break;
    }
    out.insert(out.end(), std::make_move_iterator(pieces.begin()), std::make_move_iterator(pieces.end()));
  }
  return out;
}

BoxSet unite(const BoxSet& a, const BoxSet& b) {
  BoxSet out = a;
  auto extra = subtract(b, a);
  out.insert(out.end(), std::make_move_iterator(extra.begin()), std::make_move_iterator(extra.end()));
  return out;
}

namespace {

// Lexicographic comparison of two boxes ignoring dimension `skip`.
std::strong_ordering compare_except(const Box& a, const Box& b, std::size_t skip) {
  for (std::size_t d = 0; d < a.size(); ++d) {
    if (d == skip) continue;
    if (auto c = a[d] <=> b[d]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

bool merge_along(BoxSet& set, std::size_t dim) {
  std::sort(set.begin(), set.end(), [dim](const Box& a, const Box& b) {
    if (auto c = compare_except(a, b, dim); c != 0) return c < 0;
    return a[dim].lo < b[dim].lo;
  });
  bool changed = false;
  BoxSet out;
  out.reserve(set.size());
  for (auto& box : set) {
    if (!out.empty()) {
      Box& last = out.back();
      if (last[dim].hi.is_finite() && last[dim].hi.value() + 1 == box[dim].lo &&
          compare_except(last, box, dim) == 0) {
        last[dim].hi = box[dim].hi;
        changed = true;
        continue;
      }
    }
    out.push_back(std::move(box));
  }
  set = std::move(out);
  return changed;
}

}  // namespace

void coalesce(BoxSet& set) {
  set.erase(std::remove_if(set.begin(), set.end(), [](const Box& b) { return box_empty(b); }), set.end());
  if (set.size() > 1) {
    const std::size_t dims = set.front().size();
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t d = 0; d < dims; ++d) changed = merge_along(set, d) || changed;
    }
  }
  std::sort(set.begin(), set.end());
}

bool Region::contains(const TheoryPoint& p) const {
  return discrete == p.discrete && box_contains(cells, p.cells);
}

bool point_in_region(const TheoryPoint& p, const Region& r) {
  if (p.cells.size() != r.cells.size() || p.discrete.zeroary.size() != r.discrete.zeroary.size() ||
      p.discrete.constants.block_of.size() != r.discrete.constants.block_of.size()) {
    throw SignatureMismatch("point and region are over different signatures");
  }
  return r.contains(p);
}

bool contains(const FamilySpec& f, const TheoryPoint& p) {
  const bool restricted_ok = std::visit(
      [&p](const auto& r) {
        using R = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<R, InfiniteModels>) {
          return p.infinite_cell_count() > 0;
        } else if constexpr (std::is_same_v<R, ExactSize>) {
          return p.total_size() == ExtNat(r.size);
        } else {
          return true;
        }
      },
      f.restriction);
  if (!restricted_ok || p.total_size() == ExtNat(0)) return false;
  const auto blocks = p.discrete.constants.blocks_per_cell(p.cells.size());
  for (std::size_t c = 0; c < p.cells.size(); ++c) {
    if (p.cells[c] < ExtNat(blocks[c])) return false;
  }
  return std::any_of(f.regions.begin(), f.regions.end(), [&p](const Region& r) { return point_in_region(p, r); });
}

}  // namespace famrank
