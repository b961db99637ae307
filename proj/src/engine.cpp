#include "famrank/engine.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "famrank/combinatorics.hpp"
#include "famrank/errors.hpp"

namespace famrank {

namespace {

constexpr std::uint64_t kMaxFullFamilyRegions = 2'000'000;
constexpr std::size_t kMaxGroupBoxes = 1'000'000;
constexpr std::size_t kMaxListedPoints = 1'000'000;

using Groups = std::map<DiscreteData, BoxSet>;

bool is_infinite_models(const Restriction& r) { return std::holds_alternative<InfiniteModels>(r); }

const ExactSize* exact_size(const Restriction& r) { return std::get_if<ExactSize>(&r); }

std::uint64_t restriction_floor(const Restriction& r) { return is_infinite_models(r) ? 1 : 0; }

void check_shape(const MonadicSignature& sig, const Region& r) {
  r.discrete.validate(sig);
  if (r.cells.size() != sig.cell_count()) throw SignatureMismatch("region has wrong number of cells");
}

// Calls visit(vector) for every integer vector inside `box` (all bounded
// coordinates clipped at `clip`) whose coordinate sum equals `target`.
template <class Visit>
void for_each_with_sum(const Box& box, std::uint64_t target, Visit&& visit) {
  std::vector<ExtNat> v(box.size());
  auto go = [&](auto&& self, std::size_t d, std::uint64_t remaining) -> void {
    if (d == box.size()) {
      if (remaining == 0) visit(v);
      return;
    }
    const std::uint64_t hi =
        box[d].hi.is_infinite() ? remaining : std::min<std::uint64_t>(box[d].hi.value(), remaining);
    for (std::uint64_t x = box[d].lo; x <= hi; ++x) {
      v[d] = x;
      self(self, d + 1, remaining - x);
    }
  };
  go(go, 0, target);
}

// Number of integer vectors in box (each coordinate finite) with sum in
// [0, cap] (exact=false) or equal to cap (exact=true).
std::uint64_t count_with_sum(const Box& box, std::uint64_t cap, bool exact) {
  std::vector<std::uint64_t> ways(cap + 1, 0);
  ways[0] = 1;
  for (const auto& iv : box) {
    std::vector<std::uint64_t> next(cap + 1, 0);
    for (std::uint64_t s = 0; s <= cap; ++s) {
      if (ways[s] == 0) continue;
      const std::uint64_t hi = iv.hi.is_infinite() ? cap : std::min<std::uint64_t>(iv.hi.value(), cap);
      for (std::uint64_t x = iv.lo; x <= hi && s + x <= cap; ++x) {
        next[s + x] = checked_add(next[s + x], ways[s]);
      }
    }
    ways = std::move(next);
  }
  if (exact) return ways[cap];
  std::uint64_t total = 0;
  for (auto w : ways) total = checked_add(total, w);
  return total;
}

ExtNat bounded_product(const Box& box) {
  ExtNat n(1);
  for (const auto& iv : box) {
    if (!iv.unbounded()) n = n * iv.size();
  }
  return n;
}

Groups group_regions(const FamilySpec& f) {
  Groups groups;
  const auto cells = f.signature.cell_count();
  for (const auto& region : f.regions) {
    check_shape(f.signature, region);
    Box box = region.cells;
    const auto blocks = region.discrete.constants.blocks_per_cell(cells);
    for (std::size_t c = 0; c < cells; ++c) box[c].lo = std::max(box[c].lo, blocks[c]);
    if (box_empty(box)) continue;
    auto& set = groups[region.discrete];
    set = unite(set, BoxSet{box});
    if (set.size() > kMaxGroupBoxes) throw ResourceLimit("region set too large during normalization");
  }
  return groups;
}

FamilySpec normalize_impl(const FamilySpec& f, bool expand_exact) {
  Groups groups = group_regions(f);
  const auto cells = f.signature.cell_count();
  const ExactSize* exact = exact_size(f.restriction);
  if (exact && expand_exact && (cells > kMaxExpandedCells || exact->size > kMaxExpandedSize)) {
    throw ResourceLimit("exact-size expansion needs at most " + std::to_string(kMaxExpandedCells) +
                        " cells and size at most " + std::to_string(kMaxExpandedSize));
  }
  FamilySpec out{f.signature, {}, f.restriction};
  const Box zero_point(cells, Interval{0, ExtNat(0)});
  for (auto& [discrete, set] : groups) {
    if (f.signature.constants == 0) set = subtract(set, BoxSet{zero_point});
    if (exact && expand_exact) {
      BoxSet points;
      for (const auto& box : set) {
        for_each_with_sum(box, exact->size, [&](const std::vector<ExtNat>& v) {
          Box p(cells);
          for (std::size_t c = 0; c < cells; ++c) p[c] = Interval{v[c].value(), v[c]};
          points.push_back(std::move(p));
        });
      }
      set = std::move(points);
      std::sort(set.begin(), set.end());
    } else {
      if (is_infinite_models(f.restriction)) {
        std::erase_if(set, [](const Box& b) { return unbounded_count(b) == 0; });
      }
      coalesce(set);
    }
    for (auto& box : set) out.regions.push_back(Region{discrete, std::move(box)});
  }
  return out;
}

void require_compatible(const FamilySpec& f, const FamilySpec& g) {
  if (f.signature != g.signature) throw SignatureMismatch("families over different signatures");
  if (f.restriction != g.restriction) throw std::invalid_argument("families with different restrictions");
}

Groups groups_of_normalized(const FamilySpec& f) {
  Groups groups;
  for (const auto& r : f.regions) groups[r.discrete].push_back(r.cells);
  return groups;
}

FamilySpec from_groups(const FamilySpec& shape, const Groups& groups) {
  FamilySpec out{shape.signature, {}, shape.restriction};
  for (const auto& [discrete, set] : groups) {
    for (const auto& box : set) out.regions.push_back(Region{discrete, box});
  }
  return normalize_impl(out, false);
}

}  // namespace

std::uint64_t full_family_region_count(const MonadicSignature& sig) {
  std::uint64_t configs = 0;
  const std::uint64_t cells = sig.cell_count();
  for (unsigned j = 0; j <= sig.constants; ++j) {
    configs = checked_add(configs, checked_mul(stirling2(sig.constants, j), checked_pow(cells, j)));
  }
  return checked_mul(checked_pow(2, sig.zeroary), configs);
}

FamilySpec full_family(const MonadicSignature& sig, Restriction restriction) {
  if (full_family_region_count(sig) > kMaxFullFamilyRegions) {
    throw ResourceLimit("full family has too many discrete configurations");
  }
  const auto cells = sig.cell_count();
  FamilySpec f{sig, {}, restriction};
  std::vector<ConstantConfig> configs;
  for_each_set_partition(sig.constants, [&](const std::vector<std::uint32_t>& rgs, std::uint32_t blocks) {
    std::vector<std::uint32_t> assignment(blocks, 0);
    while (true) {
      configs.push_back(ConstantConfig{rgs, assignment});
      std::size_t i = 0;
      while (i < blocks && ++assignment[i] == cells) assignment[i++] = 0;
      if (i == blocks) break;
    }
  });
  const std::uint64_t valuations = std::uint64_t{1} << sig.zeroary;
  for (std::uint64_t bits = 0; bits < valuations; ++bits) {
    std::vector<bool> zeroary(sig.zeroary);
    for (unsigned j = 0; j < sig.zeroary; ++j) zeroary[j] = (bits >> j) & 1u;
    for (const auto& config : configs) {
      const auto blocks = config.blocks_per_cell(cells);
      Box box(cells);
      for (std::size_t c = 0; c < cells; ++c) box[c] = Interval{blocks[c], ExtNat::infinity()};
      f.regions.push_back(Region{DiscreteData{zeroary, config}, std::move(box)});
    }
  }
  return f;
}

FamilySpec normalize(const FamilySpec& f) { return normalize_impl(f, true); }

bool is_empty(const FamilySpec& f) { return normalize(f).regions.empty(); }

FamilySpec intersect(const FamilySpec& f, const FamilySpec& g) {
  require_compatible(f, g);
  const auto a = groups_of_normalized(normalize_impl(f, false));
  const auto b = groups_of_normalized(normalize_impl(g, false));
  Groups out;
  for (const auto& [discrete, set] : a) {
    if (auto it = b.find(discrete); it != b.end()) out[discrete] = intersect(set, it->second);
  }
  return from_groups(f, out);
}

FamilySpec difference(const FamilySpec& f, const FamilySpec& g) {
  require_compatible(f, g);
  auto a = groups_of_normalized(normalize_impl(f, false));
  const auto b = groups_of_normalized(normalize_impl(g, false));
  for (auto& [discrete, set] : a) {
    if (auto it = b.find(discrete); it != b.end()) set = subtract(set, it->second);
  }
  return from_groups(f, a);
}

FamilySpec unite(const FamilySpec& f, const FamilySpec& g) {
  require_compatible(f, g);
  FamilySpec out = f;
  out.regions.insert(out.regions.end(), g.regions.begin(), g.regions.end());
  return normalize_impl(out, false);
}

bool equivalent(const FamilySpec& f, const FamilySpec& g) {
  return is_empty(difference(f, g)) && is_empty(difference(g, f));
}

std::uint64_t point_rank(const TheoryPoint& p, const FamilySpec& f) {
  p.validate(f.signature);
  if (!contains(f, p)) throw std::invalid_argument("point is not a member of the family");
  if (exact_size(f.restriction)) return 0;
  // A clopen family is locally the whole space, where a point with s infinite
  // cells has CB rank s. Inside the infinite-model subspace the finite
  // neighbours drop out and every rank shifts down by one.
  return p.infinite_cell_count() - restriction_floor(f.restriction);
}

ExtNat DerivativeStage::point_count() const {
  ExtNat total(0);
  for (const auto& r : regions) {
    const auto u = unbounded_count(r.cells);
    if (u < floor) continue;
    if (u > floor) return ExtNat::infinity();
    total += bounded_product(r.cells);
  }
  return total;
}

DerivativeStage initial_stage(const FamilySpec& f) {
  DerivativeStage stage;
  stage.floor = restriction_floor(f.restriction);
  for (auto& r : normalize(f).regions) {
    if (unbounded_count(r.cells) >= stage.floor) stage.regions.push_back(std::move(r));
  }
  return stage;
}

DerivativeStage derive(const DerivativeStage& stage) {
  // Inside one region (a clopen box), a point with exactly `floor` infinite
  // cells is isolated in the stage: pinning its finite cells and pushing the
  // infinite ones to "at least N" leaves only points with fewer infinite
  // cells. A point with more infinite cells is a limit of points that trade
  // one infinite cell for a large finite value.
  DerivativeStage next;
  next.floor = stage.floor + 1;
  for (const auto& r : stage.regions) {
    if (unbounded_count(r.cells) >= next.floor) next.regions.push_back(r);
  }
  return next;
}

namespace {

struct StageRun {
  DerivativeStage last;
  std::uint64_t rank = 0;
  bool empty = true;
};

StageRun run_stages(const FamilySpec& f) {
  StageRun run;
  DerivativeStage stage = initial_stage(f);
  if (stage.empty()) return run;
  run.empty = false;
  const std::uint64_t start = stage.floor;
  const std::uint64_t limit = f.signature.cell_count() + 1;
  for (std::uint64_t steps = 0;; ++steps) {
    if (steps > limit) {
      throw std::logic_error("derivative iteration did not terminate; finite monadic families have finite rank");
    }
    DerivativeStage next = derive(stage);
    if (next.empty()) break;
    stage = std::move(next);
  }
  run.rank = stage.floor - start;
  run.last = std::move(stage);
  return run;
}

}  // namespace

RankResult rs_and_degree(const FamilySpec& f) {
  const auto run = run_stages(f);
  if (run.empty) return RankResult::empty();
  const ExtNat degree = run.last.point_count();
  if (degree.is_infinite()) throw std::logic_error("last derivative stage is infinite");
  return RankResult::finite(run.rank, degree.value());
}

std::vector<TheoryPoint> maximal_rank_points(const FamilySpec& f) {
  const auto run = run_stages(f);
  std::vector<TheoryPoint> out;
  if (run.empty) return out;
  for (const auto& r : run.last.regions) {
    TheoryPoint p{r.discrete, std::vector<ExtNat>(r.cells.size())};
    auto go = [&](auto&& self, std::size_t d) -> void {
      if (d == r.cells.size()) {
        if (out.size() >= kMaxListedPoints) throw ResourceLimit("too many maximal-rank points to list");
        out.push_back(p);
        return;
      }
      const auto& iv = r.cells[d];
      if (iv.unbounded()) {
        p.cells[d] = ExtNat::infinity();
        self(self, d + 1);
        return;
      }
      for (std::uint64_t x = iv.lo; x <= iv.hi.value(); ++x) {
        p.cells[d] = x;
        self(self, d + 1);
      }
    };
    go(go, 0);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_alpha_minimal(const FamilySpec& f, std::uint64_t alpha) {
  return rs_and_degree(f) == RankResult::finite(alpha, 1);
}

bool is_e_minimal_family(const FamilySpec& f) { return is_alpha_minimal(f, 1); }

std::vector<FamilySpec> decompose_alpha_minimal(const FamilySpec& f) {
  const FamilySpec g = normalize(f);
  const auto points = maximal_rank_points(g);
  if (points.empty()) throw std::invalid_argument("cannot decompose the empty family");
  if (points.size() == 1) return {g};

  // Every finite endpoint lies below `far`, so "cell >= far" separates the
  // infinite cells of one maximal point from the finite cells of another.
  std::uint64_t far = 0;
  for (const auto& r : g.regions) {
    for (const auto& iv : r.cells) {
      far = std::max(far, iv.lo);
      if (iv.hi.is_finite()) far = std::max(far, iv.hi.value());
    }
  }
  far += 1;

  // A neighbourhood meets only regions with its own discrete data.
  std::map<DiscreteData, BoxSet> by_discrete;
  for (const auto& r : g.regions) by_discrete[r.discrete].push_back(r.cells);

  std::vector<FamilySpec> parts(points.size(), FamilySpec{g.signature, {}, g.restriction});
  std::map<DiscreteData, BoxSet> rest = by_discrete;
  for (std::size_t i = 1; i < points.size(); ++i) {
    const auto& p = points[i];
    Box box(p.cells.size());
    for (std::size_t c = 0; c < p.cells.size(); ++c) {
      box[c] = p.cells[c].is_infinite() ? Interval{far, ExtNat::infinity()} : Interval{p.cells[c].value(), p.cells[c]};
    }
    for (const auto& cells : intersect(by_discrete.at(p.discrete), BoxSet{box})) {
      parts[i].regions.push_back(Region{p.discrete, cells});
    }
    auto& remaining = rest.at(p.discrete);
    remaining = subtract(remaining, BoxSet{box});
  }
  for (const auto& [discrete, boxes] : rest) {
    for (const auto& cells : boxes) parts[0].regions.push_back(Region{discrete, cells});
  }
  for (auto& part : parts) part = normalize(part);
  return parts;
}

DerivativeStage accumulation_points(const FamilySpec& f) { return derive(initial_stage(f)); }

ExtNat count_points(const FamilySpec& f, ExtNat size_cap) {
  const FamilySpec g = normalize_impl(f, false);
  if (const auto* exact = exact_size(g.restriction)) {
    if (size_cap < ExtNat(exact->size)) return ExtNat(0);
    std::uint64_t total = 0;
    for (const auto& r : g.regions) total = checked_add(total, count_with_sum(r.cells, exact->size, true));
    return total;
  }
  if (is_infinite_models(g.restriction)) {
    if (size_cap.is_finite()) return ExtNat(0);
    DerivativeStage stage{g.regions, 1};
    return stage.point_count();
  }
  ExtNat total(0);
  for (const auto& r : g.regions) {
    if (size_cap.is_infinite()) {
      ExtNat n(1);
      for (const auto& iv : r.cells) n = n * iv.size();
      total += n;
    } else {
      total += count_with_sum(r.cells, size_cap.value(), false);
    }
  }
  return total;
}

}  // namespace famrank
