#include "famrank/qe/eliminate.hpp"

#include <optional>
#include <string>

#include "famrank/engine.hpp"
#include "famrank/errors.hpp"

namespace famrank::qe {

namespace {

// What a variable or constant denotes under a type.
struct Element {
  bool named = false;      // a constant block
  std::uint32_t id = 0;    // block id, or anonymous-element id
  std::uint32_t cell = 0;

  bool operator==(const Element&) const = default;
};

struct Type {
  std::vector<std::pair<std::string, Element>> vars;
  std::vector<std::uint64_t> anonymous_per_cell;
  std::uint32_t anonymous = 0;
};

class Eliminator {
 public:
  Eliminator(const DiscreteData& discrete, const Box& space, std::size_t max_regions)
      : discrete_(discrete), space_(space), max_regions_(max_regions) {}

  BoxSet solve_sentence(const Formula& f) {
    Type type;
    type.anonymous_per_cell.assign(space_.size(), 0);
    return solve(f, type);
  }

 private:
  Box realizable(const Type& type) const {
    Box box = space_;
    for (std::size_t c = 0; c < box.size(); ++c) box[c].lo += type.anonymous_per_cell[c];
    return box;
  }

  BoxSet whole(const Type& type) const {
    Box b = realizable(type);
    if (box_empty(b)) return {};
    return {b};
  }

  BoxSet checked(BoxSet set) const {
    coalesce(set);
    if (set.size() > max_regions_) {
      throw ResourceLimit("quantifier elimination exceeded " + std::to_string(max_regions_) + " regions");
    }
    return set;
  }

  Element element(const Term& t, const Type& type) const {
    switch (t.kind) {
      case Term::Kind::Variable:
        for (auto it = type.vars.rbegin(); it != type.vars.rend(); ++it) {
          if (it->first == t.name) return it->second;
        }
        throw std::invalid_argument("unbound variable '" + t.name + "'");
      case Term::Kind::Constant: {
        const auto block = discrete_.constants.block_of[t.index - 1];
        return Element{true, block, discrete_.constants.block_cell[block]};
      }
      case Term::Kind::Apply:
        break;
    }
    throw UnsupportedFeature("function terms are outside the monadic fragment");
  }

  BoxSet truth(bool value, const Type& type) const { return value ? whole(type) : BoxSet{}; }

  BoxSet solve(const Formula& f, Type& type) {
    switch (f.kind) {
      case Formula::Kind::Zeroary:
        return truth(discrete_.zeroary[f.symbol - 1], type);
      case Formula::Kind::Unary:
        return truth((element(f.terms[0], type).cell >> (f.symbol - 1)) & 1u, type);
      case Formula::Kind::Equal:
        return truth(element(f.terms[0], type) == element(f.terms[1], type), type);
      case Formula::Kind::Binary:
        throw UnsupportedFeature("binary predicates are outside the monadic fragment");
      case Formula::Kind::Not:
        return checked(subtract(whole(type), solve(f.children[0], type)));
      case Formula::Kind::And: {
        auto a = solve(f.children[0], type);
        if (a.empty()) return a;
        return checked(intersect(a, solve(f.children[1], type)));
      }
      case Formula::Kind::Or:
        return checked(unite(solve(f.children[0], type), solve(f.children[1], type)));
      case Formula::Kind::Implies: {
        auto a = solve(f.children[0], type);
        return checked(unite(subtract(whole(type), a), solve(f.children[1], type)));
      }
      case Formula::Kind::Iff: {
        auto a = solve(f.children[0], type);
        auto b = solve(f.children[1], type);
        auto both = intersect(a, b);
        auto neither = subtract(whole(type), unite(a, b));
        return checked(unite(both, neither));
      }
      case Formula::Kind::Exists:
        return at_least(f.variable, f.children[0], f.threshold, false, type);
      case Formula::Kind::Forall:
        // forall x. phi  ==  not (exists x. not phi)
        return checked(subtract(whole(type), at_least(f.variable, f.children[0], 1, true, type)));
    }
    return {};
  }

  struct Piece {
    Box box;
    std::uint64_t singles = 0;
    std::vector<std::size_t> open_cells;
  };

  // Cardinality vectors where at least `threshold` elements x satisfy body
  // (or its negation).
  BoxSet at_least(const std::string& var, const Formula& body, std::uint64_t threshold, bool negated, Type& type) {
    const Box base_box = realizable(type);
    if (box_empty(base_box)) return {};

    auto solve_with = [&](const Element& e, bool fresh) {
      if (fresh) {
        ++type.anonymous_per_cell[e.cell];
        ++type.anonymous;
      }
      type.vars.emplace_back(var, e);
      BoxSet s = solve(body, type);
      if (negated) s = subtract(whole(type), s);
      type.vars.pop_back();
      if (fresh) {
        --type.anonymous_per_cell[e.cell];
        --type.anonymous;
      }
      return s;
    };

    std::vector<Piece> pieces{Piece{base_box, 0, {}}};
    auto refine = [&](const BoxSet& s, bool single, std::size_t cell) {
      if (s.empty()) return;
      std::vector<Piece> next;
      for (auto& piece : pieces) {
        const BoxSet here{piece.box};
        for (auto& box : intersect(here, s)) {
          Piece hit{std::move(box), piece.singles, piece.open_cells};
          if (single) {
            ++hit.singles;
          } else {
            hit.open_cells.push_back(cell);
          }
          next.push_back(std::move(hit));
        }
        for (auto& box : subtract(here, s)) next.push_back(Piece{std::move(box), piece.singles, piece.open_cells});
      }
      if (next.size() > max_regions_) {
        throw ResourceLimit("quantifier elimination exceeded " + std::to_string(max_regions_) + " regions");
      }
      pieces = std::move(next);
    };

    // x names a constant block.
    for (std::uint32_t b = 0; b < discrete_.constants.block_count(); ++b) {
      refine(solve_with(Element{true, b, discrete_.constants.block_cell[b]}, false), true, 0);
    }
    // x equals an anonymous element already bound.
    std::vector<Element> seen;
    for (const auto& [_, e] : type.vars) {
      if (e.named) continue;
      bool dup = false;
      for (const auto& s : seen) dup = dup || s == e;
      if (!dup) seen.push_back(e);
    }
    for (const auto& e : seen) refine(solve_with(e, false), true, 0);
    // x is a new anonymous element of some cell; all such x agree.
    for (std::uint32_t cell = 0; cell < space_.size(); ++cell) {
      refine(solve_with(Element{false, type.anonymous, cell}, true), false, cell);
    }

    BoxSet out;
    for (const auto& piece : pieces) {
      if (piece.singles >= threshold) {
        out.push_back(piece.box);
        continue;
      }
      threshold_boxes(piece.box, piece.open_cells, 0, threshold - piece.singles, type, out);
    }
    return checked(std::move(out));
  }

  // Boxes inside `box` where the anonymous elements still available in the
  // cells open_cells[i..] number at least `need`.
  void threshold_boxes(Box box, const std::vector<std::size_t>& open_cells, std::size_t i, std::uint64_t need,
                       const Type& type, BoxSet& out) const {
    if (need == 0) {
      out.push_back(std::move(box));
      return;
    }
    if (i == open_cells.size()) return;
    const auto cell = open_cells[i];
    const std::uint64_t base = space_[cell].lo + type.anonymous_per_cell[cell];
    const Interval range = box[cell];
    // Enough in this cell alone.
    Box many = box;
    many[cell].lo = std::max(range.lo, base + need);
    if (!many[cell].empty()) out.push_back(std::move(many));
    // Exactly `avail` < need here; the rest must come from later cells.
    for (std::uint64_t v = range.lo; ExtNat(v) <= range.hi && v < base + need; ++v) {
      Box exact = box;
      exact[cell] = Interval{v, ExtNat(v)};
      threshold_boxes(std::move(exact), open_cells, i + 1, need - (v - base), type, out);
    }
  }

  const DiscreteData& discrete_;
  Box space_;
  std::size_t max_regions_;
};

void check_symbols(const Formula& f, const MonadicSignature& sig) {
  const auto use = symbols_used(f);
  if (use.binary > 0) throw UnsupportedFeature("binary predicates are outside the monadic fragment");
  if (use.functions > 0) throw UnsupportedFeature("function symbols are outside the monadic fragment");
  if (use.zeroary > sig.zeroary) throw UnknownSymbol("Q" + std::to_string(use.zeroary) + " is not declared");
  if (use.unary > sig.unary) throw UnknownSymbol("P" + std::to_string(use.unary) + " is not declared");
  if (use.constants > sig.constants) throw UnknownSymbol("c" + std::to_string(use.constants) + " is not declared");
}

}  // namespace

FamilySpec eliminate(const Formula& sentence, const MonadicSignature& sig, const EliminationOptions& options) {
  check_symbols(sentence, sig);
  const FamilySpec space = full_family(sig);
  FamilySpec out{sig, {}, NoRestriction{}};
  for (const auto& region : space.regions) {
    Eliminator elim(region.discrete, region.cells, options.max_regions);
    for (auto& box : elim.solve_sentence(sentence)) out.regions.push_back(Region{region.discrete, std::move(box)});
    if (out.regions.size() > options.max_regions) {
      throw ResourceLimit("quantifier elimination exceeded " + std::to_string(options.max_regions) + " regions");
    }
  }
  return normalize(out);
}

}  // namespace famrank::qe
