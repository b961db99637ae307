#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace famrank::testing {

std::vector<std::vector<std::vector<unsigned>>> set_partitions(unsigned n) {
  std::vector<std::vector<std::vector<unsigned>>> current{{}};
  for (unsigned e = 0; e < n; ++e) {
    std::vector<std::vector<std::vector<unsigned>>> next;
    for (const auto& partition : current) {
      for (std::size_t b = 0; b < partition.size(); ++b) {
        auto grown = partition;
        grown[b].push_back(e);
        next.push_back(std::move(grown));
      }
      auto fresh = partition;
      fresh.push_back({e});
      next.push_back(std::move(fresh));
    }
    current = std::move(next);
  }
  return current;
}

std::uint64_t isomorphism_classes(const MonadicSignature& sig, unsigned n) {
  const unsigned cells = 1u << sig.unary;
  std::vector<unsigned> perm(n);
  std::set<std::vector<unsigned>> classes;
  std::vector<unsigned> colour(n, 0);
  std::vector<unsigned> constant(sig.constants, 0);

  // Encoding: element colours, then constant interpretations.
  auto canonical = [&] {
    std::vector<unsigned> best;
    std::iota(perm.begin(), perm.end(), 0u);
    do {
      std::vector<unsigned> code(n + sig.constants);
      for (unsigned e = 0; e < n; ++e) code[perm[e]] = colour[e];
      for (unsigned c = 0; c < sig.constants; ++c) code[n + c] = perm[constant[c]];
      if (best.empty() || code < best) best = std::move(code);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
  };

  auto constants_loop = [&](auto&& self, unsigned c) -> void {
    if (c == sig.constants) {
      classes.insert(canonical());
      return;
    }
    for (unsigned e = 0; e < n; ++e) {
      constant[c] = e;
      self(self, c + 1);
    }
  };
  auto colour_loop = [&](auto&& self, unsigned e) -> void {
    if (e == n) {
      constants_loop(constants_loop, 0);
      return;
    }
    for (unsigned k = 0; k < cells; ++k) {
      colour[e] = k;
      self(self, e + 1);
    }
  };
  colour_loop(colour_loop, 0);
  // 0-ary predicates are independent of the universe.
  return static_cast<std::uint64_t>(classes.size()) << sig.zeroary;
}

TheoryPoint plain_point(std::vector<ExtNat> cells) { return TheoryPoint{DiscreteData{}, std::move(cells)}; }

Region plain_region(Box cells) { return Region{DiscreteData{}, std::move(cells)}; }

}  // namespace famrank::testing
