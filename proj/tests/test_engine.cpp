#include <gtest/gtest.h>

#include <random>

#include "famrank/engine.hpp"
#include "famrank/errors.hpp"
#include "famrank/verify.hpp"
#include "oracles.hpp"

using namespace famrank;
using famrank::testing::plain_point;
using famrank::testing::plain_region;

namespace {

const ExtNat kInf = ExtNat::infinity();

FamilySpec plain_family(unsigned unary, std::vector<Box> boxes, Restriction restriction = NoRestriction{}) {
  FamilySpec f{MonadicSignature{0, unary, 0}, {}, restriction};
  for (auto& b : boxes) f.regions.push_back(plain_region(std::move(b)));
  return f;
}

}  // namespace

TEST(Normalize, Examples) {
  const auto twice = plain_family(0, {{{1, 4}}, {{1, 4}}});
  EXPECT_EQ(normalize(twice).regions.size(), 1u);
  const auto overlap = normalize(plain_family(0, {{{0, 5}}, {{3, kInf}}}));
  // The zero point (the empty structure) is removed.
  ASSERT_EQ(overlap.regions.size(), 1u);
  EXPECT_EQ(overlap.regions[0].cells, (Box{{1, kInf}}));
  EXPECT_TRUE(is_empty(plain_family(1, {{{3, 2}, {0, kInf}}})));
  EXPECT_TRUE(normalize(plain_family(1, {{{3, 2}, {0, kInf}}})).regions.empty());
}

TEST(Normalize, Idempotent) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 100; ++t) {
    const auto sig = verify::random_signature(rng, 2, 1, 2);
    const auto f = verify::random_family(rng, sig);
    const auto once = normalize(f);
    EXPECT_EQ(normalize(once), once);
    EXPECT_TRUE(equivalent(once, f));
  }
}

TEST(PointRank, Examples) {
  const MonadicSignature k2{0, 2, 0};
  const auto full = full_family(k2);
  EXPECT_EQ(point_rank(plain_point({1, 0, 2, 0}), full), 0u);
  EXPECT_EQ(point_rank(plain_point({kInf, kInf, kInf, kInf}), full), 4u);
  const auto inf = full_family(k2, InfiniteModels{});
  EXPECT_EQ(point_rank(plain_point({kInf, 0, 3, 1}), inf), 0u);
  EXPECT_EQ(point_rank(plain_point({kInf, kInf, kInf, 1}), inf), 2u);
  const auto sized = full_family(k2, ExactSize{3});
  EXPECT_EQ(point_rank(plain_point({1, 1, 1, 0}), sized), 0u);
  EXPECT_THROW(point_rank(plain_point({0, 0, 0, 0}), full), std::invalid_argument);
  EXPECT_THROW(point_rank(plain_point({1, 1, 1, 1}), sized), std::invalid_argument);
}

TEST(PointRank, ClopenLawExhaustive) {
  for (unsigned k = 0; k <= 3; ++k) {
    const MonadicSignature sig{0, k, 0};
    const auto full = full_family(sig);
    const auto inf = full_family(sig, InfiniteModels{});
    const std::size_t cells = sig.cell_count();
    for (std::uint64_t mask = 0; mask < (1u << cells); ++mask) {
      std::vector<ExtNat> v(cells, 1);
      std::size_t s = 0;
      for (std::size_t c = 0; c < cells; ++c) {
        if ((mask >> c) & 1u) {
          v[c] = kInf;
          ++s;
        }
      }
      const auto p = plain_point(v);
      EXPECT_EQ(point_rank(p, full), s);
      EXPECT_EQ(point_rank(p, full), verify::oracle_point_rank(full, p));
      if (s >= 1) {
        EXPECT_EQ(point_rank(p, inf), s - 1);
      }
    }
  }
}

TEST(RsAndDegree, Examples) {
  EXPECT_EQ(rs_and_degree(full_family(MonadicSignature{1, 2, 0})), RankResult::finite(4, 2));
  EXPECT_EQ(rs_and_degree(full_family(MonadicSignature{0, 0, 4})), RankResult::finite(1, 15));
  EXPECT_EQ(rs_and_degree(plain_family(1, {{{2, 2}, {3, 3}}})), RankResult::finite(0, 1));
  EXPECT_EQ(rs_and_degree(full_family(MonadicSignature{0, 1, 0}, ExactSize{2})), RankResult::finite(0, 3));
  EXPECT_EQ(rs_and_degree(plain_family(1, {})), RankResult::empty());
  EXPECT_EQ(rs_and_degree(full_family(MonadicSignature{0, 1, 1})), RankResult::finite(2, 2));
  EXPECT_EQ(rs_and_degree(plain_family(1, {{{0, 2}, {0, kInf}}, {{5, kInf}, {0, 0}}})), RankResult::finite(1, 4));
}

TEST(RsAndDegree, AgreesWithScanOracle) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 300; ++t) {
    const auto sig = verify::random_signature(rng, 3, 1, 2);
    const auto f = verify::random_family(rng, sig);
    EXPECT_EQ(rs_and_degree(f), verify::oracle_rank_by_scan(f)) << "trial " << t;
  }
}

TEST(Minimality, Examples) {
  EXPECT_TRUE(is_alpha_minimal(plain_family(0, {{{3, 3}}}), 0));
  EXPECT_TRUE(is_alpha_minimal(full_family(MonadicSignature{0, 0, 1}), 1));
  EXPECT_FALSE(is_alpha_minimal(full_family(MonadicSignature{0, 1, 0}), 1));
  EXPECT_TRUE(is_alpha_minimal(full_family(MonadicSignature{0, 1, 0}), 2));
  EXPECT_TRUE(is_e_minimal_family(plain_family(2, {{{0, kInf}, {0, 0}, {0, 0}, {0, 0}}})));
  EXPECT_FALSE(is_e_minimal_family(full_family(MonadicSignature{1, 0, 0})));
  EXPECT_FALSE(is_e_minimal_family(plain_family(1, {{{0, 4}, {1, 2}}})));
}

namespace {

void expect_decomposition(const FamilySpec& f) {
  const auto whole = rs_and_degree(f);
  ASSERT_TRUE(whole.is_finite());
  const auto parts = decompose_alpha_minimal(f);
  ASSERT_EQ(parts.size(), *whole.degree());
  FamilySpec cover{f.signature, {}, f.restriction};
  for (std::size_t i = 0; i < parts.size(); ++i) {
    EXPECT_EQ(rs_and_degree(parts[i]), RankResult::finite(whole.rank(), 1));
    for (std::size_t j = i + 1; j < parts.size(); ++j) EXPECT_TRUE(is_empty(intersect(parts[i], parts[j])));
    cover = unite(cover, parts[i]);
  }
  EXPECT_TRUE(equivalent(cover, f));
}

}  // namespace

TEST(Decompose, Examples) {
  const auto zeroary = full_family(MonadicSignature{1, 0, 0});
  const auto parts = decompose_alpha_minimal(zeroary);
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_NE(parts[0].regions[0].discrete.zeroary, parts[1].regions[0].discrete.zeroary);
  expect_decomposition(zeroary);

  const auto minimal = plain_family(1, {{{0, kInf}, {2, 2}}});
  const auto single = decompose_alpha_minimal(minimal);
  ASSERT_EQ(single.size(), 1u);
  EXPECT_TRUE(equivalent(single[0], minimal));

  expect_decomposition(full_family(MonadicSignature{0, 0, 2}));
  EXPECT_THROW(decompose_alpha_minimal(plain_family(1, {})), std::invalid_argument);
}

TEST(Decompose, RandomFamilies) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 80; ++t) {
    const auto sig = verify::random_signature(rng, 2, 1, 2);
    const auto f = verify::random_family(rng, sig);
    if (is_empty(f)) continue;
    expect_decomposition(f);
  }
}

TEST(AccumulationPoints, Examples) {
  const auto seq = plain_family(1, {{{0, kInf}, {0, 0}}});
  const auto acc = accumulation_points(seq);
  EXPECT_EQ(acc.point_count(), ExtNat(1));
  EXPECT_TRUE(accumulation_points(plain_family(1, {{{0, 4}, {1, 2}}})).empty());
  const auto k1 = accumulation_points(full_family(MonadicSignature{0, 1, 0}));
  EXPECT_EQ(k1.floor, 1u);
  EXPECT_EQ(k1.point_count(), kInf);
  for (const auto& v : std::vector<std::vector<ExtNat>>{{kInf, 0}, {3, kInf}, {kInf, kInf}}) {
    bool found = false;
    for (const auto& r : k1.regions) found = found || r.contains(plain_point(v));
    EXPECT_TRUE(found);
  }
}

TEST(DerivativeChain, Decreasing) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 60; ++t) {
    const auto sig = verify::random_signature(rng, 2, 1, 1);
    const auto f = verify::random_family(rng, sig);
    auto stage = initial_stage(f);
    while (!stage.empty()) {
      const auto next = derive(stage);
      EXPECT_EQ(next.floor, stage.floor + 1);
      for (const auto& r : next.regions) {
        bool covered = false;
        for (const auto& s : stage.regions) {
          covered = covered || (s.discrete == r.discrete && subtract(r.cells, s.cells).empty());
        }
        EXPECT_TRUE(covered);
      }
      stage = next;
    }
  }
}

TEST(Monotonicity, SubfamilyRankBounded) {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 80; ++t) {
    const auto sig = verify::random_signature(rng, 2, 1, 2);
    auto f = verify::random_family(rng, sig);
    auto g = verify::random_family(rng, sig);
    g.restriction = f.restriction;
    const auto both = intersect(f, g);
    EXPECT_TRUE(compare_rank(rs_and_degree(both), rs_and_degree(f)) <= 0);
    EXPECT_TRUE(compare_rank(rs_and_degree(f), rs_and_degree(unite(f, g))) <= 0);
  }
}

TEST(CountPoints, Examples) {
  EXPECT_EQ(count_points(full_family(MonadicSignature{0, 1, 0}, ExactSize{2}), kInf), ExtNat(3));
  const auto constants = full_family(MonadicSignature{0, 0, 3});
  // Total size at most 3: sizes 1, 2, 3 over the five partitions.
  EXPECT_EQ(count_points(constants, 3), ExtNat(10));
  EXPECT_EQ(count_points(full_family(MonadicSignature{0, 0, 3}, ExactSize{3}), kInf), ExtNat(5));
  FamilySpec no_complement = constants;
  for (auto& r : no_complement.regions) {
    r.cells[0].hi = r.discrete.constants.block_count();
  }
  EXPECT_EQ(count_points(no_complement, 3), ExtNat(5));
  EXPECT_EQ(count_points(plain_family(1, {}), kInf), ExtNat(0));
  EXPECT_EQ(count_points(constants, kInf), kInf);
  EXPECT_EQ(count_points(full_family(MonadicSignature{0, 1, 0}, InfiniteModels{}), 10), ExtNat(0));
}

TEST(CountPoints, AgreesWithEnumeration) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 150; ++t) {
    const auto sig = verify::random_signature(rng, 2, 1, 2);
    const auto f = verify::random_family(rng, sig);
    for (std::uint64_t cap : {0u, 2u, 5u}) {
      const auto expected = verify::enumerate_finite_points(f, cap).size();
      EXPECT_EQ(count_points(f, cap), ExtNat(expected)) << "trial " << t << " cap " << cap;
    }
  }
}

TEST(ExactSize, ExpansionCaps) {
  EXPECT_THROW(normalize(full_family(MonadicSignature{0, 5, 0}, ExactSize{2})), ResourceLimit);
  EXPECT_THROW(normalize(full_family(MonadicSignature{0, 1, 0}, ExactSize{65})), ResourceLimit);
}
