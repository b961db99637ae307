#include <gtest/gtest.h>

#include "famrank/classifier.hpp"
#include "famrank/combinatorics.hpp"
#include "famrank/engine.hpp"
#include "oracles.hpp"

using namespace famrank;

namespace {

const ExtNat kInf = ExtNat::infinity();

Signature monadic(ExtNat zeroary, ExtNat unary, ExtNat constants) {
  Signature sig;
  sig.zeroary = zeroary;
  sig.unary = unary;
  sig.constants = constants;
  return sig;
}

Signature with_pred(unsigned arity, ExtNat count) {
  Signature sig;
  sig.predicates[arity] = count;
  return sig;
}

Signature with_func(unsigned arity, ExtNat count) {
  Signature sig;
  sig.functions[arity] = count;
  return sig;
}

}  // namespace

TEST(EMinimal, FullFamily) {
  EXPECT_TRUE(is_full_family_e_minimal(Signature{}));
  EXPECT_TRUE(is_full_family_e_minimal(monadic(0, 0, 1)));
  EXPECT_FALSE(is_full_family_e_minimal(monadic(0, 1, 0)));
  EXPECT_FALSE(is_full_family_e_minimal(monadic(0, 0, 2)));
  EXPECT_FALSE(is_full_family_e_minimal(monadic(1, 0, 0)));
  EXPECT_FALSE(is_full_family_e_minimal(with_pred(2, 1)));
  EXPECT_FALSE(is_full_family_e_minimal(with_func(1, 1)));
}

TEST(EMinimal, CoherentWithClassification) {
  for (unsigned m = 0; m <= 2; ++m) {
    for (unsigned k = 0; k <= 2; ++k) {
      for (unsigned n = 0; n <= 3; ++n) {
        const auto sig = monadic(m, k, n);
        EXPECT_EQ(is_full_family_e_minimal(sig), classify_full_family(sig) == RankResult::finite(1, 1))
            << m << k << n;
      }
    }
  }
}

TEST(ClassifyFull, PaperExamples) {
  EXPECT_EQ(classify_full_family(monadic(3, 0, 0)), RankResult::finite(1, 8));
  EXPECT_EQ(classify_full_family(monadic(1, 2, 0)), RankResult::finite(4, 2));
  EXPECT_EQ(classify_full_family(monadic(0, 0, 3)), RankResult::finite(1, 5));
  EXPECT_EQ(classify_full_family(monadic(1, 1, 2)), RankResult::finite(2, 12));
  EXPECT_EQ(classify_full_family(Signature{}), RankResult::finite(1, 1));
  EXPECT_EQ(classify_full_family(monadic(0, 0, 1)), RankResult::finite(1, 1));
}

TEST(ClassifyFull, Infinite) {
  EXPECT_TRUE(classify_full_family(with_pred(2, 1)).is_infinite());
  EXPECT_TRUE(classify_full_family(with_pred(7, 2)).is_infinite());
  EXPECT_TRUE(classify_full_family(with_func(1, 1)).is_infinite());
  EXPECT_TRUE(classify_full_family(monadic(kInf, 0, 0)).is_infinite());
  EXPECT_TRUE(classify_full_family(monadic(0, kInf, 0)).is_infinite());
  EXPECT_TRUE(classify_full_family(monadic(0, 0, kInf)).is_infinite());
}

TEST(ClassifyFull, ClosedFormAgreesWithEngineFamily) {
  for (unsigned k = 0; k <= 3; ++k) {
    for (unsigned m = 0; m <= 2; ++m) {
      for (unsigned n = 0; n <= 2; ++n) {
        const MonadicSignature sig{m, k, n};
        const auto engine = rs_and_degree(full_family(sig));
        EXPECT_EQ(engine, classify_full_family(sig.to_signature()));
        EXPECT_EQ(engine, RankResult::finite(1u << k, full_family_degree_closed_form(sig)));
      }
    }
  }
}

TEST(ClassifyFull, LargeSignaturesUseClosedForm) {
  // 2^6 cells is beyond the engine route.
  const auto r = classify_full_family(monadic(2, 6, 1));
  EXPECT_EQ(r, RankResult::finite(64, 4 * 64));
  EXPECT_THROW(classify_full_family(monadic(0, 0, 200)), std::overflow_error);
}

TEST(ClassifySize, Examples) {
  EXPECT_EQ(classify_size_n_family(monadic(0, 1, 0), 2), RankResult::finite(0, 3));
  EXPECT_TRUE(classify_size_n_family(monadic(0, kInf, 0), 2).is_infinite());
  const auto one = classify_size_n_family(monadic(0, 0, kInf), 1);
  ASSERT_TRUE(one.is_finite());
  EXPECT_EQ(one.rank(), 0u);
  EXPECT_EQ(one, RankResult::finite(0, 1));
  EXPECT_THROW(classify_size_n_family(Signature{}, 0), std::invalid_argument);
}

TEST(ClassifySize, Conditions) {
  EXPECT_TRUE(classify_size_n_family(monadic(0, 0, kInf), 2).is_infinite());
  EXPECT_TRUE(classify_size_n_family(monadic(kInf, 0, 0), 1).is_infinite());
  EXPECT_EQ(classify_size_n_family(with_pred(2, 1), 3), RankResult::finite_uncounted(0));
  EXPECT_EQ(classify_size_n_family(with_func(1, 1), 1), RankResult::finite_uncounted(0));
  Signature mixed = with_func(1, kInf);
  EXPECT_TRUE(classify_size_n_family(mixed, 1).is_finite());
  mixed = with_pred(2, kInf);
  EXPECT_TRUE(classify_size_n_family(mixed, 1).is_infinite());
}

TEST(ClassifySize, DegreeMatchesIsomorphismClasses) {
  for (unsigned k = 0; k <= 2; ++k) {
    for (unsigned m = 0; m <= 1; ++m) {
      for (unsigned c = 0; c <= 2; ++c) {
        for (unsigned n = 1; n <= 4; ++n) {
          const MonadicSignature sig{m, k, c};
          const auto r = classify_size_n_family(sig.to_signature(), n);
          EXPECT_EQ(r, RankResult::finite(0, famrank::testing::isomorphism_classes(sig, n)))
              << "k=" << k << " m=" << m << " c=" << c << " n=" << n;
          EXPECT_EQ(*r.degree(), size_n_count_closed_form(sig, n));
        }
      }
    }
  }
}

TEST(ClassifyInfinite, Examples) {
  EXPECT_EQ(classify_infinite_model_family(monadic(0, 2, 0)), RankResult::finite(3, 1));
  EXPECT_EQ(classify_infinite_model_family(monadic(0, 0, 3)), RankResult::finite(0, 5));
  EXPECT_TRUE(classify_infinite_model_family(with_func(1, 1)).is_infinite());
  EXPECT_EQ(classify_infinite_model_family(Signature{}), RankResult::finite(0, 1));
  for (unsigned k = 1; k <= 3; ++k) {
    EXPECT_EQ(classify_infinite_model_family(monadic(0, k, 0)).rank(), (1u << k) - 1);
  }
}

TEST(Combinatorics, BellTwoWays) {
  const auto bell = bell_numbers(8);
  const std::vector<std::uint64_t> expected{1, 1, 2, 5, 15, 52, 203, 877, 4140};
  EXPECT_EQ(bell, expected);
  for (unsigned n = 0; n <= 8; ++n) {
    EXPECT_EQ(famrank::testing::set_partitions(n).size(), expected[n]);
    std::uint64_t visited = 0;
    for_each_set_partition(n, [&](const auto&, std::uint32_t) { ++visited; });
    EXPECT_EQ(visited, expected[n]);
    std::uint64_t by_stirling = 0;
    for (unsigned j = 0; j <= n; ++j) by_stirling += stirling2(n, j);
    EXPECT_EQ(by_stirling, expected[n]);
  }
  EXPECT_EQ(binomial(5, 2), 10u);
  EXPECT_THROW(checked_pow(2, 64), std::overflow_error);
}
