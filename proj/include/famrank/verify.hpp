#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"

#include "famrank/qe/ast.hpp"
#include "famrank/rank_result.hpp"
#include "famrank/theory.hpp"

namespace famrank::verify {

// Independent oracles. They share only region membership with the engine:
// ranks come straight from the accumulation-point definition evaluated on
// representative points.

/// CB rank of p inside f: 0 if p is isolated, else one more than the
/// largest rank among representative points converging to p (some of p's
/// infinite cells replaced by a value beyond every interval endpoint).
std::uint64_t oracle_point_rank(const FamilySpec& f, const TheoryPoint& p);

/// (max oracle_point_rank, number of maximizers) over every member whose
/// finite cells lie at or below the largest endpoint plus one. Throws
/// std::logic_error if a maximizer needs a larger value (infinite degree).
RankResult oracle_rank_by_scan(const FamilySpec& f);

/// Every member of the family with all cells finite and total size <= cap.
std::vector<TheoryPoint> enumerate_finite_points(const FamilySpec& f, std::uint64_t cap);

// Seeded generators.

MonadicSignature random_signature(std::mt19937_64& rng, unsigned max_unary, unsigned max_zeroary,
                                  unsigned max_constants);
DiscreteData random_discrete(std::mt19937_64& rng, const MonadicSignature& sig);
/// A few regions with small endpoints and a random restriction.
FamilySpec random_family(std::mt19937_64& rng, const MonadicSignature& sig);
/// All cells finite, total size in [1, max_size].
TheoryPoint random_finite_point(std::mt19937_64& rng, const MonadicSignature& sig, std::uint64_t max_size);
/// A closed sentence over sig with quantifier depth <= max_depth (>= 1).
qe::Formula random_sentence(std::mt19937_64& rng, const MonadicSignature& sig, std::size_t max_depth);

struct Options {
  std::size_t trials = 200;
  std::uint64_t seed = 42;
  unsigned max_unary = 3;
  /// Test hook: "rank" or "qe" corrupts one side of the comparison.
  std::optional<std::string> inject_fault;
};

struct CheckResult {
  std::string name;
  std::size_t trials = 0;
  std::size_t failures = 0;
  std::optional<nlohmann::json> counterexample;
};

struct Report {
  std::vector<CheckResult> checks;
  bool passed() const;
  nlohmann::json to_json() const;
};

/// Runs the rank-oracle, inequality and QE-soundness checks. Deterministic
/// in the options.
Report run(const Options& options);

}  // namespace famrank::verify
