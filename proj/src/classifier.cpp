#include "famrank/classifier.hpp"

#include <stdexcept>

#include "famrank/combinatorics.hpp"
#include "famrank/engine.hpp"

namespace famrank {

namespace {

// Largest full family (in discrete configurations) handed to the engine.
constexpr std::uint64_t kEngineRegionBudget = 200'000;
constexpr unsigned kEngineMaxUnary = 4;

bool engine_feasible(const MonadicSignature& sig) {
  if (sig.unary > kEngineMaxUnary || sig.zeroary > 40) return false;
  try {
    return full_family_region_count(sig) <= kEngineRegionBudget;
  } catch (const std::overflow_error&) {
    return false;
  }
}

std::uint64_t full_rank(const MonadicSignature& sig) {
  if (sig.unary >= 64) throw std::overflow_error("rank 2^k does not fit 64 bits");
  return std::uint64_t{1} << sig.unary;
}

}  // namespace

bool is_full_family_e_minimal(const Signature& sig) {
  if (sig.is_empty()) return true;
  Signature one_constant;
  one_constant.constants = 1;
  return sig == one_constant;
}

std::uint64_t full_family_degree_closed_form(const MonadicSignature& sig) {
  const std::uint64_t cells = std::uint64_t{1} << sig.unary;
  std::uint64_t sum = 0;
  for (unsigned j = 0; j <= sig.constants; ++j) {
    sum = checked_add(sum, checked_mul(stirling2(sig.constants, j), checked_pow(cells, j)));
  }
  return checked_mul(checked_pow(2, sig.zeroary), sum);
}

std::uint64_t size_n_count_closed_form(const MonadicSignature& sig, std::uint64_t n) {
  const std::uint64_t cells = std::uint64_t{1} << sig.unary;
  std::uint64_t sum = 0;
  for (unsigned j = 0; j <= sig.constants && j <= n; ++j) {
    // j named elements; the other n - j elements spread over the cells.
    const std::uint64_t spreads = binomial(n - j + cells - 1, cells - 1);
    sum = checked_add(sum, checked_mul(checked_mul(stirling2(sig.constants, j), checked_pow(cells, j)), spreads));
  }
  return checked_mul(checked_pow(2, sig.zeroary), sum);
}

RankResult classify_full_family(const Signature& sig) {
  sig.validate();
  const auto monadic = as_finite_monadic(sig);
  if (!monadic) return RankResult::infinite();
  const std::uint64_t rank = full_rank(*monadic);
  if (!engine_feasible(*monadic)) return RankResult::finite(rank, full_family_degree_closed_form(*monadic));
  const auto result = rs_and_degree(full_family(*monadic));
  if (!result.is_finite() || result.rank() != rank) {
    throw std::logic_error("engine rank disagrees with 2^k for a monadic signature");
  }
  return result;
}

RankResult classify_size_n_family(const Signature& sig, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("model size must be positive");
  sig.validate();
  const bool finite = sig.is_finite() || (n == 1 && sig.has_finitely_many_predicates());
  if (!finite) return RankResult::infinite();
  if (!sig.is_monadic()) return RankResult::finite_uncounted(0);

  // In a one-element model every constant names the same element, so any
  // number of constants behaves like one.
  Signature reduced = sig;
  if (n == 1 && reduced.constants > ExtNat(1)) reduced.constants = 1;
  const auto monadic = as_finite_monadic(reduced);
  if (!monadic) return RankResult::finite_uncounted(0);

  std::uint64_t count = 0;
  if (engine_feasible(*monadic)) {
    count = count_points(full_family(*monadic, ExactSize{n}), ExtNat::infinity()).value();
  } else {
    count = size_n_count_closed_form(*monadic, n);
  }
  return RankResult::finite(0, count);
}

RankResult classify_infinite_model_family(const Signature& sig) {
  sig.validate();
  const auto monadic = as_finite_monadic(sig);
  if (!monadic) return RankResult::infinite();
  if (!engine_feasible(*monadic)) {
    const std::uint64_t rank = monadic->unary == 0 ? 0 : full_rank(*monadic) - 1;
    return RankResult::finite(rank, full_family_degree_closed_form(*monadic));
  }
  return rs_and_degree(full_family(*monadic, InfiniteModels{}));
}

}  // namespace famrank
