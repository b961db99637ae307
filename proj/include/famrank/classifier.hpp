#pragma once

#include <cstdint>

#include "famrank/rank_result.hpp"
#include "famrank/signature.hpp"

namespace famrank {

/// The family of all theories of sig is e-minimal: sig is empty or is a
/// single constant symbol.
bool is_full_family_e_minimal(const Signature& sig);

/// RS and degree of the family of all theories of sig.
///
/// Infinite as soon as sig has a predicate of arity >= 2, a function
/// symbol, or infinitely many symbols of some kind. Otherwise the rank is
/// 2^k for k unary predicates and the degree is computed by the engine.
RankResult classify_full_family(const Signature& sig);

/// RS and degree of the theories with an n-element model. Finite (rank 0)
/// when sig is finite, or n = 1 and sig has finitely many predicates. The
/// degree is counted for monadic signatures and left uncounted otherwise.
/// Throws std::invalid_argument for n = 0.
RankResult classify_size_n_family(const Signature& sig, std::uint64_t n);

/// RS and degree of the theories with infinite models.
RankResult classify_infinite_model_family(const Signature& sig);

/// Closed form for the number of maximal-rank theories of a finite monadic
/// signature: 2^m * sum_j S(n, j) * (2^k)^j. Used for signatures too large
/// to hand to the engine.
std::uint64_t full_family_degree_closed_form(const MonadicSignature& sig);

/// Closed form for the number of theories with an n-element model:
/// 2^m * sum_j S(c, j) * (2^k)^j * C(n - j + 2^k - 1, 2^k - 1).
std::uint64_t size_n_count_closed_form(const MonadicSignature& sig, std::uint64_t n);

}  // namespace famrank
