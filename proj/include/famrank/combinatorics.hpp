#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace famrank {

/// Bell numbers B(0..n) by the Bell triangle. Throws std::overflow_error.
std::vector<std::uint64_t> bell_numbers(unsigned n);

/// Stirling number of the second kind S(n, j).
std::uint64_t stirling2(unsigned n, unsigned j);

/// Calls visit once per set partition of {0..n-1}, given as a restricted
/// growth string (block id per element) and the block count.
void for_each_set_partition(
    unsigned n,
    const std::function<void(const std::vector<std::uint32_t>&, std::uint32_t)>& visit);

std::uint64_t checked_pow(std::uint64_t base, unsigned exponent);

/// C(n, r), checked.
std::uint64_t binomial(std::uint64_t n, std::uint64_t r);

}  // namespace famrank
