#include "famrank/combinatorics.hpp"

#include <stdexcept>

#include "famrank/ext_nat.hpp"

namespace famrank {

std::vector<std::uint64_t> bell_numbers(unsigned n) {
  // Row r of the Bell triangle starts with B(r) and ends with B(r+1).
  std::vector<std::uint64_t> bell{1};
  std::vector<std::uint64_t> row{1};
  for (unsigned r = 1; r <= n; ++r) {
    std::vector<std::uint64_t> next{row.back()};
    for (auto v : row) next.push_back(checked_add(next.back(), v));
    bell.push_back(next.front());
    row = std::move(next);
  }
  return bell;
}

std::uint64_t stirling2(unsigned n, unsigned j) {
  // S(i, t) = t * S(i-1, t) + S(i-1, t-1)
  std::vector<std::uint64_t> prev(j + 1, 0);
  prev[0] = 1;
  for (unsigned i = 1; i <= n; ++i) {
    std::vector<std::uint64_t> cur(j + 1, 0);
    for (unsigned t = 1; t <= j && t <= i; ++t) {
      cur[t] = checked_add(checked_mul(t, prev[t]), prev[t - 1]);
    }
    prev = std::move(cur);
  }
  return prev[j];
}

void for_each_set_partition(
    unsigned n,
    const std::function<void(const std::vector<std::uint32_t>&, std::uint32_t)>& visit) {
  std::vector<std::uint32_t> rgs(n, 0);
  // Recursive descent over restricted growth strings.
  std::function<void(unsigned, std::uint32_t)> go = [&](unsigned i, std::uint32_t blocks) {
    if (i == n) {
      visit(rgs, blocks);
      return;
    }
    for (std::uint32_t b = 0; b <= blocks; ++b) {
      rgs[i] = b;
      go(i + 1, b == blocks ? blocks + 1 : blocks);
    }
  };
  go(0, 0);
}

std::uint64_t checked_pow(std::uint64_t base, unsigned exponent) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exponent; ++i) r = checked_mul(r, base);
  return r;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t r) {
  if (r > n) return 0;
  if (r > n - r) r = n - r;
  std::uint64_t out = 1;
  for (std::uint64_t i = 1; i <= r; ++i) {
    // out * (n - r + i) is divisible by i after the multiplication.
    out = checked_mul(out, n - r + i) / i;
  }
  return out;
}

}  // namespace famrank
