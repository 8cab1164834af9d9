#pragma once

// Test-only brute-force oracles. None of these call into the library.

#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

namespace testing_oracles {

inline bool is_prime_trial(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline std::vector<std::uint32_t> primes_trial(std::uint32_t lo, std::uint32_t hi) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t n = lo; n <= hi; ++n) {
    if (is_prime_trial(n)) out.push_back(n);
  }
  return out;
}

// counts[k] = number of set partitions of {0..n-1} into k blocks, by
// enumerating restricted growth strings.
inline std::vector<std::uint64_t> partition_counts(unsigned n) {
  std::vector<std::uint64_t> counts(n + 1, 0);
  if (n == 0) {
    counts[0] = 1;
    return counts;
  }
  std::vector<unsigned> a(n, 0);
  std::function<void(unsigned, unsigned)> rec = [&](unsigned i, unsigned blocks) {
    if (i == n) {
      ++counts[blocks];
      return;
    }
    for (unsigned b = 0; b <= blocks; ++b) {
      a[i] = b;
      rec(i + 1, b == blocks ? blocks + 1 : blocks);
    }
  };
  a[0] = 0;
  rec(1, 1);
  return counts;
}

inline std::uint64_t bell_brute(unsigned n) {
  auto c = partition_counts(n);
  return std::accumulate(c.begin(), c.end(), std::uint64_t{0});
}

// Pascal triangle mod p, rows 0..n_max.
inline std::vector<std::vector<std::uint32_t>> pascal_mod(unsigned n_max, std::uint32_t p) {
  std::vector<std::vector<std::uint32_t>> rows{{1 % p}};
  for (unsigned n = 1; n <= n_max; ++n) {
    std::vector<std::uint32_t> row(n + 1);
    row[0] = row[n] = 1 % p;
    for (unsigned k = 1; k < n; ++k) row[k] = (rows[n - 1][k - 1] + rows[n - 1][k]) % p;
    rows.push_back(std::move(row));
  }
  return rows;
}

inline std::uint64_t pow_naive(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  for (std::uint64_t i = 0; i < e; ++i) r = r * (a % p) % p;
  return r;
}

// x^{-1} mod p by exhaustive search.
inline std::uint64_t inv_search(std::uint64_t a, std::uint64_t p) {
  for (std::uint64_t y = 1; y < p; ++y) {
    if (a * y % p == 1) return y;
  }
  return 0;
}

inline std::int64_t mod_signed(std::int64_t a, std::int64_t p) {
  std::int64_t r = a % p;
  return r < 0 ? r + p : r;
}

}  // namespace testing_oracles
