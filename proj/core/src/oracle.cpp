#include "bellcong/oracle.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>

namespace bellcong::oracle {
namespace {

void check_index(std::uint32_t n, std::uint32_t cap, const char* what) {
  if (n > cap) {
    throw IndexTooLarge(std::string(what) + ": index " + std::to_string(n) + " exceeds " +
                        std::to_string(cap));
  }
}

// B_0..B_k grown on demand; the Pascal row for the last computed n is kept
// so extension continues where it stopped.
struct BellCache {
  std::mutex mu;
  std::vector<BigInt> bell{BigInt(1)};
  std::vector<BigInt> pascal{BigInt(1)};  // binom(n, .) for n = bell.size() - 1

  void extend_to(std::uint32_t n) {
    while (bell.size() <= n) {
      // pascal holds binom(m, .) with m = bell.size() - 1; B_{m+1} = sum binom(m,k) B_k
      BigInt next;
      for (std::size_t k = 0; k < pascal.size(); ++k) next += pascal[k] * bell[k];
      bell.push_back(std::move(next));
      std::vector<BigInt> row(pascal.size() + 1);
      row.front() = BigInt(1);
      row.back() = BigInt(1);
      for (std::size_t k = 1; k < pascal.size(); ++k) row[k] = pascal[k - 1] + pascal[k];
      pascal = std::move(row);
    }
  }
};

BellCache& bell_cache() {
  static BellCache cache;
  return cache;
}

}  // namespace

BigInt bell_exact(std::uint32_t n) {
  check_index(n, kMaxBellIndex, "bell_exact");
  auto& cache = bell_cache();
  std::lock_guard lock(cache.mu);
  cache.extend_to(n);
  return cache.bell[n];
}

std::vector<BigInt> bell_exact_table(std::uint32_t n) {
  check_index(n, kMaxBellIndex, "bell_exact_table");
  auto& cache = bell_cache();
  std::lock_guard lock(cache.mu);
  cache.extend_to(n);
  return {cache.bell.begin(), cache.bell.begin() + n + 1};
}

BigInt derangement_exact(std::uint32_t n) {
  check_index(n, kMaxDerangementIndex, "derangement_exact");
  BigInt d(1);
  for (std::uint32_t i = 1; i <= n; ++i) {
    d *= BigInt(i);
    d += BigInt(i % 2 == 0 ? 1 : -1);
  }
  return d;
}

Rational derangement_formula_rational(std::uint32_t n) {
  check_index(n, kMaxDerangementIndex, "derangement_formula_rational");
  Rational sum;
  BigInt k_fact(1);
  for (std::uint32_t k = 0; k <= n; ++k) {
    if (k > 0) k_fact *= BigInt(k);
    sum += Rational(BigInt(k % 2 == 0 ? 1 : -1), k_fact);
  }
  return sum * Rational(factorial(n));
}

BigInt derangement_exact_formula(std::uint32_t n) {
  Rational r = derangement_formula_rational(n);
  if (!r.is_integer()) {
    throw std::logic_error("n! * sum (-1)^k/k! is not integral at n = " + std::to_string(n));
  }
  return r.num();
}

BigInt derangement_brute(std::uint32_t n) {
  check_index(n, kMaxBruteDerangement, "derangement_brute");
  std::vector<std::uint32_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::int64_t count = 0;
  do {
    bool fixed = false;
    for (std::uint32_t i = 0; i < n && !fixed; ++i) fixed = perm[i] == i;
    count += !fixed;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return BigInt(count);
}

std::vector<BigInt> stirling2_exact_row(std::uint32_t n) {
  check_index(n, kMaxStirlingIndex, "stirling2_exact");
  std::vector<BigInt> row{BigInt(1)};  // S(0, .)
  for (std::uint32_t m = 1; m <= n; ++m) {
    std::vector<BigInt> next(m + 1);
    for (std::uint32_t k = 1; k <= m; ++k) {
      if (k < m) next[k] = BigInt(k) * row[k];
      next[k] += row[k - 1];
    }
    row = std::move(next);
  }
  return row;
}

BigInt stirling2_exact(std::uint32_t n, std::uint32_t k) {
  check_index(n, kMaxStirlingIndex, "stirling2_exact");
  if (k > n) return BigInt();
  return stirling2_exact_row(n)[k];
}

std::vector<Rational> bell_egf_coefficients(std::uint32_t order) {
  check_index(order, kMaxEgfOrder, "egf_bell_check");
  const std::size_t len = order + 1;

  auto truncated_mul = [len](const std::vector<Rational>& a, const std::vector<Rational>& b) {
    std::vector<Rational> r(len);
    for (std::size_t i = 0; i < len; ++i) {
      if (a[i].is_zero()) continue;
      for (std::size_t j = 0; i + j < len; ++j) {
        if (!b[j].is_zero()) r[i + j] += a[i] * b[j];
      }
    }
    return r;
  };

  // u = e^x - 1 = sum_{k>=1} x^k / k!
  std::vector<Rational> u(len);
  BigInt k_fact(1);
  for (std::size_t k = 1; k < len; ++k) {
    k_fact *= BigInt(static_cast<std::int64_t>(k));
    u[k] = Rational(BigInt(1), k_fact);
  }

  // exp(u) = 1 + u(1 + u/2(1 + u/3(...))). u has no constant term, so terms
  // past u^order vanish after truncation.
  std::vector<Rational> acc(len);
  acc[0] = Rational(1);
  for (std::size_t k = order; k >= 1; --k) {
    std::vector<Rational> t = truncated_mul(u, acc);
    const Rational inv_k(BigInt(1), BigInt(static_cast<std::int64_t>(k)));
    for (auto& c : t) c *= inv_k;
    t[0] += Rational(1);
    acc = std::move(t);
  }
  return acc;
}

bool egf_bell_check(std::uint32_t order) {
  const auto coeffs = bell_egf_coefficients(order);
  const auto bells = bell_exact_table(order);
  BigInt n_fact(1);
  for (std::uint32_t n = 0; n <= order; ++n) {
    if (n > 0) n_fact *= BigInt(n);
    const Rational scaled = coeffs[n] * Rational(n_fact);
    if (!scaled.is_integer() || scaled.num() != bells[n]) return false;
  }
  return true;
}

Residue reduce(const BigInt& x, const PrimeContext& ctx) {
  return {x.mod_u32(ctx.modulus()), ctx};
}

}  // namespace bellcong::oracle
