#pragma once

#include <cstdint>
#include <vector>

#include "bellcong/bigint.hpp"
#include "bellcong/modarith.hpp"

// Exact integer ground truth for the modular kernels. Nothing here touches
// modular arithmetic except `reduce`, which is the bridge back into Z/pZ.
namespace bellcong::oracle {

inline constexpr std::uint32_t kMaxBellIndex = 1200;
inline constexpr std::uint32_t kMaxDerangementIndex = 1200;
inline constexpr std::uint32_t kMaxStirlingIndex = 400;
inline constexpr std::uint32_t kMaxEgfOrder = 60;
inline constexpr std::uint32_t kMaxBruteDerangement = 9;

/// Exact B_n from B_{n+1} = sum_k binom(n,k) B_k. Results are memoized in a
/// process-wide table, so repeated calls are cheap. n <= 1200.
BigInt bell_exact(std::uint32_t n);
/// [B_0, ..., B_n].
std::vector<BigInt> bell_exact_table(std::uint32_t n);

/// Exact D_n from D_n = n D_{n-1} + (-1)^n. n <= 1200.
BigInt derangement_exact(std::uint32_t n);
/// n! * sum_{k<=n} (-1)^k / k! as an exact rational (integral for all n).
Rational derangement_formula_rational(std::uint32_t n);
/// The value of derangement_formula_rational; throws std::logic_error if
/// the rational is not an integer. n <= 1200.
BigInt derangement_exact_formula(std::uint32_t n);
/// Count of fixed-point-free permutations of {1..n} by enumeration. n <= 9.
BigInt derangement_brute(std::uint32_t n);

/// S(n,k) from S(n,k) = k S(n-1,k) + S(n-1,k-1). n <= 400; 0 for k > n.
BigInt stirling2_exact(std::uint32_t n, std::uint32_t k);
/// [S(n,0), ..., S(n,n)].
std::vector<BigInt> stirling2_exact_row(std::uint32_t n);

/// Coefficients c_0..c_N of the truncated series exp(exp(x) - 1), built over
/// exact rationals by Horner composition. N <= 60.
std::vector<Rational> bell_egf_coefficients(std::uint32_t order);
/// True iff n! * c_n == bell_exact(n) for every n <= N.
bool egf_bell_check(std::uint32_t order);

/// x mod p in [0, p), correct for negative x.
Residue reduce(const BigInt& x, const PrimeContext& ctx);

}  // namespace bellcong::oracle
