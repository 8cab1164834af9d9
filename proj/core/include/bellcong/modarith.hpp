#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "bellcong/error.hpp"

namespace bellcong {

class PrimeContext;
using ContextPtr = std::shared_ptr<const PrimeContext>;

// Raw kernels on canonical representatives in [0, p). p < 2^31, so every
// product of two representatives fits in 64 bits.
namespace detail {

inline std::uint32_t add_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) noexcept {
  std::uint32_t s = a + b;  // < 2^32 since a, b < 2^31
  return s >= p ? s - p : s;
}

inline std::uint32_t sub_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) noexcept {
  return a >= b ? a - b : a + (p - b);
}

inline std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) noexcept {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

inline std::uint32_t neg_mod(std::uint32_t a, std::uint32_t p) noexcept {
  return a == 0 ? 0 : p - a;
}

std::uint32_t pow_mod(std::uint32_t base, std::uint64_t exp, std::uint32_t p) noexcept;

// Reduces any signed 64-bit integer into [0, p).
inline std::uint32_t reduce_signed(std::int64_t n, std::uint32_t p) noexcept {
  std::int64_t r = n % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

}  // namespace detail

/// Deterministic primality test, exact for every 64-bit input.
bool is_prime(std::uint64_t n) noexcept;

/// All primes in [lo, hi], ascending, by a segmented sieve. Requires
/// lo <= hi < 2^31.
std::vector<std::uint32_t> primes_in_range(std::uint64_t lo, std::uint64_t hi);

class Residue;

/// A verified prime modulus with factorial and inverse-factorial tables.
///
/// Contexts are immutable and shared. Residues, rows and polynomials keep a
/// plain pointer to their context, so the owning ContextPtr must outlive them.
class PrimeContext {
  struct Token {};

 public:
  static constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 31;

  PrimeContext(Token, std::uint32_t p);
  PrimeContext(const PrimeContext&) = delete;
  PrimeContext& operator=(const PrimeContext&) = delete;

  friend ContextPtr make_context(std::uint64_t p);

  std::uint32_t modulus() const noexcept { return p_; }

  /// fact[i] = i! mod p for 0 <= i < p.
  std::span<const std::uint32_t> factorials() const noexcept { return fact_; }
  /// inv_fact[i] = (i!)^-1 mod p for 0 <= i < p.
  std::span<const std::uint32_t> inverse_factorials() const noexcept { return inv_fact_; }

  Residue residue(std::int64_t n) const;
  Residue zero() const;
  Residue one() const;

 private:
  std::uint32_t p_;
  std::vector<std::uint32_t> fact_;
  std::vector<std::uint32_t> inv_fact_;
};

/// Builds the context for prime p. Throws Overflow if p >= 2^31 and NotPrime
/// if p is not prime.
ContextPtr make_context(std::uint64_t p);

/// An element of Z/pZ tied to its context. Mixing contexts throws
/// ContextMismatch.
class Residue {
 public:
  Residue(std::uint32_t value, const PrimeContext& ctx);

  std::uint32_t value() const noexcept { return value_; }
  const PrimeContext& context() const noexcept { return *ctx_; }
  std::uint32_t modulus() const noexcept { return ctx_->modulus(); }
  bool is_zero() const noexcept { return value_ == 0; }

  Residue operator-() const noexcept;
  Residue& operator+=(const Residue& rhs);
  Residue& operator-=(const Residue& rhs);
  Residue& operator*=(const Residue& rhs);

  friend Residue operator+(Residue a, const Residue& b) { return a += b; }
  friend Residue operator-(Residue a, const Residue& b) { return a -= b; }
  friend Residue operator*(Residue a, const Residue& b) { return a *= b; }

  // Equality across contexts is a mismatch, not "false".
  friend bool operator==(const Residue& a, const Residue& b);

 private:
  void check_same(const Residue& other) const;

  std::uint32_t value_;
  const PrimeContext* ctx_;
};

Residue normalize(std::int64_t n, const PrimeContext& ctx);
Residue mod_pow(const Residue& a, std::uint64_t e);
/// a^(p-2); throws DivisionByZero for a = 0.
Residue mod_inv(const Residue& a);
/// binom(n, k) mod p from the factorial tables; 0 when k > n. Requires n < p.
Residue binomial_mod(std::uint64_t n, std::uint64_t k, const PrimeContext& ctx);

}  // namespace bellcong
