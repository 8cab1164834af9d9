#include "bellcong/modarith.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace bellcong {
namespace {

__extension__ using u128 = unsigned __int128;

std::uint64_t mul_mod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod64(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mul_mod64(r, b, m);
    b = mul_mod64(b, b, m);
    e >>= 1;
  }
  return r;
}

// Strong probable-prime test to base a for odd n > 2.
bool strong_probable_prime(std::uint64_t n, std::uint64_t a) {
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  std::uint64_t x = pow_mod64(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mul_mod64(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace

namespace detail {

std::uint32_t pow_mod(std::uint32_t base, std::uint64_t exp, std::uint32_t p) noexcept {
  std::uint32_t r = 1 % p;
  base %= p;
  while (exp) {
    if (exp & 1) r = mul_mod(r, base, p);
    base = mul_mod(base, base, p);
    exp >>= 1;
  }
  return r;
}

}  // namespace detail

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % q == 0) return n == q;
  }
  // These twelve bases are deterministic for all n < 3.3 * 10^24.
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (!strong_probable_prime(n, a)) return false;
  }
  return true;
}

std::vector<std::uint32_t> primes_in_range(std::uint64_t lo, std::uint64_t hi) {
  if (hi >= PrimeContext::kMaxModulus) {
    throw Overflow("primes_in_range: upper bound must be below 2^31");
  }
  std::vector<std::uint32_t> out;
  if (lo > hi || hi < 2) return out;
  lo = std::max<std::uint64_t>(lo, 2);

  const std::uint64_t root = isqrt(hi);
  std::vector<bool> small_composite(root + 1, false);
  std::vector<std::uint64_t> base;
  for (std::uint64_t i = 2; i <= root; ++i) {
    if (small_composite[i]) continue;
    base.push_back(i);
    for (std::uint64_t j = i * i; j <= root; j += i) small_composite[j] = true;
  }

  constexpr std::uint64_t kSegment = 1 << 18;
  std::vector<bool> composite;
  for (std::uint64_t seg_lo = lo; seg_lo <= hi; seg_lo += kSegment) {
    const std::uint64_t seg_hi = std::min(hi, seg_lo + kSegment - 1);
    composite.assign(seg_hi - seg_lo + 1, false);
    for (std::uint64_t q : base) {
      if (q * q > seg_hi) break;
      std::uint64_t start = std::max(q * q, (seg_lo + q - 1) / q * q);
      for (std::uint64_t j = start; j <= seg_hi; j += q) composite[j - seg_lo] = true;
    }
    for (std::uint64_t n = seg_lo; n <= seg_hi; ++n) {
      if (!composite[n - seg_lo]) out.push_back(static_cast<std::uint32_t>(n));
    }
  }
  return out;
}

PrimeContext::PrimeContext(Token, std::uint32_t p) : p_(p), fact_(p), inv_fact_(p) {
  fact_[0] = 1 % p;
  for (std::uint32_t i = 1; i < p; ++i) fact_[i] = detail::mul_mod(fact_[i - 1], i, p);
  // (p-1)! is a unit, so invert it once and walk downward.
  inv_fact_[p - 1] = detail::pow_mod(fact_[p - 1], p - 2, p);
  for (std::uint32_t i = p - 1; i > 0; --i) inv_fact_[i - 1] = detail::mul_mod(inv_fact_[i], i, p);
}

ContextPtr make_context(std::uint64_t p) {
  if (p >= PrimeContext::kMaxModulus) {
    throw Overflow("modulus " + std::to_string(p) + " is not below 2^31");
  }
  if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
  return std::make_shared<const PrimeContext>(PrimeContext::Token{}, static_cast<std::uint32_t>(p));
}

Residue PrimeContext::residue(std::int64_t n) const { return {detail::reduce_signed(n, p_), *this}; }
Residue PrimeContext::zero() const { return {0, *this}; }
Residue PrimeContext::one() const { return {1 % p_, *this}; }

Residue::Residue(std::uint32_t value, const PrimeContext& ctx) : value_(value), ctx_(&ctx) {
  if (value >= ctx.modulus()) {
    throw std::out_of_range("residue value " + std::to_string(value) + " is not below p = " +
                            std::to_string(ctx.modulus()));
  }
}

void Residue::check_same(const Residue& other) const {
  if (ctx_ != other.ctx_ && ctx_->modulus() != other.ctx_->modulus()) {
    throw ContextMismatch("residues mod " + std::to_string(ctx_->modulus()) + " and mod " +
                          std::to_string(other.ctx_->modulus()) + " cannot be combined");
  }
}

Residue Residue::operator-() const noexcept {
  Residue r = *this;
  r.value_ = detail::neg_mod(value_, modulus());
  return r;
}

Residue& Residue::operator+=(const Residue& rhs) {
  check_same(rhs);
  value_ = detail::add_mod(value_, rhs.value_, modulus());
  return *this;
}

Residue& Residue::operator-=(const Residue& rhs) {
  check_same(rhs);
  value_ = detail::sub_mod(value_, rhs.value_, modulus());
  return *this;
}

Residue& Residue::operator*=(const Residue& rhs) {
  check_same(rhs);
  value_ = detail::mul_mod(value_, rhs.value_, modulus());
  return *this;
}

bool operator==(const Residue& a, const Residue& b) {
  a.check_same(b);
  return a.value_ == b.value_;
}

Residue normalize(std::int64_t n, const PrimeContext& ctx) { return ctx.residue(n); }

Residue mod_pow(const Residue& a, std::uint64_t e) {
  return {detail::pow_mod(a.value(), e, a.modulus()), a.context()};
}

Residue mod_inv(const Residue& a) {
  if (a.is_zero()) throw DivisionByZero("inverse of 0 mod " + std::to_string(a.modulus()));
  return mod_pow(a, a.modulus() - 2);
}

Residue binomial_mod(std::uint64_t n, std::uint64_t k, const PrimeContext& ctx) {
  const std::uint32_t p = ctx.modulus();
  if (n >= p) {
    throw IndexTooLarge("binomial_mod: upper index " + std::to_string(n) + " must be below p = " +
                        std::to_string(p));
  }
  if (k > n) return ctx.zero();
  const auto f = ctx.factorials();
  const auto inv = ctx.inverse_factorials();
  std::uint32_t v = detail::mul_mod(f[n], inv[k], p);
  return {detail::mul_mod(v, inv[n - k], p), ctx};
}

}  // namespace bellcong
