#include "bellcong/sequences.hpp"

#include <string>

namespace bellcong {
namespace {

__extension__ using u128 = unsigned __int128;

void require_below_p(std::uint64_t n, const PrimeContext& ctx, const char* what) {
  if (n >= ctx.modulus()) {
    throw IndexTooLarge(std::string(what) + ": index " + std::to_string(n) +
                        " must be below p = " + std::to_string(ctx.modulus()));
  }
}

}  // namespace

BellRow bell_row(const PrimeContext& ctx) {
  const std::uint32_t p = ctx.modulus();
  const auto fact = ctx.factorials();
  const auto inv_fact = ctx.inverse_factorials();

  // B_{n+1} = n! * sum_k (B_k / k!) * (1 / (n-k)!), a running convolution.
  std::vector<std::uint32_t> bell(p);
  std::vector<std::uint32_t> scaled(p);  // B_k / k!
  bell[0] = 1;
  scaled[0] = 1;
  for (std::uint32_t n = 0; n + 1 < p; ++n) {
    u128 acc = 0;
    for (std::uint32_t k = 0; k <= n; ++k) {
      acc += static_cast<std::uint64_t>(scaled[k]) * inv_fact[n - k];
    }
    const auto sum = static_cast<std::uint32_t>(acc % p);
    bell[n + 1] = detail::mul_mod(fact[n], sum, p);
    scaled[n + 1] = detail::mul_mod(bell[n + 1], inv_fact[n + 1], p);
  }
  return {ctx, std::move(bell)};
}

BellRow bell_triangle_row(const PrimeContext& ctx) {
  const std::uint32_t p = ctx.modulus();
  std::vector<std::uint32_t> bell(p);
  std::vector<std::uint32_t> prev{1};
  std::vector<std::uint32_t> cur;
  bell[0] = 1;
  for (std::uint32_t n = 1; n < p; ++n) {
    cur.assign(n + 1, 0);
    cur[0] = prev.back();
    for (std::uint32_t j = 1; j <= n; ++j) cur[j] = detail::add_mod(cur[j - 1], prev[j - 1], p);
    bell[n] = cur[0];
    prev.swap(cur);
  }
  return {ctx, std::move(bell)};
}

Residue bell_mod(std::uint64_t n, const BellRow& row) {
  const PrimeContext& ctx = row.context();
  const std::uint64_t p = ctx.modulus();
  if (n >= p * p) {
    throw IndexTooLarge("bell_mod: index " + std::to_string(n) + " must be below p^2 = " +
                        std::to_string(p * p));
  }
  const auto b = row.values();
  const std::uint64_t q = n / p;
  const std::uint64_t s = n % p;
  if (q == 0) return row[s];

  auto folded = [&](std::uint64_t t) -> std::uint32_t {
    if (t < p) return b[t];
    return detail::add_mod(b[t - p], b[t - p + 1], ctx.modulus());
  };
  Residue acc = ctx.zero();
  for (std::uint64_t j = 0; j <= q; ++j) {
    acc += binomial_mod(q, j, ctx) * Residue(folded(s + j), ctx);
  }
  return acc;
}

Residue bell_mod(std::uint64_t n, const PrimeContext& ctx) { return bell_mod(n, bell_row(ctx)); }

DerangementRow derangement_row(const PrimeContext& ctx) {
  const std::uint32_t p = ctx.modulus();
  std::vector<std::uint32_t> d(p);
  d[0] = 1;
  for (std::uint32_t n = 1; n < p; ++n) {
    const std::uint32_t t = detail::mul_mod(n, d[n - 1], p);
    d[n] = (n % 2 == 0) ? detail::add_mod(t, 1, p) : detail::sub_mod(t, 1 % p, p);
  }
  return {ctx, std::move(d)};
}

Residue signed_derangement_series_mod(std::uint64_t n, const PrimeContext& ctx) {
  const std::uint32_t p = ctx.modulus();
  const auto s = static_cast<std::uint32_t>(n % p);
  // Terms with r > s contain the factor (s - s) and vanish.
  std::uint32_t term = 1 % p;
  std::uint32_t sum = term;
  for (std::uint32_t r = 1; r <= s; ++r) {
    term = detail::mul_mod(term, s - r + 1, p);
    sum = (r % 2 == 0) ? detail::add_mod(sum, term, p) : detail::sub_mod(sum, term, p);
  }
  return {sum, ctx};
}

Residue derangement_series_mod(std::uint64_t n, const PrimeContext& ctx) {
  require_below_p(n, ctx, "derangement_series_mod");
  Residue v = signed_derangement_series_mod(n, ctx);
  return n % 2 == 0 ? v : -v;
}

Residue stirling2_mod(std::uint64_t n, std::uint64_t k, const PrimeContext& ctx) {
  require_below_p(k, ctx, "stirling2_mod");
  const std::uint32_t p = ctx.modulus();
  const auto inv_fact = ctx.inverse_factorials();
  // S(n,k) = sum_j (-1)^{k-j} j^n / (j! (k-j)!)
  std::uint32_t acc = 0;
  for (std::uint64_t j = 0; j <= k; ++j) {
    const std::uint32_t power = detail::pow_mod(static_cast<std::uint32_t>(j), n, p);  // 0^0 = 1
    std::uint32_t term = detail::mul_mod(power, inv_fact[j], p);
    term = detail::mul_mod(term, inv_fact[k - j], p);
    acc = ((k - j) % 2 == 0) ? detail::add_mod(acc, term, p) : detail::sub_mod(acc, term, p);
  }
  return {acc, ctx};
}

DensePoly touchard_poly(std::uint64_t n, const PrimeContext& ctx) {
  require_below_p(n, ctx, "touchard_poly");
  std::vector<std::uint32_t> c(n + 1);
  for (std::uint64_t k = 0; k <= n; ++k) c[k] = stirling2_mod(n, k, ctx).value();
  return {ctx, std::move(c)};
}

std::vector<DensePoly> touchard_polys(std::uint64_t n_max, const PrimeContext& ctx) {
  require_below_p(n_max, ctx, "touchard_polys");
  const std::uint32_t p = ctx.modulus();
  const auto inv_fact = ctx.inverse_factorials();
  const auto len = static_cast<std::size_t>(n_max + 1);

  // signed_inv[i] = (-1)^i / i!
  std::vector<std::uint32_t> signed_inv(len);
  for (std::size_t i = 0; i < len; ++i) {
    signed_inv[i] = (i % 2 == 0) ? inv_fact[i] : detail::neg_mod(inv_fact[i], p);
  }
  std::vector<std::uint32_t> power(len, 1 % p);  // j^n, starting at n = 0
  std::vector<std::uint32_t> weighted(len);       // j^n / j!

  std::vector<DensePoly> out;
  out.reserve(len);
  for (std::size_t n = 0; n < len; ++n) {
    if (n > 0) {
      power[0] = 0;
      for (std::size_t j = 1; j < len; ++j) {
        power[j] = detail::mul_mod(power[j], static_cast<std::uint32_t>(j), p);
      }
    }
    for (std::size_t j = 0; j <= n; ++j) weighted[j] = detail::mul_mod(power[j], inv_fact[j], p);
    std::vector<std::uint32_t> c(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
      u128 acc = 0;
      for (std::size_t j = 0; j <= k; ++j) {
        acc += static_cast<std::uint64_t>(weighted[j]) * signed_inv[k - j];
      }
      c[k] = static_cast<std::uint32_t>(acc % p);
    }
    out.emplace_back(ctx, std::move(c));
  }
  return out;
}

std::vector<DensePoly> touchard_polys_by_recursion(std::uint64_t n_max, const PrimeContext& ctx) {
  require_below_p(n_max, ctx, "touchard_polys_by_recursion");
  const std::uint32_t p = ctx.modulus();
  std::vector<DensePoly> out;
  out.reserve(n_max + 1);
  out.push_back(DensePoly::constant(ctx.one()));
  for (std::uint64_t n = 0; n < n_max; ++n) {
    // coefficient i of T_{n+1} is coefficient i-1 of sum_k binom(n,k) T_k
    std::vector<std::uint32_t> next(n + 2, 0);
    for (std::uint64_t k = 0; k <= n; ++k) {
      const std::uint32_t b = binomial_mod(n, k, ctx).value();
      const auto tk = out[k].coeffs();
      for (std::size_t i = 0; i < tk.size(); ++i) {
        next[i + 1] = detail::add_mod(next[i + 1], detail::mul_mod(b, tk[i], p), p);
      }
    }
    out.emplace_back(ctx, std::move(next));
  }
  return out;
}

}  // namespace bellcong
