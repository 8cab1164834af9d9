#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "bellcong/modarith.hpp"
#include "bellcong/polynomial.hpp"

namespace bellcong {

/// Residues a_0, ..., a_{p-1} of one combinatorial sequence modulo p.
template <class Tag>
class SequenceRow {
 public:
  SequenceRow(const PrimeContext& ctx, std::vector<std::uint32_t> values)
      : ctx_(&ctx), values_(std::move(values)) {}

  const PrimeContext& context() const noexcept { return *ctx_; }
  std::size_t size() const noexcept { return values_.size(); }
  std::span<const std::uint32_t> values() const noexcept { return values_; }
  Residue operator[](std::size_t n) const { return {values_.at(n), *ctx_}; }

  friend bool operator==(const SequenceRow& a, const SequenceRow& b) {
    return a.ctx_->modulus() == b.ctx_->modulus() && a.values_ == b.values_;
  }

 private:
  const PrimeContext* ctx_;
  std::vector<std::uint32_t> values_;
};

using BellRow = SequenceRow<struct BellTag>;
using DerangementRow = SequenceRow<struct DerangementTag>;

/// B_0..B_{p-1} mod p from B_{n+1} = sum_k binom(n,k) B_k. O(p^2).
BellRow bell_row(const PrimeContext& ctx);

/// Same values via the Aitken (Bell) triangle; shares no code with bell_row.
BellRow bell_triangle_row(const PrimeContext& ctx);

/// B_n mod p for n < p^2.
///
/// Writing n = q*p + s, the shift identity E^p = E + 1 gives
/// B_n = sum_{j<=q} binom(q,j) B_{s+j}; terms with s+j >= p are folded once
/// more with B_{p+t} = B_t + B_{t+1}. Throws IndexTooLarge for n >= p^2.
Residue bell_mod(std::uint64_t n, const BellRow& row);
Residue bell_mod(std::uint64_t n, const PrimeContext& ctx);

/// D_0..D_{p-1} mod p from D_n = n D_{n-1} + (-1)^n.
DerangementRow derangement_row(const PrimeContext& ctx);

/// sum_{r=0}^{n} (-1)^r n(n-1)...(n-r+1) mod p, which equals (-1)^n D_n.
/// As a polynomial in n it is periodic mod p, so n may be any residue
/// representative; only n mod p matters.
Residue signed_derangement_series_mod(std::uint64_t n, const PrimeContext& ctx);

/// D_n mod p via the falling-factorial series. Requires n < p.
Residue derangement_series_mod(std::uint64_t n, const PrimeContext& ctx);

/// S(n,k) mod p from the explicit alternating sum, with 0^0 = 1.
/// Requires k < p.
Residue stirling2_mod(std::uint64_t n, std::uint64_t k, const PrimeContext& ctx);

/// T_n(x) = sum_k S(n,k) x^k over Z/pZ. Requires n < p.
DensePoly touchard_poly(std::uint64_t n, const PrimeContext& ctx);

/// [T_0, ..., T_{n_max}] via the explicit Stirling formula, sharing the
/// power table across entries. Requires n_max < p.
std::vector<DensePoly> touchard_polys(std::uint64_t n_max, const PrimeContext& ctx);

/// [T_0, ..., T_{n_max}] via T_{n+1}(x) = x sum_k binom(n,k) T_k(x).
/// Requires n_max < p.
std::vector<DensePoly> touchard_polys_by_recursion(std::uint64_t n_max, const PrimeContext& ctx);

}  // namespace bellcong
