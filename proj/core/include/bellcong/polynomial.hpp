#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "bellcong/modarith.hpp"

namespace bellcong {

/// Dense polynomial over Z/pZ, coefficients ascending by degree.
///
/// Always normalized: the leading coefficient is nonzero and the zero
/// polynomial is the empty coefficient list, so equality is plain
/// coefficientwise comparison.
class DensePoly {
 public:
  explicit DensePoly(const PrimeContext& ctx) : ctx_(&ctx) {}
  DensePoly(const PrimeContext& ctx, std::vector<std::uint32_t> coeffs);

  /// Coefficients given as arbitrary integers, reduced into [0, p).
  static DensePoly from_integers(const PrimeContext& ctx,
                                 std::initializer_list<std::int64_t> coeffs);
  static DensePoly monomial(const PrimeContext& ctx, std::size_t degree, const Residue& c);
  static DensePoly constant(const Residue& c) { return monomial(c.context(), 0, c); }

  const PrimeContext& context() const noexcept { return *ctx_; }
  std::span<const std::uint32_t> coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  std::ptrdiff_t degree() const noexcept { return static_cast<std::ptrdiff_t>(coeffs_.size()) - 1; }
  /// Coefficient of x^i; zero beyond the degree.
  Residue coeff(std::size_t i) const;

  friend bool operator==(const DensePoly& a, const DensePoly& b);

 private:
  void trim() noexcept;

  const PrimeContext* ctx_;
  std::vector<std::uint32_t> coeffs_;
};

DensePoly add(const DensePoly& a, const DensePoly& b);
DensePoly sub(const DensePoly& a, const DensePoly& b);
DensePoly negate(const DensePoly& a);
DensePoly scale(const DensePoly& a, const Residue& c);
/// a(x) * c * x^degree.
DensePoly mul_monomial(const DensePoly& a, std::size_t degree, const Residue& c);
/// Schoolbook product.
DensePoly mul(const DensePoly& a, const DensePoly& b);
/// Horner evaluation at x.
Residue eval(const DensePoly& a, const Residue& x);
/// Exact coefficientwise identity; throws ContextMismatch across contexts.
bool equals(const DensePoly& a, const DensePoly& b);

}  // namespace bellcong
