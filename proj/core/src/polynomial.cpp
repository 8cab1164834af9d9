#include "bellcong/polynomial.hpp"

#include <algorithm>
#include <string>

namespace bellcong {
namespace {

void check_same(const PrimeContext& a, const PrimeContext& b) {
  if (&a != &b && a.modulus() != b.modulus()) {
    throw ContextMismatch("polynomials over Z/" + std::to_string(a.modulus()) + " and Z/" +
                          std::to_string(b.modulus()) + " cannot be combined");
  }
}

}  // namespace

DensePoly::DensePoly(const PrimeContext& ctx, std::vector<std::uint32_t> coeffs)
    : ctx_(&ctx), coeffs_(std::move(coeffs)) {
  const std::uint32_t p = ctx.modulus();
  for (auto& c : coeffs_) c %= p;
  trim();
}

DensePoly DensePoly::from_integers(const PrimeContext& ctx,
                                   std::initializer_list<std::int64_t> coeffs) {
  std::vector<std::uint32_t> c;
  c.reserve(coeffs.size());
  for (std::int64_t v : coeffs) c.push_back(detail::reduce_signed(v, ctx.modulus()));
  return {ctx, std::move(c)};
}

DensePoly DensePoly::monomial(const PrimeContext& ctx, std::size_t degree, const Residue& c) {
  check_same(ctx, c.context());
  if (c.is_zero()) return DensePoly(ctx);
  std::vector<std::uint32_t> v(degree + 1, 0);
  v[degree] = c.value();
  return {ctx, std::move(v)};
}

Residue DensePoly::coeff(std::size_t i) const {
  return {i < coeffs_.size() ? coeffs_[i] : 0, *ctx_};
}

void DensePoly::trim() noexcept {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

bool operator==(const DensePoly& a, const DensePoly& b) { return equals(a, b); }

bool equals(const DensePoly& a, const DensePoly& b) {
  check_same(a.context(), b.context());
  return std::ranges::equal(a.coeffs(), b.coeffs());
}

DensePoly add(const DensePoly& a, const DensePoly& b) {
  check_same(a.context(), b.context());
  const std::uint32_t p = a.context().modulus();
  const auto& longer = a.coeffs().size() >= b.coeffs().size() ? a : b;
  const auto& shorter = &longer == &a ? b : a;
  std::vector<std::uint32_t> out(longer.coeffs().begin(), longer.coeffs().end());
  for (std::size_t i = 0; i < shorter.coeffs().size(); ++i) {
    out[i] = detail::add_mod(out[i], shorter.coeffs()[i], p);
  }
  return {a.context(), std::move(out)};
}

DensePoly negate(const DensePoly& a) {
  const std::uint32_t p = a.context().modulus();
  std::vector<std::uint32_t> out(a.coeffs().begin(), a.coeffs().end());
  for (auto& c : out) c = detail::neg_mod(c, p);
  return {a.context(), std::move(out)};
}

DensePoly sub(const DensePoly& a, const DensePoly& b) { return add(a, negate(b)); }

DensePoly scale(const DensePoly& a, const Residue& c) { return mul_monomial(a, 0, c); }

DensePoly mul_monomial(const DensePoly& a, std::size_t degree, const Residue& c) {
  check_same(a.context(), c.context());
  if (a.is_zero() || c.is_zero()) return DensePoly(a.context());
  const std::uint32_t p = a.context().modulus();
  std::vector<std::uint32_t> out(degree + a.coeffs().size(), 0);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    out[degree + i] = detail::mul_mod(a.coeffs()[i], c.value(), p);
  }
  return {a.context(), std::move(out)};
}

DensePoly mul(const DensePoly& a, const DensePoly& b) {
  check_same(a.context(), b.context());
  if (a.is_zero() || b.is_zero()) return DensePoly(a.context());
  const std::uint32_t p = a.context().modulus();
  const auto ac = a.coeffs();
  const auto bc = b.coeffs();
  std::vector<std::uint32_t> out(ac.size() + bc.size() - 1, 0);
  for (std::size_t i = 0; i < ac.size(); ++i) {
    if (ac[i] == 0) continue;
    for (std::size_t j = 0; j < bc.size(); ++j) {
      out[i + j] = detail::add_mod(out[i + j], detail::mul_mod(ac[i], bc[j], p), p);
    }
  }
  return {a.context(), std::move(out)};
}

Residue eval(const DensePoly& a, const Residue& x) {
  check_same(a.context(), x.context());
  const std::uint32_t p = a.context().modulus();
  std::uint32_t acc = 0;
  for (auto it = a.coeffs().rbegin(); it != a.coeffs().rend(); ++it) {
    acc = detail::add_mod(detail::mul_mod(acc, x.value(), p), *it, p);
  }
  return {acc, a.context()};
}

}  // namespace bellcong
