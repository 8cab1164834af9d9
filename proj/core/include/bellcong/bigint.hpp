#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bellcong {

/// Arbitrary-precision signed integer.
///
/// Sign-magnitude with base-2^32 limbs, little-endian, no leading zero limb;
/// zero has an empty magnitude and sign 0. Multiplication is schoolbook and
/// division is Knuth's algorithm D. Division truncates toward zero like the
/// built-in integer types.
class BigInt {
 public:
  BigInt() = default;
  BigInt(std::int64_t v);  // NOLINT(google-explicit-constructor)

  static BigInt from_u64(std::uint64_t v);
  /// Decimal with an optional leading '-'. Throws std::invalid_argument.
  static BigInt from_string(std::string_view s);

  int sign() const noexcept { return sign_; }
  bool is_zero() const noexcept { return sign_ == 0; }
  std::span<const std::uint32_t> limbs() const noexcept { return mag_; }
  std::size_t bit_length() const noexcept;

  std::string to_string() const;
  /// Exact value; throws std::overflow_error if it does not fit.
  std::int64_t to_int64() const;

  BigInt operator-() const;
  BigInt abs() const;

  BigInt& operator+=(const BigInt& rhs);
  BigInt& operator-=(const BigInt& rhs);
  BigInt& operator*=(const BigInt& rhs);
  BigInt& operator/=(const BigInt& rhs);
  BigInt& operator%=(const BigInt& rhs);

  friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
  friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
  friend BigInt operator*(BigInt a, const BigInt& b) { return a *= b; }
  friend BigInt operator/(BigInt a, const BigInt& b) { return a /= b; }
  friend BigInt operator%(BigInt a, const BigInt& b) { return a %= b; }

  friend bool operator==(const BigInt& a, const BigInt& b) = default;
  friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b);

  /// Truncating quotient and remainder; throws std::domain_error on b = 0.
  static void divmod(const BigInt& a, const BigInt& b, BigInt& quot, BigInt& rem);

  /// Mathematical remainder in [0, m) for 0 < m < 2^32, also for negative values.
  std::uint32_t mod_u32(std::uint32_t m) const;

 private:
  void trim() noexcept;

  int sign_ = 0;
  std::vector<std::uint32_t> mag_;
};

BigInt gcd(BigInt a, BigInt b);
BigInt factorial(std::uint32_t n);
std::ostream& operator<<(std::ostream& os, const BigInt& v);

/// Exact rational num/den with den > 0 and gcd(|num|, den) = 1.
class Rational {
 public:
  Rational() : den_(1) {}
  Rational(BigInt num);  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num) : Rational(BigInt(num)) {}  // NOLINT(google-explicit-constructor)
  /// Throws std::domain_error on den = 0.
  Rational(BigInt num, BigInt den);

  const BigInt& num() const noexcept { return num_; }
  const BigInt& den() const noexcept { return den_; }
  bool is_integer() const noexcept { return den_ == BigInt(1); }
  bool is_zero() const noexcept { return num_.is_zero(); }

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) = default;

  std::string to_string() const;

 private:
  void normalize();

  BigInt num_;
  BigInt den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& v);

}  // namespace bellcong
